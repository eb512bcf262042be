"""Finite-order, exact verification of the free Meixner and q-Gaussian identities.

Every conditional-expectation statement tau(U | V) = W is checked through
its moment form tau(U V^n) = tau(W V^n) for n = 0..nmax; no conditional
expectation operator is ever built.  Each check returns a
:class:`VerificationReport` holding the exact sides of every mismatch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cumulants import (
    FreeFamily,
    QFamily,
    ckn,
    free_cumulants_from_moments,
    free_moments,
    mixed_free_moment,
    mixed_q_moment,
    moments_from_free_cumulants,
    q_wick_moment,
)
from .errors import ArgumentError, DegenerateBranchError, DomainError
from .meixner import (
    LawClass,
    MeixnerParams,
    WeightPair,
    classify,
    component_cumulants,
    convolution_moment_series,
    convolution_residual,
    cumulant_sequence,
    moment_series,
)
from .sequences import CumulantSequence, MomentSequence
from .series import TruncatedSeries, format_fraction, to_fraction

X = {0: Fraction(1)}
Y = {1: Fraction(1)}
SUM = {0: Fraction(1), 1: Fraction(1)}
DIFF = {0: Fraction(1), 1: Fraction(-1)}


@dataclass
class Failure:
    n: int
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": format_fraction(self.lhs), "rhs": format_fraction(self.rhs)}


@dataclass
class VerificationReport:
    claim: str
    params: dict[str, Fraction]
    orders: tuple[int, int]
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def compare(self, n: int, lhs, rhs, label: str | None = None) -> bool:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        if lhs == rhs:
            return True
        self.failures.append(Failure(n, lhs, rhs))
        if label:
            self.notes.append(f"mismatch in {label} at n={n}")
        return False

    def compare_series(self, lhs: TruncatedSeries, rhs: TruncatedSeries, label: str) -> bool:
        ok = True
        for n, (x, y) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            ok &= self.compare(n, x, y, label)
        return ok

    def param_key(self) -> str:
        return ",".join(f"{k}={format_fraction(v)}" for k, v in sorted(self.params.items()))

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "params": {k: format_fraction(v) for k, v in sorted(self.params.items())},
            "orders": list(self.orders),
            "verdict": self.verdict,
            "failures": [f.to_json() for f in self.failures],
            "notes": list(self.notes),
        }


def _fr(**kw) -> dict[str, Fraction]:
    return {k: to_fraction(v) for k, v in kw.items()}


def _pair(w) -> WeightPair:
    if isinstance(w, WeightPair):
        return w
    alpha, beta = w
    return WeightPair(alpha, beta)


def _binomial_note(report: VerificationReport, params: MeixnerParams) -> None:
    cls = classify(params)
    if cls is LawClass.FREE_BINOMIAL:
        report.notes.append("free binomial case (b < 0): treated as a formal moment sequence")


# ---------------------------------------------------------------------------
# combinatorial identities

def check_lemma22(R: CumulantSequence, kmax: int, nmax: int, max_total: int | None = None) -> VerificationReport:
    """c^k_n = sum_{i<n} m_i c^{k+1}_{n-1-i} + R_k m_n for 1 <= k <= kmax, 1 <= n <= nmax."""
    report = VerificationReport("lemma22", {}, (1, nmax))
    report.notes.append(f"k in 1..{kmax}" + (f", k+n <= {max_total}" if max_total else ""))
    top = max(k + n for k in range(1, kmax + 1) for n in range(1, nmax + 1)
              if max_total is None or k + n <= max_total)
    if top > R.order:
        raise ArgumentError(f"cumulants known to order {R.order}, need {top}")
    m = [Fraction(1)] + [moments_from_free_cumulants(R, i) for i in range(1, nmax + 1)]
    for k in range(1, kmax + 1):
        for n in range(1, nmax + 1):
            if max_total is not None and k + n > max_total:
                continue
            lhs = ckn(R, k, n)
            rhs = sum((m[i] * ckn(R, k + 1, n - 1 - i) for i in range(n)), Fraction(0)) + R[k] * m[n]
            report.compare(n, lhs, rhs, f"k={k}")
    return report


def ladder_series(R: CumulantSequence, k: int, order: int) -> TruncatedSeries:
    """Jet of C^(k)(z) = sum_n c^k_n z^{k+n}."""
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(0, order - k + 1):
        coeffs[k + n] = ckn(R, k, n)
    return TruncatedSeries(order, tuple(coeffs))


def check_series_ladder(R: CumulantSequence, kmax: int, order: int) -> VerificationReport:
    """C^(k) = M C^(k+1) + R_k z^k M, plus the k = 1 and 1/M specializations."""
    if order > R.order:
        raise ArgumentError(f"cumulants known to order {R.order}, need {order}")
    if kmax < 1:
        raise ArgumentError(f"kmax must be positive, got {kmax}")
    report = VerificationReport("ladder", {}, (0, order))
    report.notes.append(f"k in 1..{kmax}")
    M = MomentSequence(tuple(moments_from_free_cumulants(R, n) for n in range(1, order + 1))).to_series(order)
    C = {k: ladder_series(R, k, order) for k in range(1, kmax + 2)}
    for k in range(1, kmax + 1):
        rhs = M * C[k + 1] + (M * R[k]).shift(k)
        report.compare_series(C[k], rhs, f"ladder k={k}")
    report.compare_series(C[1], M - 1, "C^(1) = M - 1")
    inv = TruncatedSeries.constant(1, order) - C[2] - TruncatedSeries.monomial(1, order, R[1])
    report.compare_series(M.reciprocal(), inv, "1/M = 1 - C^(2) - R_1 z")
    return report


# ---------------------------------------------------------------------------
# free Meixner convolution and the characterization theorem

def _components(a, b, w: WeightPair, order: int) -> FreeFamily:
    params = MeixnerParams(a, b)
    return FreeFamily((component_cumulants(params, w.alpha, order), component_cumulants(params, w.beta, order)))


def check_convolution_quadratic(a, b, w, order: int) -> VerificationReport:
    """Zero residual of the quadratic, and additivity of the component cumulants."""
    w = _pair(w)
    params = MeixnerParams(a, b)
    report = VerificationReport("convolution", _fr(a=a, b=b, alpha=w.alpha, beta=w.beta), (0, order))
    _binomial_note(report, params)
    M = convolution_moment_series(params.a, params.b, w, order)
    report.compare_series(convolution_residual(params.a, params.b, M), TruncatedSeries.constant(0, order), "quadratic residual")
    total = free_cumulants_from_moments(MomentSequence.from_series(M), order)
    summed = component_cumulants(params, w.alpha, order) + component_cumulants(params, w.beta, order)
    for k in range(1, order + 1):
        report.compare(k, total[k], summed[k], "cumulant additivity")
    report.compare_series(M, free_moments(summed, order).to_series(order), "moments of summed cumulants")
    return report


def check_linear_regression(a, b, w, nmax: int) -> VerificationReport:
    """tau(X (X+Y)^n) = alpha tau((X+Y)^{n+1})."""
    w = _pair(w)
    w.require_normalized()
    params = MeixnerParams(a, b)
    report = VerificationReport("regression", _fr(a=a, b=b, alpha=w.alpha, beta=w.beta), (0, nmax))
    _binomial_note(report, params)
    fam = _components(a, b, w, nmax + 1)
    for n in range(nmax + 1):
        lhs = mixed_free_moment(fam, [X] + [SUM] * n)
        rhs = w.alpha * mixed_free_moment(fam, [SUM] * (n + 1))
        report.compare(n, lhs, rhs)
    return report


def _cubic_rhs_poly(a: Fraction, b: Fraction, m: Callable[[int], Fraction], n: int) -> Fraction:
    return b * b * m(n + 3) + 2 * b * a * m(n + 2) + (b + a * a) * m(n + 1) + a * m(n)


def check_theorem31_forward(a, b, w, nmax: int, rhs_a=None) -> VerificationReport:
    """Moment form of the cubic conditional-moment identity for X + Y.

    ``rhs_a`` replaces a on the right-hand side only; it exists for
    negative controls.
    """
    w = _pair(w)
    w.require_normalized()
    params = MeixnerParams(a, b)
    a, b = params.a, params.b
    if b == -1:
        raise DomainError("b = -1 makes the factor 1/(b+1)^2 singular")
    ra = a if rhs_a is None else to_fraction(rhs_a)
    report = VerificationReport("thm31-forward", _fr(a=a, b=b, alpha=w.alpha, beta=w.beta), (0, nmax))
    if rhs_a is not None:
        report.params["rhs_a"] = ra
        report.notes.append(f"right-hand side evaluated with a = {format_fraction(ra)}")
    _binomial_note(report, params)
    order = nmax + 3
    M = convolution_moment_series(a, b, w, order)
    m = M.__getitem__
    fam = _components(a, b, w, order)
    total = fam.generators[0] + fam.generators[1]
    weighted = {0: w.beta, 1: -w.alpha}
    ab = w.alpha * w.beta
    for n in range(nmax + 1):
        lhs = mixed_free_moment(fam, [weighted, SUM, weighted] + [SUM] * n)
        rhs = ab / (b + 1) ** 2 * _cubic_rhs_poly(ra, b, m, n)
        report.compare(n, lhs, rhs, "conditional cubic identity")
        c3 = ckn(total, 3, n)
        report.compare(n, lhs, ab * c3, "LHS = alpha beta c^(3)_n")
        report.compare(n, _cubic_rhs_poly(a, b, m, n), (b + 1) ** 2 * c3, "(b+1)^2 c^(3)_n")
    return report


def _cubic_factors(a: Fraction, b: Fraction, M: TruncatedSeries):
    order = M.order
    z = lambda coeffs: TruncatedSeries.from_coeffs(coeffs, order)
    first = z([b, a]) * M + (b + 1)
    second = z([b, a, 1]) * M * M - z([2 * b + 1, a]) * M + (b + 1)
    M2, M3 = M * M, M * M * M
    cubic = (
        z([b * b, 2 * b * a, b + a * a, a]) * M3
        - z([b * b, 2 * b * a, b * b + b + a * a]) * M2
        + M2.shift(2) * (b + 1) ** 2
        - (M - 1) * (b + 1) ** 2
    )
    return first, second, cubic


def recover_moments_from_identity(a, b, order: int) -> tuple[MomentSequence, VerificationReport]:
    """Solve the cubic moment identity for m_3, m_4, ... given m_1 = 0, m_2 = 1.

    At step n the unknown m_{n+3} enters the left side with weight b^2 and
    c^(3)_n once, through the one-block cumulant R_{n+3}, so the step is a
    linear equation with pivot b^2 - (b+1)^2 = -(2b+1).
    """
    params = MeixnerParams(a, b)
    a, b = params.a, params.b
    if b == -1:
        raise DomainError("b = -1 makes the factor 1/(b+1)^2 singular")
    pivot = b * b - (b + 1) ** 2
    if pivot == 0:
        raise DegenerateBranchError(
            "b = -1/2: the pivot -(2b+1) vanishes and the recursion cannot fix m_{n+3}; "
            f"the rejected branch M(z) = -(b+1)/(b+za) is then the Dirac measure at {format_fraction(-2 * a)}"
        )
    if order < 2:
        raise ArgumentError("order must be at least 2")
    m = [Fraction(1), Fraction(0), Fraction(1)]
    for n in range(0, order - 2):
        known = MomentSequence(tuple(m[1:]) + (Fraction(0),))
        R0 = free_cumulants_from_moments(known, n + 3)
        # with R_{n+3} = r: m_{n+3} = r + E and c^(3)_n = r + D
        R0 = R0.replace(n + 3, 0)
        E = moments_from_free_cumulants(R0, n + 3)
        D = ckn(R0, 3, n)
        rest = 2 * b * a * m[n + 2] + (b + a * a) * m[n + 1] + a * m[n]
        m.append(((b + 1) ** 2 * (D - E) - rest) / pivot)
    moments = MomentSequence(tuple(m[1:]))
    report = VerificationReport("thm31-converse", _fr(a=a, b=b), (0, order))
    _binomial_note(report, params)
    M = moments.to_series(order)
    zero = TruncatedSeries.constant(0, order)
    report.compare_series(convolution_residual(a, b, M), zero, "quadratic residual")
    first, second, cubic = _cubic_factors(a, b, M)
    report.compare_series(cubic, zero, "cubic relation")
    report.compare_series(first * second, zero, "factored cubic")
    report.notes.append(
        f"rejected factor (b+za)M+b+1 has constant term {format_fraction(first[0])} = 2b+1 != 0"
    )
    if b >= -Fraction(1, 2):
        expected = convolution_moment_series(a, b, WeightPair(Fraction(1, 2), Fraction(1, 2)), order)
    else:
        expected = moment_series(params, order)
        report.notes.append("compared with the mu_{a,b} jet: no (1/2,1/2) split is admissible")
    report.compare_series(M, expected, "recovered vs convolution moments")
    return moments, report


# ---------------------------------------------------------------------------
# free Levy processes

def _levy_family(a, b, times: tuple[Fraction, Fraction], order: int) -> FreeFamily:
    params = MeixnerParams(a, b)
    return FreeFamily(tuple(component_cumulants(params, t, order) for t in times))


def check_prop34(a, b, t, s, nmax: int) -> VerificationReport:
    """tau(X_t X_s X_t X_s^n) for a free Meixner Levy process, 0 < t < s."""
    params = MeixnerParams(a, b)
    a, b, t, s = params.a, params.b, to_fraction(t), to_fraction(s)
    if not 0 < t < s:
        raise DomainError(f"need 0 < t < s, got t = {t}, s = {s}")
    if b < 0:
        raise DomainError("b < 0: mu_{a,b} is not freely infinitely divisible, no Levy process exists")
    report = VerificationReport("prop34", _fr(a=a, b=b, t=t, s=s), (0, nmax))
    order = nmax + 3
    # generators: X_t and the free increment X_s - X_t
    fam = _levy_family(a, b, (t, s - t), order)
    mh = [mixed_free_moment(fam, [SUM] * k) for k in range(order + 1)]
    m = mh.__getitem__
    pref = (s - t) * t / (b + s) ** 2
    tail = lambda n: b * b * m(n + 3) + 2 * b * a * s * m(n + 2) + (b + a * a) * s * s * m(n + 1) + a * s ** 3 * m(n)
    for n in range(nmax + 1):
        lhs = mixed_free_moment(fam, [X, SUM, X] + [SUM] * n)
        rhs = pref / s ** 2 * tail(n) + t * t / s ** 2 * m(n + 3)
        report.compare(n, lhs, rhs, "tau(X_t X_s X_t | X_s)")
        centered = {0: t - s, 1: t}  # t X_s - s X_t
        lhs2 = mixed_free_moment(fam, [centered, SUM, centered] + [SUM] * n)
        report.compare(n, lhs2, pref * tail(n), "tau((tX_s - sX_t) X_s (tX_s - sX_t) | X_s)")
        report.compare(n, mixed_free_moment(fam, [X] + [SUM] * n), t / s * m(n + 1), "tau(X_t | X_s) = (t/s) X_s")
    return report


def check_prop36(a, b, t, nmax: int, kmax: int | None = None) -> VerificationReport:
    """Vanishing third conditional central moment and tau(X_t^3 | X_2t)."""
    params = MeixnerParams(a, b)
    a, b, t = params.a, params.b, to_fraction(t)
    if t <= 0:
        raise DomainError(f"need t > 0, got {t}")
    if b < 0:
        raise DomainError("b < 0: mu_{a,b} is not freely infinitely divisible, no Levy process exists")
    kmax = nmax if kmax is None else kmax
    report = VerificationReport("prop36", _fr(a=a, b=b, t=t), (0, max(nmax, kmax)))
    order = max(nmax, kmax) + 3
    fam = _levy_family(a, b, (t, t), order)  # X_t and X_2t - X_t
    mh = [mixed_free_moment(fam, [SUM] * k) for k in range(order + 1)]
    m = mh.__getitem__
    for k in range(kmax + 1):
        report.compare(k, mixed_free_moment(fam, [DIFF] * 3 + [SUM] * k), 0, "tau((2X_t - X_2t)^3 X_2t^k) = 0")
    for n in range(nmax + 1):
        lhs = mixed_free_moment(fam, [X] * 3 + [SUM] * n)
        rhs = (
            (b * b * m(n + 3) + 4 * b * a * t * m(n + 2) + 4 * (b + a * a) * t * t * m(n + 1) + 8 * a * t ** 3 * m(n))
            / (8 * (b + 2 * t) ** 2)
            + m(n + 3) / 8
            + (4 * t * t * m(n + 1) + 2 * t * a * m(n + 2) + b * m(n + 3)) / (4 * (b + 2 * t))
        )
        report.compare(n, lhs, rhs, "tau(X_t^3 | X_2t)")
        rearranged = (
            8 * mixed_free_moment(fam, [X, X] + [SUM] * (n + 1))
            + 4 * mixed_free_moment(fam, [X, SUM, X] + [SUM] * n)
            - 2 * m(n + 3)
        ) / 8
        report.compare(n, lhs, rearranged, "expansion of (2X_t - X_2t)^3")
    return report


# ---------------------------------------------------------------------------
# q-Gaussian variables

def _check_q(q) -> Fraction:
    q = to_fraction(q)
    if not -1 < q < 1:
        raise DomainError(f"q must lie in (-1, 1), got {q}")
    return q


def check_qgaussian_forward(q, nmax: int, inject: dict[int, Fraction] | None = None) -> VerificationReport:
    """E((G_f-G_g)(G_f+G_g)(G_f-G_g)(G_f+G_g)^n) = 2q E((G_f+G_g)^{n+1}), f orthonormal to g.

    By default moments come from the q-Wick formula.  ``inject`` maps
    k -> R^q_k added to both generators on top of R^q_2 = 1; the
    moments are then taken from the q-cumulant expansion instead.
    """
    q = _check_q(q)
    report = VerificationReport("qgauss-forward", _fr(q=q), (0, nmax))
    if inject:
        order = max(nmax + 3, max(inject))
        vals = [Fraction(0)] * order
        vals[1] = Fraction(1)
        for k, v in inject.items():
            vals[k - 1] += to_fraction(v)
            report.params[f"inject_R{k}"] = to_fraction(v)
        gen = CumulantSequence(tuple(vals))
        fam = QFamily(q, generators=(gen, gen))
        moment = lambda w: mixed_q_moment(fam, w)
        report.notes.append("moments from the q-cumulant expansion with injected cumulants")
    else:
        fam = QFamily.gaussian(q, ((1, 0), (0, 1)))
        moment = lambda w: q_wick_moment(fam, w)
    for n in range(nmax + 1):
        lhs = moment([DIFF, SUM, DIFF] + [SUM] * n)
        rhs = 2 * q * moment([SUM] * (n + 1))
        report.compare(n, lhs, rhs)
        if n % 2 == 0 and not inject and (lhs or rhs):
            report.notes.append(f"n={n} is even but a side is nonzero")
    return report


def recover_q_cumulants_from_identity(q, order: int) -> tuple[CumulantSequence, VerificationReport]:
    """Solve the q-identity for R^q_{n+3}(G_f + G_g), n = 0, 1, ..., by induction.

    G_f and G_g are q-independent and identically distributed, so each
    carries half of every cumulant of the sum.  The one-block term of the
    word D S D S^n contributes R^q_{n+3}(S) with coefficient 1 and nothing
    else involves it, which gives the unknown directly.
    """
    q = _check_q(q)
    if order < 2:
        raise ArgumentError("order must be at least 2")
    report = VerificationReport("qgauss-converse", _fr(q=q), (3, order))
    r = [Fraction(0)] * order  # r[k-1] = R^q_k(G_f + G_g)
    r[1] = Fraction(2)

    def family(values):
        gen = CumulantSequence(tuple(v / 2 for v in values))
        return QFamily(q, generators=(gen, gen))

    for n in range(0, order - 2):
        k = n + 3
        trial = list(r)
        trial[k - 1] = Fraction(0)
        base = mixed_q_moment(family(trial), [DIFF, SUM, DIFF] + [SUM] * n)
        trial[k - 1] = Fraction(1)
        slope = mixed_q_moment(family(trial), [DIFF, SUM, DIFF] + [SUM] * n) - base
        if slope != 1:
            report.notes.append(f"unexpected coefficient {format_fraction(slope)} of R^q_{k}")
        target = 2 * q * mixed_q_moment(family(r), [SUM] * (n + 1))
        r[k - 1] = (target - base) / slope
        report.compare(k, r[k - 1], 0, f"R^q_{k}(G_f+G_g) = 0")
    return CumulantSequence(tuple(r)), report


# ---------------------------------------------------------------------------
# grids

def random_cumulants(rng: random.Random, order: int, spread: int = 5) -> CumulantSequence:
    return CumulantSequence(tuple(
        Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(order)
    ))


def random_moments(rng: random.Random, order: int, spread: int = 5) -> MomentSequence:
    return MomentSequence(tuple(
        Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(order)
    ))


def _ab_grid(section: dict) -> list[tuple[Fraction, Fraction]]:
    if "ab" in section:
        return [(to_fraction(a), to_fraction(b)) for a, b in section["ab"]]
    return [(to_fraction(a), to_fraction(b)) for a in section.get("a", []) for b in section.get("b", [])]


def _weights(section: dict) -> list[WeightPair]:
    return [WeightPair(to_fraction(x), to_fraction(y)) for x, y in section.get("weights", [["1/2", "1/2"]])]


def run_claim(name: str, section: dict) -> list[VerificationReport]:
    """Run every grid point of one claim section (see ``data/default_grid.json``)."""
    reports: list[VerificationReport] = []
    rng = random.Random(section.get("seed", 0))
    if name == "lemma22":
        kmax, nmax = section.get("kmax", 8), section.get("nmax", 8)
        total = section.get("max_total", kmax + nmax)
        seqs = [cumulant_sequence(MeixnerParams(a, b), total) for a, b in _ab_grid(section)]
        seqs += [random_cumulants(rng, total) for _ in range(section.get("random_sequences", 0))]
        for i, R in enumerate(seqs):
            rep = check_lemma22(R, kmax, nmax, total)
            rep.params["sequence"] = Fraction(i)
            reports.append(rep)
    elif name == "ladder":
        kmax, order = section.get("kmax", 3), section.get("order", 10)
        for a, b in _ab_grid(section):
            rep = check_series_ladder(cumulant_sequence(MeixnerParams(a, b), order), kmax, order)
            rep.params.update(a=a, b=b)
            reports.append(rep)
        for i in range(section.get("random_sequences", 0)):
            rep = check_series_ladder(random_cumulants(rng, order), kmax, order)
            rep.params["sequence"] = Fraction(i)
            reports.append(rep)
    elif name == "convolution":
        for a, b in _ab_grid(section):
            for w in _weights(section):
                reports.append(check_convolution_quadratic(a, b, w, section.get("order", 12)))
    elif name == "regression":
        for a, b in _ab_grid(section):
            for w in _weights(section):
                reports.append(check_linear_regression(a, b, w, section.get("nmax", 7)))
    elif name == "thm31":
        for a, b in _ab_grid(section):
            for w in _weights(section):
                reports.append(check_theorem31_forward(a, b, w, section.get("nmax", 6)))
    elif name == "converse":
        for a, b in _ab_grid(section):
            reports.append(recover_moments_from_identity(a, b, section.get("order", 10))[1])
    elif name == "prop34":
        for a, b in _ab_grid(section):
            for t, s in section.get("ts", [[1, 2]]):
                reports.append(check_prop34(a, b, to_fraction(t), to_fraction(s), section.get("nmax", 4)))
    elif name == "prop36":
        for a, b in _ab_grid(section):
            for t in section.get("t", [1]):
                reports.append(check_prop36(a, b, to_fraction(t), section.get("nmax", 3), section.get("kmax")))
    elif name == "qgauss":
        for q in section.get("q", ["1/2"]):
            reports.append(check_qgaussian_forward(to_fraction(q), section.get("nmax", 9)))
    elif name == "qconverse":
        for q in section.get("q", ["1/2"]):
            reports.append(recover_q_cumulants_from_identity(to_fraction(q), section.get("order", 8))[1])
    else:
        raise ArgumentError(f"unknown claim {name!r}")
    return sorted(reports, key=lambda r: (r.claim, r.param_key()))


CLAIMS = ("lemma22", "ladder", "convolution", "regression", "thm31", "converse", "prop34", "prop36", "qgauss", "qconverse")


def run_grid(grid: dict, claims=CLAIMS) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    for name in claims:
        if name in grid:
            reports.extend(run_claim(name, grid[name]))
    return reports
