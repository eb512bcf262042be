"""The free Meixner laws mu_{a,b}: classes, moment jets, free cumulants.

Moment jets come from solving

    (z^2 + a z + b) M^2 - (1 + a z + 2b) M + 1 + b = 0,   M(0) = 1,

one coefficient at a time.  The pivot of that solve is always -1, so the
recursion is well defined for every (a, b), including b = 0 where the
closed-form quotient has a removable 0/0 at the origin.

Scaled components
-----------------
A free cumulant R_k(mu_{a,b}) is a polynomial in (a, b), homogeneous of
degree k - 2 when a has weight 1 and b weight 2.  If X / sqrt(w) has law
mu_{a/sqrt(w), b/w}, then

    R_k(X) = w^{k/2} R_k(mu_{a/sqrt(w), b/w}) = w R_k(mu_{a,b}),

so the weighted component keeps every cumulant rational without ever
taking sqrt(w).  The test suite pins this rule against an independent
oracle (free cumulants of the convolution jet split in proportion w).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .config import CAPS
from .errors import ArgumentError, DomainError
from .sequences import CumulantSequence, MomentSequence, dilate_moments
from .series import TruncatedSeries, format_fraction, to_fraction

__all__ = [
    "LawClass",
    "MeixnerParams",
    "WeightPair",
    "classify",
    "component_cumulants",
    "convolution_moment_series",
    "convolution_residual",
    "closed_form_moment_series",
    "cumulant_sequence",
    "dilate_moments",
    "law_summary",
    "moment_series",
]


class LawClass(str, Enum):
    SEMICIRCLE = "Semicircle"
    FREE_POISSON = "FreePoisson"
    FREE_PASCAL = "FreePascal"
    FREE_GAMMA = "FreeGamma"
    PURE_FREE_MEIXNER = "PureFreeMeixner"
    FREE_BINOMIAL = "FreeBinomial"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MeixnerParams:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = to_fraction(self.a), to_fraction(self.b)
        if b < -1:
            raise DomainError(f"free Meixner laws need b >= -1, got b = {b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class WeightPair:
    """Variance split (alpha, beta) between two free components."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        alpha, beta = to_fraction(self.alpha), to_fraction(self.beta)
        if alpha <= 0 or beta <= 0:
            raise DomainError(f"weights must be positive, got ({alpha}, {beta})")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def total(self) -> Fraction:
        return self.alpha + self.beta

    def require_normalized(self) -> None:
        if self.total != 1:
            raise DomainError(f"weights must sum to 1, got {self.alpha} + {self.beta} = {self.total}")


def _params(a, b=None) -> MeixnerParams:
    if isinstance(a, MeixnerParams):
        return a
    return MeixnerParams(a, b)


def _order(order: int) -> int:
    if order < 0:
        raise ArgumentError(f"order must be nonnegative, got {order}")
    if order > CAPS.order:
        raise ArgumentError(f"order {order} exceeds the working cap {CAPS.order}")
    return order


def classify(params: MeixnerParams) -> LawClass:
    a, b = params.a, params.b
    if b < -1:
        raise DomainError(f"free Meixner laws need b >= -1, got b = {b}")
    if b < 0:
        return LawClass.FREE_BINOMIAL
    if b == 0:
        return LawClass.SEMICIRCLE if a == 0 else LawClass.FREE_POISSON
    disc = a * a - 4 * b
    if disc > 0:
        return LawClass.FREE_PASCAL
    if disc == 0:
        return LawClass.FREE_GAMMA
    return LawClass.PURE_FREE_MEIXNER


def _solve_quadratic(a: Fraction, b: Fraction, order: int) -> TruncatedSeries:
    # coefficient of z^n: b*T_n + a*S_{n-1} + S_{n-2} - a*m_{n-1} - m_n = 0,
    # with S = M^2 and T_n the part of S_n not involving m_0 * m_n.
    m = [Fraction(1)]
    sq = [Fraction(1)]  # coefficients of M^2 computed so far
    for n in range(1, order + 1):
        t_n = sum((m[i] * m[n - i] for i in range(1, n)), Fraction(0))
        s1 = sq[n - 1]
        s2 = sq[n - 2] if n >= 2 else Fraction(0)
        m_n = b * t_n + a * s1 + s2 - a * m[n - 1]
        m.append(m_n)
        sq.append(t_n + 2 * m_n)
    return TruncatedSeries(order, tuple(m))


def moment_series(params: MeixnerParams, order: int) -> TruncatedSeries:
    """Jet of M(z) = 1 + m_1 z + m_2 z^2 + ... for mu_{a,b}."""
    params = _params(params)
    return _solve_quadratic(params.a, params.b, _order(order))


def closed_form_moment_series(params: MeixnerParams, order: int) -> TruncatedSeries:
    """The quotient form of M(z), usable only when b != 0."""
    params = _params(params)
    a, b = params.a, params.b
    if b == 0:
        raise DomainError("the quotient form of M(z) is 0/0 at z = 0 when b = 0")
    order = _order(order)
    one_minus_az = TruncatedSeries.from_coeffs([1, -a], order)
    radicand = one_minus_az * one_minus_az - TruncatedSeries.monomial(2, order, 4 * (1 + b))
    numerator = TruncatedSeries.from_coeffs([1 + 2 * b, a], order) - radicand.sqrt_one()
    denominator = TruncatedSeries.from_coeffs([2 * b, 2 * a, 2], order)
    return numerator / denominator


def cumulant_sequence(params: MeixnerParams, order: int) -> CumulantSequence:
    """R_1 .. R_order of mu_{a,b} from the jet of its R-transform."""
    params = _params(params)
    a, b = params.a, params.b
    order = _order(order)
    # R-transform sum_i R_{i+1} z^i needs a jet of order `order - 1`
    jet = max(order - 1, 0)
    one_minus_az = TruncatedSeries.from_coeffs([1, -a], jet)
    radicand = one_minus_az * one_minus_az - TruncatedSeries.monomial(2, jet, 4 * b)
    r = TruncatedSeries.monomial(1, jet, 2) / (one_minus_az + radicand.sqrt_one())
    return CumulantSequence(r.coeffs[:order])


def component_cumulants(params: MeixnerParams, weight, order: int) -> CumulantSequence:
    """Cumulants of the weight-w component X with X/sqrt(w) ~ mu_{a/sqrt(w), b/w}."""
    weight = to_fraction(weight)
    if weight <= 0:
        raise DomainError(f"component weight must be positive, got {weight}")
    return cumulant_sequence(params, order).scale(weight)


def _check_binomial(b: Fraction, w: WeightPair) -> None:
    if b < 0 and b < max(-w.alpha, -w.beta):
        raise DomainError(
            f"free binomial case needs b >= max(-alpha, -beta) = {max(-w.alpha, -w.beta)}, got b = {b}"
        )


def convolution_moment_series(a, b, w: WeightPair, order: int) -> TruncatedSeries:
    """Moment jet of X + Y for the (alpha, beta) components of mu_{a,b}."""
    params = MeixnerParams(a, b)
    w.require_normalized()
    _check_binomial(params.b, w)
    return _solve_quadratic(params.a, params.b, _order(order))


def convolution_residual(a, b, M: TruncatedSeries) -> TruncatedSeries:
    """Left-hand side of the quadratic relation evaluated on the jet M."""
    a, b = to_fraction(a), to_fraction(b)
    order = M.order
    p = TruncatedSeries.from_coeffs([b, a, 1], order)
    lin = TruncatedSeries.from_coeffs([1 + 2 * b, a], order)
    return p * M * M - lin * M + (1 + b)


def law_summary(params: MeixnerParams, order: int) -> dict:
    """JSON-ready description used by the CLI."""
    params = _params(params)
    M = moment_series(params, order)
    return {
        "a": format_fraction(params.a),
        "b": format_fraction(params.b),
        "class": classify(params).value,
        "moments": MomentSequence.from_series(M).to_json(),
        "cumulants": cumulant_sequence(params, order).to_json(),
    }
