import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freemeixner.cumulants import (
    FreeFamily,
    QFamily,
    ckn,
    free_cumulants_from_moments,
    free_moments,
    mixed_free_cumulant,
    mixed_free_moment,
    mixed_q_moment,
    moments_from_free_cumulants,
    q_cumulants_from_moments,
    q_moments,
    q_moments_from_cumulants,
    q_wick_moment,
)
from freemeixner.errors import ArgumentError, DomainError
from freemeixner.meixner import MeixnerParams, cumulant_sequence, moment_series
from freemeixner.sequences import CumulantSequence, MomentSequence

from oracles import (
    catalan_recurrence,
    crosses,
    free_moment_by_recursion,
    partitions_by_labels,
    restricted_crossings_scan,
)

HALF = Fraction(1, 2)
SEMI = CumulantSequence.of(0, 1, 0, 0, 0, 0, 0, 0, 0, 0)
QS = [Fraction(0), HALF, -HALF, Fraction(1, 3)]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def cumulants(order):
    return st.lists(rationals, min_size=order, max_size=order).map(lambda v: CumulantSequence(tuple(v)))


def random_family(rng, gens, order):
    return tuple(CumulantSequence(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(order)))
                 for _ in range(gens))


def brute_moment(gens, letters, q=None):
    """Sum over all partitions by label assignment, monochromatic cumulants per block."""
    n = len(letters)
    total = Fraction(0)
    for blocks in partitions_by_labels(n):
        if q is None:
            if crosses(blocks):
                continue
            term = Fraction(1)
        else:
            term = Fraction(q) ** restricted_crossings_scan(blocks)
        for b in blocks:
            block_value = Fraction(0)
            for j, g in enumerate(gens):
                c = Fraction(1)
                for i in b:
                    c *= letters[i - 1].get(j, 0)
                block_value += c * g[len(b)]
            term *= block_value
        total += term
    return total


class TestFreeTransforms:
    def test_examples(self):
        assert moments_from_free_cumulants(SEMI, 4) == 2
        c = Fraction(3, 2)
        R = CumulantSequence.of(c, 0, 0, 0, 0, 0)
        assert all(moments_from_free_cumulants(R, n) == c ** n for n in range(1, 7))

    def test_catalan_inverse(self):
        m = MomentSequence(tuple(catalan_recurrence(n // 2) if n % 2 == 0 else 0 for n in range(1, 11)))
        assert free_cumulants_from_moments(m) == SEMI

    def test_dirac_at_one(self):
        assert free_cumulants_from_moments(MomentSequence.of(*[1] * 8)).values == (1,) + (0,) * 7

    def test_order_errors(self):
        with pytest.raises(ArgumentError):
            moments_from_free_cumulants(SEMI.truncate(3), 4)
        with pytest.raises(ArgumentError):
            free_cumulants_from_moments(MomentSequence.of(0, 1), 3)

    @settings(max_examples=30, deadline=None)
    @given(cumulants(10))
    def test_matches_recursion_oracle(self, R):
        m = free_moments(R)
        assert all(m[n] == free_moment_by_recursion(list(R.values), n) for n in range(1, 11))

    @settings(max_examples=30, deadline=None)
    @given(cumulants(10))
    def test_round_trip(self, R):
        assert free_cumulants_from_moments(free_moments(R)) == R

    def test_ckn_examples(self):
        R = CumulantSequence.of(*range(1, 8))
        assert ckn(R, 2, 0) == R[2]
        assert ckn(R, 1, 3) == moments_from_free_cumulants(R, 4)
        for n in range(0, 9):
            want = catalan_recurrence(n // 2) if n % 2 == 0 else 0
            assert ckn(SEMI, 2, n) == want

    def test_ckn_errors(self):
        with pytest.raises(ArgumentError):
            ckn(SEMI, 0, 2)
        with pytest.raises(ArgumentError):
            ckn(SEMI, 2, -1)


class TestFreeFamilies:
    def test_mixed_cumulant_examples(self):
        fam = FreeFamily((SEMI, SEMI))
        assert mixed_free_cumulant(fam, [{0: 1, 1: -1}, {0: 1, 1: 1}]) == 0
        a, b = Fraction(1, 4), Fraction(3, 4)
        R = cumulant_sequence(MeixnerParams(1, 1), 8)
        fam = FreeFamily((R.scale(a), R.scale(b)))
        diff, total = {0: b, 1: -a}, {0: 1, 1: 1}
        for k in range(1, 9):
            assert mixed_free_cumulant(fam, [diff] + [total] * (k - 1)) == 0
        assert mixed_free_cumulant(fam, [diff, total, diff]) == b * b * fam.generators[0][3] + a * a * fam.generators[1][3]

    def test_mixed_cumulant_closed_form(self):
        a, b = Fraction(1, 3), Fraction(2, 3)
        R = cumulant_sequence(MeixnerParams(2, 1), 8)
        fam = FreeFamily((R.scale(a), R.scale(b)))
        diff, total = {0: b, 1: -a}, {0: 1, 1: 1}
        # two diff slots, rest total: beta^2 R_k(X) + alpha^2 R_k(Y) = alpha beta R_k(X+Y)
        for k in range(2, 9):
            args = [diff, total, diff] + [total] * (k - 3) if k >= 3 else [diff, diff]
            assert mixed_free_cumulant(fam, args) == a * b * R[k]

    def test_word_examples(self):
        assert mixed_free_moment(FreeFamily((SEMI,)), [0, 0, 0, 0]) == 2
        half = SEMI.scale(HALF)
        fam = FreeFamily((half, half))
        d, s = {0: 1, 1: -1}, {0: 1, 1: 1}
        assert mixed_free_moment(fam, [d, s, d, s]) == 0
        assert mixed_free_moment(fam, []) == 1

    @pytest.mark.parametrize("ab", [(0, 0), (1, 1), (2, 1), (1, 0)])
    def test_projection_onto_sum(self, ab):
        R = cumulant_sequence(MeixnerParams(*ab), 9)
        a, b = Fraction(1, 4), Fraction(3, 4)
        fam = FreeFamily((R.scale(a), R.scale(b)))
        s = {0: 1, 1: 1}
        for n in range(0, 8):
            assert mixed_free_moment(fam, [0] + [s] * n) == a * mixed_free_moment(fam, [s] * (n + 1))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force(self, n):
        rng = random.Random(100 + n)
        gens = random_family(rng, 2, n)
        letters = [{0: Fraction(rng.randint(-2, 2)), 1: Fraction(rng.randint(-2, 2))} for _ in range(n)]
        assert mixed_free_moment(FreeFamily(gens), letters) == brute_moment(gens, letters)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_cyclic_invariance(self, n):
        rng = random.Random(n)
        fam = FreeFamily(random_family(rng, 3, n))
        w = [rng.randrange(3) for _ in range(n)]
        base = mixed_free_moment(fam, w)
        for shift in range(1, n):
            assert mixed_free_moment(fam, w[shift:] + w[:shift]) == base

    def test_multilinearity(self):
        rng = random.Random(7)
        fam = FreeFamily(random_family(rng, 2, 5))
        u, v = {0: 1, 1: 2}, {0: -1, 1: 3}
        c = Fraction(5, 3)
        mixed = {0: u[0] + c * v[0], 1: u[1] + c * v[1]}
        for pos in range(5):
            w = [0, 1, {0: 1, 1: 1}, 1, 0]
            wu, wv, wm = list(w), list(w), list(w)
            wu[pos], wv[pos], wm[pos] = u, v, mixed
            assert mixed_free_moment(fam, wm) == mixed_free_moment(fam, wu) + c * mixed_free_moment(fam, wv)

    def test_family_errors(self):
        with pytest.raises(ArgumentError):
            FreeFamily(())
        with pytest.raises(ArgumentError):
            FreeFamily((SEMI, SEMI.truncate(3)))
        with pytest.raises(ArgumentError):
            mixed_free_cumulant(FreeFamily((SEMI.truncate(2),)), [0, 0, 0])


class TestQTransforms:
    @pytest.mark.parametrize("q", QS)
    def test_gaussian_fourth_moment(self, q):
        assert q_moments_from_cumulants(SEMI, 4, q) == 2 + q

    def test_second_moment(self):
        assert q_moments_from_cumulants(CumulantSequence.of(0, 7), 2, HALF) == 7

    @settings(max_examples=20, deadline=None)
    @given(cumulants(8))
    def test_q0_is_free(self, R):
        assert q_moments(R, 0) == free_moments(R)

    @pytest.mark.parametrize("q", QS)
    def test_gaussian_moments_are_pairing_sums(self, q):
        m = q_moments(SEMI.truncate(6), q)
        for n in range(1, 7):
            assert m[n] == brute_moment((SEMI,), [{0: Fraction(1)}] * n, q)

    @pytest.mark.parametrize("q", QS)
    def test_gaussian_cumulants(self, q):
        assert q_cumulants_from_moments(q_moments(SEMI, q), 10, q) == SEMI

    @pytest.mark.parametrize("q", [Fraction(0), HALF, -HALF])
    def test_round_trip_random(self, q):
        rng = random.Random(int(q * 10) + 50)
        for _ in range(5):
            m = MomentSequence(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(8)))
            assert q_moments(q_cumulants_from_moments(m, 8, q), q) == m

    def test_q_domain(self):
        for bad in (1, -1, 2):
            with pytest.raises(DomainError):
                q_moments_from_cumulants(SEMI, 2, bad)


class TestQFamilies:
    @pytest.mark.parametrize("q", QS)
    def test_wick_examples(self, q):
        one = QFamily.gaussian(q, [[1]])
        assert q_wick_moment(one, [0, 0, 0]) == 0
        assert q_wick_moment(one, [0, 0, 0, 0]) == 2 + q
        two = QFamily.gaussian(q, [[1, 0], [0, 1]])
        d, s = {0: 1, 1: -1}, {0: 1, 1: 1}
        assert q_wick_moment(two, [d, s, d, s]) == 4 * q

    @pytest.mark.parametrize("q", QS)
    def test_wick_matches_cumulant_form(self, q):
        rng = random.Random(3)
        wick = QFamily.gaussian(q, [[1, 0], [0, 2]])
        cum = QFamily(q, generators=(SEMI.truncate(8), SEMI.truncate(8).scale(2)))
        for n in range(1, 9):
            w = [{0: Fraction(rng.randint(-2, 2)), 1: Fraction(rng.randint(-2, 2))} for _ in range(n)]
            assert q_wick_moment(wick, w) == mixed_q_moment(cum, w)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force(self, n):
        rng = random.Random(200 + n)
        gens = random_family(rng, 2, n)
        letters = [{0: Fraction(rng.randint(-2, 2)), 1: Fraction(rng.randint(-2, 2))} for _ in range(n)]
        for q in QS:
            assert mixed_q_moment(QFamily(q, generators=gens), letters) == brute_moment(gens, letters, q)

    def test_q0_reduces_to_free(self):
        rng = random.Random(11)
        gens = random_family(rng, 2, 7)
        for n in range(1, 8):
            w = [rng.randrange(2) for _ in range(n)]
            assert mixed_q_moment(QFamily(HALF, generators=gens), w, q=0) == mixed_free_moment(FreeFamily(gens), w)

    def test_centered_length_one(self):
        fam = QFamily(HALF, generators=(SEMI, SEMI))
        assert mixed_q_moment(fam, [{0: 3, 1: -1}]) == 0

    def test_family_errors(self):
        with pytest.raises(ArgumentError):
            QFamily(HALF)
        with pytest.raises(ArgumentError):
            QFamily.gaussian(HALF, [[1, 1], [0, 1]])
        with pytest.raises(ArgumentError):
            q_wick_moment(QFamily(HALF, generators=(SEMI,)), [0, 0])
        with pytest.raises(ArgumentError):
            mixed_q_moment(QFamily.gaussian(HALF, [[1]]), [0, 0])
        with pytest.raises(DomainError):
            QFamily.gaussian(1, [[1]])


def test_semicircle_moment_series_agrees():
    m = MomentSequence.from_series(moment_series(MeixnerParams(0, 0), 10))
    assert free_moments(SEMI) == m
