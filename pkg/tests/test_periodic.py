from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpf, workprec

from conftest import TOL_DEFAULT, assert_close, residual
from cotsums.errors import NotCoprime, ParityViolation, PeriodMismatch, WorkLimitExceeded
from cotsums.periodic import (PeriodicMap, alt_sawtooth_map, alt_sign_map,
                              bernoulli_dft_map, bernoulli_map,
                              closed_form_dft, constant_map,
                              constrained_product_sum, convolve, defining_map,
                              delta_map, dft, dilate, involution_residual,
                              map_max_residual, parseval_sides,
                              random_even_map, random_odd_map,
                              random_rational_map, sawtooth_dft_map,
                              sawtooth_map, spectral_product_sum)
from cotsums.exact import mod_inverse


class TestPeriodicMap:
    def test_indexing_wraps(self):
        f = PeriodicMap((Fraction(1), Fraction(2), Fraction(3)))
        assert f(4) == Fraction(2)
        assert f(-1) == Fraction(3)

    def test_parity_detection(self):
        assert sawtooth_map(7).parity == "odd"
        assert constant_map(2, 5).parity == "even"
        assert random_odd_map(9, 3).parity == "odd"
        assert random_even_map(9, 3).parity == "even"
        assert PeriodicMap((Fraction(0), Fraction(1), Fraction(2))).parity is None

    def test_exactness_flag(self):
        assert sawtooth_map(5).exact
        assert not sawtooth_dft_map(5).exact


class TestDft:
    def test_sawtooth_k3(self):
        fhat = dft(sawtooth_map(3))
        with workprec(300):
            expected = mpmath.mpc(0, 1) * mpmath.sqrt(3) / 6
            assert_close(fhat.values[1], expected)
            assert_close(fhat.values[0], 0)

    def test_constant_k4(self):
        fhat = dft(constant_map(1, 4))
        assert_close(fhat.values[0], 4)
        for n in (1, 2, 3):
            assert_close(fhat.values[n], 0)

    def test_sawtooth_k2_is_zero(self):
        f = sawtooth_map(2)
        assert f.values == (Fraction(0), Fraction(0))
        fhat = dft(f)
        for v in fhat.values:
            assert_close(v, 0)

    @pytest.mark.parametrize("make,k", [
        (sawtooth_map, 5),
        (lambda k: random_rational_map(k, 11), 8),
        (delta_map, 3),
    ])
    def test_involution(self, make, k):
        res = involution_residual(make(k))
        assert res < mpf(2) ** -248


class TestConvolve:
    def test_delta_is_identity(self):
        f = random_rational_map(6, 2)
        g = convolve(delta_map(6), f)
        assert g.values == f.values

    def test_sawtooth_square_at_zero(self):
        g = convolve(sawtooth_map(3), sawtooth_map(3))
        assert g.values[0] == Fraction(-1, 18)

    def test_exact_closure(self):
        g = convolve(random_rational_map(5, 1), random_rational_map(5, 2))
        assert g.exact

    @given(st.integers(min_value=1, max_value=9), st.integers(), st.integers())
    @settings(max_examples=25, deadline=None)
    def test_commutative(self, k, s1, s2):
        f, g = random_rational_map(k, s1), random_rational_map(k, s2)
        assert convolve(f, g).values == convolve(g, f).values

    def test_period_mismatch(self):
        with pytest.raises(PeriodMismatch):
            convolve(sawtooth_map(3), sawtooth_map(4))

    @pytest.mark.parametrize("k", [4, 6, 7])
    def test_convolution_theorem(self, k):
        # dft(f * g) = dft(f) dft(g) pointwise
        f, g = random_rational_map(k, 5), random_rational_map(k, 6)
        lhs = dft(convolve(f, g))
        ff, gg = dft(f), dft(g)
        with workprec(300):
            prod = PeriodicMap([ff.values[n] * gg.values[n] for n in range(k)],
                               parity=None)
        assert map_max_residual(lhs, prod)[0] < TOL_DEFAULT


class TestDilate:
    def test_identity(self):
        f = random_rational_map(7, 9)
        assert dilate(f, 1).values == f.values

    def test_sawtooth_example(self):
        g = dilate(sawtooth_map(5), 2)
        assert g.values[1] == Fraction(-1, 10)

    def test_requires_unit(self):
        with pytest.raises(NotCoprime):
            dilate(sawtooth_map(6), 2)

    @pytest.mark.parametrize("k,h", [(5, 2), (7, 3), (8, 5), (9, 4)])
    def test_transform_law(self, k, h):
        # dft(dilate(f, h)) = dilate(dft(f), h^-1)
        f = random_rational_map(k, 4)
        lhs = dft(dilate(f, h))
        rhs = dilate(dft(f), mod_inverse(h, k))
        assert map_max_residual(lhs, rhs)[0] < TOL_DEFAULT


class TestProductSums:
    def test_sawtooth_pair(self):
        fs = [sawtooth_map(3)] * 2
        assert constrained_product_sum(fs, [1, 1]) == Fraction(-1, 18)
        assert_close(spectral_product_sum(fs, [1, 1]), Fraction(-1, 18))

    def test_sawtooth_quadruple(self):
        fs = [sawtooth_map(3)] * 4
        assert constrained_product_sum(fs, [1, 1, 1, 1]) == Fraction(1, 216)
        assert_close(spectral_product_sum(fs, [1, 1, 1, 1]), Fraction(1, 216))

    def test_single_map_inversion(self):
        f = random_rational_map(6, 8)
        assert constrained_product_sum([f], [1]) == f.values[0]
        assert_close(spectral_product_sum([f], [1]), f.values[0])

    @pytest.mark.parametrize("seed", range(8))
    def test_lhs_equals_rhs_randomized(self, seed):
        import random
        from math import gcd

        rng = random.Random(seed)
        k = rng.randint(1, 12)
        m = rng.randint(1, 4)
        units = [h for h in range(1, max(k, 2)) if gcd(h, k) == 1]
        fs = [random_rational_map(k, seed * 10 + j) for j in range(m)]
        hs = [rng.choice(units) for _ in range(m)]
        lhs = constrained_product_sum(fs, hs)
        rhs = spectral_product_sum(fs, hs)
        assert residual(lhs, rhs) < mpf(2) ** -100

    def test_work_limit(self):
        fs = [sawtooth_map(100)] * 4
        with pytest.raises(WorkLimitExceeded):
            constrained_product_sum(fs, [1, 1, 1, 1], work_limit=10 ** 4)

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            spectral_product_sum([sawtooth_map(6)] * 2, [2, 1])

    def test_period_mismatch(self):
        with pytest.raises(PeriodMismatch):
            constrained_product_sum([sawtooth_map(3), sawtooth_map(4)], [1, 1])
        with pytest.raises(PeriodMismatch):
            spectral_product_sum([sawtooth_map(3), sawtooth_map(4)], [1, 1])


class TestClosedFormDfts:
    @pytest.mark.parametrize("kind,k,kw", [
        ("sawtooth", 3, {}),
        ("sawtooth", 8, {}),
        ("bernoulli", 5, {"r": 2}),
        ("bernoulli", 6, {"r": 3}),
        ("bernoulli", 4, {"r": 4}),
        ("alt-sawtooth", 6, {}),
        ("alt-sawtooth", 10, {}),
        ("alt-sign", 7, {}),
        ("alt-sign", 9, {}),
        ("periodic-zeta", 5, {"s": "2.5"}),
    ])
    def test_matches_direct_transform(self, kind, k, kw):
        direct = dft(defining_map(kind, k, **kw))
        closed = closed_form_dft(kind, k, **kw)
        assert map_max_residual(direct, closed)[0] < TOL_DEFAULT

    def test_bernoulli_r1_corrected_exact(self):
        direct = dft(bernoulli_map(1, 3))
        closed = closed_form_dft("bernoulli", 3, r=1, variant="corrected")
        assert map_max_residual(direct, closed)[0] < TOL_DEFAULT
        # the transform value itself: -1/2 + i sqrt(3)/6 at n = 1
        with workprec(300):
            expected = mpmath.mpc(mpf(-1) / 2, mpmath.sqrt(3) / 6)
            assert_close(direct.values[1], expected)

    def test_bernoulli_r1_paper_gap_is_half(self):
        # the uncorrected form differs by exactly 1/2 off the multiples
        direct = dft(bernoulli_map(1, 5))
        closed = closed_form_dft("bernoulli", 5, r=1, variant="paper")
        res, where = map_max_residual(direct, closed)
        assert where != 0
        assert_close(res, Fraction(1, 2), tol=mpf(2) ** -120)

    def test_bernoulli_r2_at_multiples(self):
        closed = closed_form_dft("bernoulli", 3, r=2)
        assert closed.values[0] == Fraction(1, 18)

    def test_alt_sign_example_value(self):
        closed = closed_form_dft("alt-sign", 3)
        with workprec(300):
            assert_close(closed.values[1], mpmath.mpc(0, 1) * mpmath.sqrt(3))

    def test_parity_preconditions(self):
        with pytest.raises(ParityViolation):
            closed_form_dft("alt-sawtooth", 5)
        with pytest.raises(ParityViolation):
            closed_form_dft("alt-sign", 6)
        with pytest.raises(ParityViolation):
            alt_sawtooth_map(7)
        with pytest.raises(ParityViolation):
            alt_sign_map(4)


class TestSignRule:
    @pytest.mark.parametrize("k,h1,h2", [(7, 3, 5), (9, 2, 7), (8, 3, 5)])
    def test_odd_maps_flip_sign(self, k, h1, h2):
        # sum f1(a h1) f2(a h2) = -(1/k) sum f1hat(a h2) f2hat(a h1)
        f1, f2 = random_odd_map(k, 31), random_odd_map(k, 32)
        lhs = sum((f1.values[(a * h1) % k] * f2.values[(a * h2) % k]
                   for a in range(k)), Fraction(0))
        g1, g2 = dft(f1), dft(f2)
        with workprec(300):
            rhs = -sum((g1.values[(a * h2) % k] * g2.values[(a * h1) % k]
                        for a in range(k)), mpmath.mpc(0)) / k
            assert residual(lhs, rhs) < TOL_DEFAULT

    def test_mixed_parity_both_sides_vanish(self):
        k, h1, h2 = 9, 2, 4
        f1, f2 = random_odd_map(k, 33), random_even_map(k, 34)
        lhs = sum((f1.values[(a * h1) % k] * f2.values[(a * h2) % k]
                   for a in range(k)), Fraction(0))
        assert lhs == 0
        g1, g2 = dft(f1), dft(f2)
        with workprec(300):
            rhs = sum((g1.values[(a * h2) % k] * g2.values[(a * h1) % k]
                       for a in range(k)), mpmath.mpc(0)) / k
            assert residual(rhs, 0) < TOL_DEFAULT


class TestParseval:
    def test_sawtooth_both_sides(self):
        lhs, rhs = parseval_sides(sawtooth_map(3), sawtooth_map(3))
        assert lhs == Fraction(-1, 18)
        assert_close(rhs, Fraction(-1, 18))

    def test_odd_even_orthogonal(self):
        lhs, rhs = parseval_sides(sawtooth_map(5), constant_map(1, 5))
        assert lhs == 0
        assert_close(rhs, 0)

    def test_random_maps(self):
        f1, f2 = random_rational_map(6, 21), random_rational_map(6, 22)
        lhs, rhs = parseval_sides(f1, f2)
        assert residual(lhs, rhs) < TOL_DEFAULT
