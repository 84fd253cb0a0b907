import math

import numpy as np
import pytest

from schlicht import (
    bieberbach_check,
    covering_check,
    fekete_szego,
    from_starlike,
    hankel,
    identity,
    koebe,
    odd_c5,
    sample,
    sqrt_even_transform,
)
from schlicht.errors import InvalidParameter, OrderTooLow
from schlicht.series import TruncatedSeries

from oracles import random_normalized_coeffs

ODD_C5_CONSTANT = 0.5 + math.exp(-2.0 / 3.0)


class TestFeketeSzego:
    def test_koebe_alpha_zero(self):
        rep = fekete_szego(koebe(8), 0.0)
        assert rep.value == 3.0
        assert rep.bound == 3.0
        assert rep.margin == 0.0

    def test_identity_any_alpha(self):
        for alpha in (0.0, 0.4, 1.0):
            assert fekete_szego(identity(8), alpha).value == 0.0

    def test_koebe_alpha_one_limit(self):
        rep = fekete_szego(koebe(8), 1.0)
        assert rep.value == 1.0
        assert rep.bound == 1.0
        assert rep.margin == 0.0

    def test_bound_monotone_decreasing(self):
        # the exponential term drops below one ulp of 1.0 near alpha = 1,
        # flattening the float bound there; require strict descent early on
        alphas = np.linspace(0.0, 0.99, 100)
        bounds = [fekete_szego(koebe(4), float(a)).bound for a in alphas]
        assert all(b1 >= b2 for b1, b2 in zip(bounds, bounds[1:]))
        assert all(b1 > b2 for b1, b2 in zip(bounds[:50], bounds[1:51]))
        assert bounds[0] == 3.0
        assert bounds[-1] >= 1.0

    def test_validation(self):
        with pytest.raises(OrderTooLow):
            fekete_szego(identity(2), 0.5)
        with pytest.raises(InvalidParameter):
            fekete_szego(identity(4), 1.5)


class TestOddC5:
    def test_koebe_value(self):
        assert abs(odd_c5(koebe(8)) - 1.0) < 1e-15

    def test_identity_zero(self):
        assert odd_c5(identity(4)) == 0.0

    def test_matches_square_root_transform(self, rng):
        for _ in range(20):
            f = TruncatedSeries(random_normalized_coeffs(rng, 12))
            got = odd_c5(f)
            want = sqrt_even_transform(f).coeffs[5]
            assert abs(got - want) < 1e-10

    def test_starlike_sweep_respects_constant(self):
        worst = 0.0
        for seed in range(200):
            h = sample(seed, seed % 6 + 1, order=8)
            f = from_starlike(h)
            worst = max(worst, abs(odd_c5(f)))
        assert worst <= ODD_C5_CONSTANT + 1e-9

    def test_order_too_low(self):
        with pytest.raises(OrderTooLow):
            odd_c5(identity(2))


class TestHankel:
    def test_two_by_two_is_a3_minus_a2_squared(self, rng):
        for _ in range(20):
            f = TruncatedSeries(random_normalized_coeffs(rng, 8))
            want = complex(f.coeffs[3]) - complex(f.coeffs[2]) ** 2
            assert hankel(f, 2, 1) == want

    def test_koebe_two_by_two(self):
        assert hankel(koebe(8), 2, 1) == -1.0
        assert abs(hankel(koebe(8), 2, 1)) == 1.0

    def test_identity_two_by_two(self):
        assert hankel(identity(8), 2, 1) == 0.0

    def test_koebe_three_by_three_rank_two(self):
        # det[[1,2,3],[2,3,4],[3,4,5]]: arithmetic progression, rank 2
        assert abs(hankel(koebe(8), 3, 1)) < 1e-10

    def test_single_entry_is_coefficient(self, rng):
        f = TruncatedSeries(random_normalized_coeffs(rng, 10))
        for n in (1, 2, 5):
            assert hankel(f, 1, n) == complex(f.coeffs[n])

    def test_large_q_against_numpy(self, rng):
        f = TruncatedSeries(random_normalized_coeffs(rng, 16))
        idx = 1 + np.add.outer(np.arange(5), np.arange(5))
        want = np.linalg.det(f.coeffs[idx])
        assert abs(hankel(f, 5, 1) - want) < 1e-10 * max(1.0, abs(want))

    def test_order_requirement(self):
        with pytest.raises(OrderTooLow):
            hankel(identity(4), 3, 1)
        with pytest.raises(InvalidParameter):
            hankel(identity(8), 2, 0)


class TestBieberbach:
    def test_koebe_all_margins_zero(self):
        rep = bieberbach_check(koebe(16))
        assert rep.value == 0.0
        assert rep.margin == 0.0
        assert all(m == 0.0 for _, m in rep.per_index)

    def test_identity_overshoots_are_minus_k(self):
        rep = bieberbach_check(identity(8))
        assert rep.value == 0.0
        for k, m in rep.per_index:
            assert m == -float(k)
            assert m <= -2.0

    def test_starlike_sweep(self):
        worst = -np.inf
        for seed in range(200):
            f = from_starlike(sample(seed, seed % 5 + 1, order=16))
            worst = max(worst, bieberbach_check(f).value)
        assert worst <= 1e-9

    def test_violation_detected(self):
        f = TruncatedSeries([0.0, 1.0, 5.0])
        rep = bieberbach_check(f)
        assert rep.value == 3.0
        assert rep.margin == -3.0


class TestCovering:
    def test_koebe_extremal_point(self):
        rep = covering_check(koebe(8), -0.25)
        assert abs(rep.value - 2.0) < 1e-9
        assert abs(rep.margin) < 1e-9

    def test_identity_at_two(self):
        rep = covering_check(identity(8), 2.0)
        assert rep.value == 0.5
        assert rep.margin == 1.5
        assert rep.bound == 2.0

    def test_continuity_in_xi(self):
        f = koebe(8)
        base = covering_check(f, 1.0).value
        near = covering_check(f, 1.0 + 1e-9).value
        assert abs(base - near) < 1e-8

    def test_zero_xi_rejected(self):
        with pytest.raises(InvalidParameter):
            covering_check(koebe(4), 0.0)


class TestReportShape:
    def test_report_requires_nonnegative_value(self):
        from schlicht import FunctionalReport

        with pytest.raises(InvalidParameter):
            FunctionalReport("bad", -1.0)

    def test_to_dict_roundtrips_fields(self):
        rep = fekete_szego(koebe(4), 0.5)
        d = rep.to_dict()
        assert d["name"] == "fekete_szego"
        assert d["value"] == rep.value
        assert d["bound"] == rep.bound
        assert d["margin"] == rep.margin
