import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from chiralwalk.asymptotics import (
    asymptotic_invariants,
    asymptotic_state,
    bessel_row,
    kernel_order,
)
from chiralwalk.gaussian import GaussianInitParams, build_gaussian_state, solve_delta
from chiralwalk.markov import stationary_gcd
from chiralwalk.observables import gcd
from chiralwalk.walk import CoinParams, evolve, init_localized


def bessel_series(n: int, x: float, terms: int = 40) -> float:
    """J_n(x) from its power series, summed in exact rationals."""
    half = Fraction(x) / 2
    total = Fraction(0)
    for m in range(terms):
        total += Fraction((-1) ** m, math.factorial(m) * math.factorial(m + n)) * half ** (2 * m + n)
    return float(total)


def orthogonality(row, k: int) -> float:
    v = row.values
    return float(np.dot(v[k:], v[: v.size - k]))


class TestBesselRow:
    def test_zero_argument(self):
        row = bessel_row(0.0, 5)
        expected = np.zeros(11)
        expected[5] = 1.0
        np.testing.assert_array_equal(row.values, expected)

    def test_j1_of_one_against_series(self):
        oracle = bessel_series(1, 1.0)
        assert oracle == pytest.approx(0.4400505857, abs=1e-10)
        assert abs(bessel_row(1.0, 10)[1] - oracle) <= 1e-9
        assert bessel_row(1.0, 10)[1] == pytest.approx(oracle, rel=1e-14)

    @pytest.mark.parametrize("x", [0.3, 2.0, 7.5])
    def test_against_series_small_x(self, x):
        row = bessel_row(x, 12)
        for n in range(13):
            assert row[n] == pytest.approx(bessel_series(n, x), rel=1e-12, abs=1e-300)

    # scipy's jv loses ~1e-10 relative accuracy for x ~ 1e3, so larger x go to mpmath
    @pytest.mark.parametrize("x", [1e-10, 1e-3, 0.5, 3.0, 10.0, 55.5, 100.0])
    def test_against_scipy(self, x):
        order = kernel_order(x)
        row = bessel_row(x, order)
        ref = special.jv(row.orders, x)
        big = np.abs(ref) > 1e-300
        # relative error except near zeros of J_n, where an absolute floor applies
        err = np.abs(row.values[big] - ref[big]) / np.maximum(np.abs(ref[big]), 1e-6)
        assert err.max() <= 1e-10

    @pytest.mark.parametrize("x,orders", [
        (100.0, (0, 1, 50, 99, 100, 120, 150, 180)),
        (1000.0, (0, 7, 320, 999, 1000, 1030, 1080)),
    ])
    def test_against_mpmath(self, x, orders):
        mpmath = pytest.importorskip("mpmath")
        row = bessel_row(x, kernel_order(x))
        for n in orders:
            ref = float(mpmath.besselj(n, x))
            assert row[n] == pytest.approx(ref, rel=1e-10)

    @pytest.mark.parametrize("x", [0.7, 10.0, 300.0])
    def test_symmetry_exact(self, x):
        row = bessel_row(x, 40)
        for l in range(1, 41):
            assert row[-l] == (-1) ** l * row[l]

    @pytest.mark.parametrize("x", [10.0, 100.0, 1000.0, 10000.0])
    def test_orthogonality(self, x):
        row = bessel_row(x, kernel_order(x))
        for k in (0, 1, 5):
            assert abs(orthogonality(row, k) - (k == 0)) <= 1e-10

    @pytest.mark.parametrize("x", [10.0, 1000.0])
    def test_normalization_sum(self, x):
        row = bessel_row(x, kernel_order(x))
        s = row[0] + 2 * sum(row[2 * k] for k in range(1, row.order_max // 2 + 1))
        assert abs(s - 1) <= 1e-10

    def test_tail_negligible(self):
        for x in (10.0, 100.0, 1000.0, 10000.0):
            row = bessel_row(x, kernel_order(x))
            assert abs(row.values[-1]) < 1e-15

    def test_invalid(self):
        with pytest.raises(ValueError):
            bessel_row(-1.0, 3)
        with pytest.raises(IndexError):
            bessel_row(1.0, 3)[4]


def gaussian(sigma0=20.0, alpha=math.pi / 3, theta=math.pi / 4):
    coin = CoinParams(theta)
    return build_gaussian_state(GaussianInitParams(sigma0, 0, alpha, solve_delta(alpha, coin))), coin


class TestAsymptoticState:
    def test_zero_time_is_identity(self):
        init, coin = gaussian()
        out = asymptotic_state(init, coin, 0)
        i = init.origin - out.origin
        np.testing.assert_allclose(out.left_amp[i:i + len(init)], init.left_amp, atol=1e-16)
        np.testing.assert_allclose(out.right_amp[i:i + len(init)], init.right_amp, atol=1e-16)
        assert out.norm() == pytest.approx(1, abs=1e-14)

    def test_norm_and_gcd_frozen(self):
        init, coin = gaussian()
        ref = gcd(init).p_left
        values = []
        for t in (100, 500, 1000):
            out = asymptotic_state(init, coin, t)
            assert abs(out.norm() - 1) <= 1e-8
            values.append(gcd(out).p_left)
        assert abs(values[0] - ref) < 1e-8
        assert max(values) - min(values) < 1e-8

    def test_kernel_direct_sum(self):
        # one output amplitude computed straight from the signed Bessel sum
        init, coin = gaussian(sigma0=12)
        t = 60
        x = t * math.cos(coin.theta)
        out = asymptotic_state(init, coin, t)
        k = 17
        terms = [
            (-1) ** int(k - l) * init.left_amp[l - init.origin] * special.jv(k - l, x)
            for l in init.sites
        ]
        assert out.left_amp[k - out.origin] == pytest.approx(sum(terms), abs=1e-13)

    def test_matches_exact_walk_gcd(self):
        init, coin = gaussian()
        approx = gcd(asymptotic_state(init, coin, 1000)).p_left
        exact = gcd(evolve(init, coin, 1000)).p_left
        assert abs(approx - exact) <= 0.01

    def test_endpoints_rejected(self):
        from chiralwalk.errors import DomainError

        with pytest.raises(DomainError):
            asymptotic_state(init_localized((1, 0)), CoinParams(math.pi / 2), 10)


class TestInvariants:
    def test_localized(self):
        rec = asymptotic_invariants(init_localized((1, 0)))
        assert (rec.q0, rec.pi_left, rec.pi_right) == (0, 1, 0)
        assert rec.s0 is None

    @pytest.mark.parametrize("alpha,delta", [(0.4, 1.0), (math.pi / 3, 2.5)])
    def test_gaussian(self, alpha, delta):
        rec = asymptotic_invariants(build_gaussian_state(GaussianInitParams(40, 3, alpha, delta)))
        assert abs(rec.q0 - 0.5 * math.sin(2 * alpha) * complex(math.cos(delta), -math.sin(delta))) < 1e-10
        assert rec.pi_left == pytest.approx(math.cos(alpha) ** 2, abs=1e-10)
        assert rec.pi_right == pytest.approx(math.sin(alpha) ** 2, abs=1e-10)

    @pytest.mark.parametrize("theta", [math.pi / 6, math.pi / 4, math.pi / 3])
    def test_consistent_with_stationary(self, theta):
        init, coin = gaussian(alpha=1.0, theta=theta)
        rec = asymptotic_invariants(init)
        d = stationary_gcd(rec.q0.real, coin)
        assert d.p_left == pytest.approx(rec.pi_left, abs=1e-10)

    def test_invariants_survive_kernel(self):
        init, coin = gaussian()
        before = asymptotic_invariants(init)
        after = asymptotic_invariants(asymptotic_state(init, coin, 300))
        assert abs(after.q0 - before.q0) < 1e-8
        assert after.pi_left == pytest.approx(before.pi_left, abs=1e-8)
