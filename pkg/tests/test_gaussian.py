import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiralwalk.errors import DomainError, NoValidPhaseError
from chiralwalk.gaussian import (
    GaussianInitParams,
    build_gaussian_state,
    design_from_entropy,
    inverse_binary_entropy,
    predict_asymptotics,
    s0_from_pi_left,
    shannon_entropy,
    solve_delta,
)
from chiralwalk.markov import stationary_gcd
from chiralwalk.observables import ChiralityDist, binary_entropy, coherence, gcd
from chiralwalk.walk import CoinParams

THETAS = [math.pi / 6, math.pi / 4, math.pi / 3]


class TestBuild:
    def test_alpha_zero_pure_left(self):
        s = build_gaussian_state(GaussianInitParams(15, 0, 0.0, 0.0))
        assert np.all(s.right_amp == 0)
        assert gcd(s).p_left == 1.0

    def test_alpha_quarter_pi_no_real_coherence(self):
        coin = CoinParams(0.5)
        s = build_gaussian_state(GaussianInitParams(50, 0, math.pi / 4, solve_delta(math.pi / 4, coin)))
        assert abs(coherence(s).real) < 1e-15

    def test_mixed_chirality_setting(self):
        alpha = math.acos(math.sqrt(0.3))
        s = build_gaussian_state(GaussianInitParams(100, 0, alpha, 1.0))
        d = gcd(s)
        assert d.p_left == pytest.approx(0.3, abs=1e-10)
        assert d.p_right == pytest.approx(0.7, abs=1e-10)

    def test_window_and_center(self):
        s = build_gaussian_state(GaussianInitParams(10, 7, 0.3, 0.0))
        assert s.sites[0] == 7 - 80 and s.sites[-1] == 7 + 80
        assert np.argmax(np.abs(s.left_amp)) + s.origin == 7
        assert s.norm() == pytest.approx(1, abs=1e-15)

    def test_profile_is_sqrt_gaussian(self):
        sigma0 = 12.0
        s = build_gaussian_state(GaussianInitParams(sigma0, 0, 0.0, 0.0))
        k = s.sites
        p = np.abs(s.left_amp) ** 2
        ref = np.exp(-(k**2) / (2 * sigma0**2)) / (sigma0 * math.sqrt(2 * math.pi))
        np.testing.assert_allclose(p, ref, rtol=1e-9, atol=1e-18)

    def test_rejects_bad_sigma(self):
        with pytest.raises(DomainError):
            GaussianInitParams(0.0, 0, 0.3, 0.1)


class TestSolveDelta:
    @pytest.mark.parametrize("theta", [0.2, 0.8, 1.3])
    def test_quarter_pi(self, theta):
        assert solve_delta(math.pi / 4, CoinParams(theta)) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_direct_value(self):
        d = solve_delta(math.pi / 3, CoinParams(math.pi / 4))
        assert d == pytest.approx(math.acos(-1 / math.sqrt(3)), abs=1e-14)
        assert d == pytest.approx(2.18628, abs=1e-5)

    @pytest.mark.parametrize("theta", THETAS)
    def test_half_theta_gives_zero(self, theta):
        assert solve_delta(theta / 2, CoinParams(theta)) == pytest.approx(0.0, abs=1e-7)

    def test_no_valid_phase(self):
        # cos^2 alpha = 0.95 at theta = pi/3: |cos 2alpha| = 0.9 > cos(theta)
        with pytest.raises(NoValidPhaseError):
            solve_delta(math.acos(math.sqrt(0.95)), CoinParams(math.pi / 3))

    def test_domain(self):
        with pytest.raises(DomainError):
            solve_delta(0.0, CoinParams(0.3))
        with pytest.raises(DomainError):
            solve_delta(0.3, CoinParams(0.0))


class TestPredict:
    @pytest.mark.parametrize("theta", THETAS)
    def test_quarter_pi_is_maximal(self, theta):
        rec = predict_asymptotics(math.pi / 4, CoinParams(theta))
        assert rec.lambda_plus == pytest.approx(0.5, abs=1e-15)
        assert rec.s0 == pytest.approx(1.0, abs=1e-12)
        assert rec.pi_left == pytest.approx(0.5, abs=1e-15)
        assert abs(rec.q0) < 1e-15
        assert rec.s_shannon == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("theta", THETAS)
    def test_half_theta_is_unentangled(self, theta):
        rec = predict_asymptotics(theta / 2, CoinParams(theta))
        assert rec.s0 == pytest.approx(0.0, abs=1e-12)

    def test_shannon_differs_away_from_half(self):
        rec = predict_asymptotics(0.1, CoinParams(0.15))
        assert rec.s_shannon == pytest.approx(binary_entropy(math.cos(0.1) ** 2), abs=1e-15)
        assert abs(rec.s0 - rec.s_shannon) > 1e-3

    def test_eigenvalues_match_general_formula_with_real_q0(self):
        coin = CoinParams(0.7)
        alpha = 0.6
        rec = predict_asymptotics(alpha, coin)
        root = math.sqrt(1 + 4 * (rec.q0.real ** 2 - rec.pi_left * rec.pi_right))
        assert rec.lambda_plus == pytest.approx(0.5 * (1 + root), abs=1e-14)

    @pytest.mark.parametrize("theta", THETAS)
    def test_stationary_consistency(self, theta):
        coin = CoinParams(theta)
        for alpha in np.linspace(0.05, math.pi / 2 - 0.05, 25):
            try:
                rec = predict_asymptotics(alpha, coin)
            except NoValidPhaseError:
                continue
            d = stationary_gcd(rec.q0.real, coin)
            assert abs(d.p_left - math.cos(alpha) ** 2) <= 1e-14
            assert abs(d.p_right - math.sin(alpha) ** 2) <= 1e-14

    def test_out_of_domain(self):
        with pytest.raises(NoValidPhaseError):
            predict_asymptotics(0.05, CoinParams(math.pi / 3))

    @pytest.mark.parametrize("theta", THETAS)
    def test_symmetric_in_pi_left(self, theta):
        coin = CoinParams(theta)
        half = 0.5 * math.cos(theta)
        for p in np.linspace(0.5 - half, 0.5 + half, 41):
            assert s0_from_pi_left(p, coin) == pytest.approx(s0_from_pi_left(1 - p, coin), abs=1e-12)


class TestInverse:
    @pytest.mark.parametrize("h", [0.0, 1e-6, 0.3, 0.7, 0.99, 1.0])
    def test_inverse_binary_entropy(self, h):
        p = inverse_binary_entropy(h)
        assert 0.5 <= p <= 1.0
        assert abs(binary_entropy(p) - h) <= 1e-12

    @pytest.mark.parametrize("theta", THETAS)
    def test_s0_one(self, theta):
        for branch in ("left", "right"):
            p = design_from_entropy(1.0, CoinParams(theta), branch)
            assert p.alpha == pytest.approx(math.pi / 4, abs=1e-15)
            assert p.pi_left == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("theta", THETAS)
    def test_s0_zero_left(self, theta):
        p = design_from_entropy(0.0, CoinParams(theta), "left")
        assert p.alpha == pytest.approx(theta / 2, abs=1e-14)

    def test_two_branches_symmetric(self):
        coin = CoinParams(math.pi / 3)
        left = design_from_entropy(0.7, coin, "left")
        right = design_from_entropy(0.7, coin, "right")
        assert left.pi_left > 0.5 > right.pi_left
        assert left.pi_left + right.pi_left == pytest.approx(1.0, abs=1e-14)
        # bisection oracle: brute-force scan of S0(Pi_L) over a fine grid
        grid = np.linspace(0.5, 0.5 + 0.5 * math.cos(coin.theta), 200001)
        s = np.array([s0_from_pi_left(x, coin) for x in grid])
        assert grid[np.argmin(np.abs(s - 0.7))] == pytest.approx(left.pi_left, abs=1e-5)

    def test_caller_supplied_width(self):
        p = design_from_entropy(0.9, CoinParams(0.5), sigma0=33.0, k0=-4)
        assert (p.sigma0, p.k0) == (33.0, -4)


@settings(max_examples=150, deadline=None)
@given(
    s0=st.floats(0, 1),
    theta=st.floats(0.01, math.pi / 2 - 0.01),
    branch=st.sampled_from(["left", "right"]),
)
def test_design_round_trip(s0, theta, branch):
    coin = CoinParams(theta)
    params = design_from_entropy(s0, coin, branch)
    assert abs(predict_asymptotics(params.alpha, coin).s0 - s0) <= 1e-10
    assert (params.pi_left >= 0.5 - 1e-15) == (branch == "left") or params.pi_left == pytest.approx(0.5)


def test_branch_gap_shrinks_with_theta():
    for s0 in (0.99, 0.95, 0.9, 0.85, 0.7, 0.3):
        gaps = []
        for theta in THETAS:
            coin = CoinParams(theta)
            gaps.append(design_from_entropy(s0, coin, "left").pi_left
                        - design_from_entropy(s0, coin, "right").pi_left)
        assert gaps[0] > gaps[1] > gaps[2]


class TestShannon:
    def test_values(self):
        assert shannon_entropy(ChiralityDist(0.5, 0.5)) == 1.0
        assert shannon_entropy(ChiralityDist(1, 0)) == 0.0
        assert shannon_entropy(ChiralityDist(0.3, 0.7)) == pytest.approx(0.8813, abs=1e-4)
