"""
Extended Gaussian initial states and their asymptotic predictions.

The family is

    a_k^0 = sqrt(g_k) cos(alpha)
    b_k^0 = sqrt(g_k) sin(alpha) exp(i delta)

with ``g_k`` a unit-mass Gaussian of width ``sigma0`` centred on ``k0``.
Requiring the initial chirality split ``(cos^2 alpha, sin^2 alpha)`` to be
the stationary one fixes ``cos(delta) = tan(theta) / tan(2 alpha)``; then

    Re Q0      = cos(2 alpha) tan(theta) / 2
    Lambda_pm  = (1 +- |cos 2 alpha| / cos theta) / 2
    S0         = H(Lambda_+)

The inverse problem (target ``S0`` -> ``alpha, delta``) inverts the binary
entropy by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .asymptotics import AsymptoticRecord
from .errors import DomainError, NoValidPhaseError
from .observables import ChiralityDist, binary_entropy
from .walk import CoinParams, WalkerState

__all__ = [
    "GaussianInitParams",
    "build_gaussian_state",
    "solve_delta",
    "predict_asymptotics",
    "s0_from_pi_left",
    "inverse_binary_entropy",
    "design_from_entropy",
    "shannon_entropy",
]

Branch = Literal["left", "right"]

_TOL = 1e-12
# window half-width in units of sigma0; tail mass beyond it is ~1e-14
_WINDOW = 8.0


@dataclass(frozen=True)
class GaussianInitParams:
    sigma0: float
    k0: int
    alpha: float
    delta: float

    def __post_init__(self) -> None:
        if not self.sigma0 > 0:
            raise DomainError(f"sigma0 must be positive, got {self.sigma0!r}")
        if not (-_TOL <= self.alpha <= math.pi / 2 + _TOL):
            raise DomainError(f"alpha must lie in [0, pi/2], got {self.alpha!r}")
        if not (-_TOL <= self.delta <= math.pi + _TOL):
            raise DomainError(f"delta must lie in [0, pi], got {self.delta!r}")

    @property
    def pi_left(self) -> float:
        return math.cos(self.alpha) ** 2


def build_gaussian_state(params: GaussianInitParams) -> WalkerState:
    """Gaussian walker state on ``k0 +- ceil(8 sigma0)``, renormalized to unit norm."""
    half = math.ceil(_WINDOW * params.sigma0)
    k = np.arange(-half, half + 1, dtype=np.float64)
    envelope = np.exp(-(k**2) / (4.0 * params.sigma0**2))
    envelope /= math.sqrt(math.fsum(envelope**2))
    a = envelope * math.cos(params.alpha)
    b = envelope * (math.sin(params.alpha) * np.exp(1j * params.delta))
    return WalkerState(0, int(params.k0) - half, a.astype(np.complex128), b)


def solve_delta(alpha: float, coin: CoinParams) -> float:
    """Phase ``delta`` in ``[0, pi]`` that makes ``cos^2 alpha`` stationary."""
    coin.require_interior()
    if not 0.0 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    cos2a = math.cos(2.0 * alpha)
    if abs(cos2a) < 1e-15:
        return math.pi / 2
    ratio = math.tan(coin.theta) * cos2a / math.sin(2.0 * alpha)
    if abs(ratio) > 1.0 + _TOL:
        raise NoValidPhaseError(
            f"tan(theta)/tan(2 alpha) = {ratio!r} for alpha={alpha!r}, theta={coin.theta!r}"
        )
    return math.acos(max(-1.0, min(1.0, ratio)))


def _lambdas(cos2a: float, coin: CoinParams) -> tuple[float, float]:
    spread = abs(cos2a) / math.cos(coin.theta)
    if spread > 1.0 + _TOL:
        raise NoValidPhaseError(
            f"|cos 2alpha| = {abs(cos2a)!r} exceeds cos(theta) = {math.cos(coin.theta)!r}"
        )
    spread = min(spread, 1.0)
    return 0.5 * (1.0 + spread), 0.5 * (1.0 - spread)


def predict_asymptotics(alpha: float, coin: CoinParams) -> AsymptoticRecord:
    """Long-time GCD, coherence, coin eigenvalues and entropies for the
    phase-matched Gaussian family.

    ``q0`` is the real asymptotic coherence; the imaginary part of the
    initial overlap does not survive the exact walk.
    """
    coin.require_interior()
    cos2a = math.cos(2.0 * alpha)
    lam_plus, lam_minus = _lambdas(cos2a, coin)
    pi_left = math.cos(alpha) ** 2
    pi_right = math.sin(alpha) ** 2
    return AsymptoticRecord(
        pi_left=pi_left,
        pi_right=pi_right,
        q0=complex(0.5 * cos2a * math.tan(coin.theta), 0.0),
        lambda_plus=lam_plus,
        lambda_minus=lam_minus,
        s0=binary_entropy(lam_plus),
        s_shannon=shannon_entropy(ChiralityDist(pi_left, pi_right)),
    )


def s0_from_pi_left(pi_left: float, coin: CoinParams) -> float:
    """Asymptotic entanglement entropy as a function of ``Pi_L``.

    Raises :class:`NoValidPhaseError` outside the band ``|2 Pi_L - 1| <= cos theta``.
    """
    coin.require_interior()
    lam_plus, _ = _lambdas(2.0 * pi_left - 1.0, coin)
    return binary_entropy(lam_plus)


def inverse_binary_entropy(h: float, tol: float = 1e-13, max_iter: int = 200) -> float:
    """Solve ``H(p) = h`` for ``p`` in ``[1/2, 1]`` by bisection.

    ``H`` decreases monotonically from 1 to 0 on that interval.
    """
    if not (-_TOL <= h <= 1.0 + _TOL):
        raise DomainError(f"entropy target must lie in [0, 1], got {h!r}")
    if h >= 1.0:
        return 0.5
    if h <= 0.0:
        return 1.0
    lo, hi = 0.5, 1.0
    mid = 0.75
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        diff = binary_entropy(mid) - h
        if abs(diff) <= tol or hi - lo <= 4e-16:
            break
        if diff > 0:
            lo = mid
        else:
            hi = mid
    return mid


def design_from_entropy(
    s0_target: float,
    coin: CoinParams,
    branch: Branch = "left",
    sigma0: float = 100.0,
    k0: int = 0,
) -> GaussianInitParams:
    """Gaussian initial condition whose asymptotic entanglement is ``s0_target``.

    Every target in ``[0, 1]`` has two solutions, mirror images about
    ``Pi_L = 1/2``; ``branch="left"`` picks ``Pi_L >= 1/2``.
    """
    coin.require_interior()
    if branch not in ("left", "right"):
        raise ValueError(f"branch must be 'left' or 'right', got {branch!r}")
    lam_plus = inverse_binary_entropy(s0_target)
    cos2a = (2.0 * lam_plus - 1.0) * math.cos(coin.theta)
    if branch == "right":
        cos2a = -cos2a
    alpha = 0.5 * math.acos(max(-1.0, min(1.0, cos2a)))
    return GaussianInitParams(sigma0, k0, alpha, solve_delta(alpha, coin))



def shannon_entropy(dist: ChiralityDist) -> float:
    """Base-2 Shannon entropy of a chirality distribution."""
    return binary_entropy(dist.p_left)
