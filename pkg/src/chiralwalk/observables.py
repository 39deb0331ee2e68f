"""
Coin-level observables of a walker state.

Tracing out position leaves the 2x2 coin density matrix

    rho_c = [[P_L,  Q ],
             [Q*,   P_R]],      Q = sum_k a_k b_k*

whose eigenvalues give the coin-position entanglement entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import InvalidDensityError
from .walk import WalkerState

__all__ = [
    "ChiralityDist",
    "ReducedCoinState",
    "EntanglementReport",
    "gcd",
    "coherence",
    "reduced_density",
    "entanglement_entropy",
    "binary_entropy",
]

_TOL = 1e-12


def _entropy2(p: float, q: float) -> float:
    h = 0.0
    if p > 0.0:
        h -= p * math.log2(p)
    if q > 0.0:
        h -= q * math.log2(q)
    return h


def binary_entropy(p: float) -> float:
    """Base-2 entropy of the distribution ``(p, 1 - p)`` with ``0 log 0 = 0``."""
    return _entropy2(p, 1.0 - p)


@dataclass(frozen=True)
class ChiralityDist:
    """Global chirality distribution ``(P_L, P_R)``."""

    p_left: float
    p_right: float

    def __post_init__(self) -> None:
        pl, pr = float(self.p_left), float(self.p_right)
        if abs(pl + pr - 1.0) > _TOL:
            raise InvalidDensityError(f"p_left + p_right = {pl + pr!r}, expected 1")
        if not (-_TOL <= pl <= 1 + _TOL and -_TOL <= pr <= 1 + _TOL):
            raise InvalidDensityError(f"probabilities out of range: ({pl!r}, {pr!r})")
        object.__setattr__(self, "p_left", pl)
        object.__setattr__(self, "p_right", pr)

    @classmethod
    def from_left(cls, p_left: float) -> "ChiralityDist":
        return cls(p_left, 1.0 - p_left)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.p_left, self.p_right])


@dataclass(frozen=True)
class ReducedCoinState:
    """Content of the reduced coin density matrix: ``P_L``, ``P_R`` and ``Q``."""

    p_left: float
    p_right: float
    q: complex

    def __post_init__(self) -> None:
        pl, pr, q = float(self.p_left), float(self.p_right), complex(self.q)
        if abs(pl + pr - 1.0) > _TOL:
            raise InvalidDensityError(f"trace is {pl + pr!r}, expected 1")
        if min(pl, pr) < -_TOL:
            raise InvalidDensityError(f"negative diagonal entry: ({pl!r}, {pr!r})")
        if abs(q) ** 2 - pl * pr > _TOL:
            raise InvalidDensityError(
                f"|q|^2 = {abs(q) ** 2!r} exceeds p_left * p_right = {pl * pr!r}"
            )
        object.__setattr__(self, "p_left", pl)
        object.__setattr__(self, "p_right", pr)
        object.__setattr__(self, "q", q)

    @property
    def gcd(self) -> ChiralityDist:
        return ChiralityDist(self.p_left, self.p_right)

    def matrix(self) -> NDArray[np.complex128]:
        """The Hermitian 2x2 matrix ``[[P_L, Q], [Q*, P_R]]``."""
        return np.array(
            [[self.p_left, self.q], [self.q.conjugate(), self.p_right]], dtype=np.complex128
        )


@dataclass(frozen=True)
class EntanglementReport:
    lambda_plus: float
    lambda_minus: float
    entropy: float


def _sums(state: WalkerState) -> tuple[float, float, complex]:
    a, b = state.left_amp, state.right_amp
    p_left = float(np.sum(a.real**2 + a.imag**2))
    p_right = float(np.sum(b.real**2 + b.imag**2))
    q = complex(np.sum(a * np.conj(b)))
    # divide out accumulated norm drift so the pair sums to one
    norm = p_left + p_right
    return p_left / norm, p_right / norm, q / norm


def gcd(state: WalkerState) -> ChiralityDist:
    """Total left and right chirality probabilities of ``state``."""
    p_left, p_right, _ = _sums(state)
    return ChiralityDist(p_left, p_right)


def coherence(state: WalkerState) -> complex:
    """Coin coherence ``Q(t) = sum_k a_k b_k*``."""
    return _sums(state)[2]


def reduced_density(state: WalkerState) -> ReducedCoinState:
    """Reduced coin state obtained by tracing out position."""
    return ReducedCoinState(*_sums(state))


def entanglement_entropy(rc: ReducedCoinState) -> EntanglementReport:
    """Eigenvalues and base-2 von Neumann entropy of the reduced coin state.

    Uses the closed-form eigenvalues
    ``lambda_pm = (1 +- sqrt(1 + 4(|Q|^2 - P_L P_R))) / 2``.
    Round-off pushing the radicand at most 1e-12 outside ``[0, 1]`` is
    clamped; anything larger is rejected.
    """
    radicand = 1.0 + 4.0 * (abs(rc.q) ** 2 - rc.p_left * rc.p_right)
    if radicand < -_TOL or radicand > 1.0 + _TOL:
        raise InvalidDensityError(f"eigenvalue radicand {radicand!r} outside [0, 1]")
    root = math.sqrt(min(max(radicand, 0.0), 1.0))
    lam_plus = 0.5 * (1.0 + root)
    lam_minus = 0.5 * (1.0 - root)
    return EntanglementReport(lam_plus, lam_minus, _entropy2(lam_plus, lam_minus))
