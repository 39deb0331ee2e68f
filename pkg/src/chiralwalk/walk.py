"""
Discrete-time quantum walk on the integer line.

The state is a two-component spinor field ``(a_k, b_k)`` stored on a finite
window ``[origin, origin + n)``; everything outside the window is exactly
zero.  One step of the walk is the map

    a_k(t+1) = a_{k+1}(t) cos(theta) + b_{k+1}(t) sin(theta)
    b_k(t+1) = a_{k-1}(t) sin(theta) - b_{k-1}(t) cos(theta)

which is what the coin ``sigma_z cos(theta) + i sigma_x sin(theta)`` followed
by the chirality-conditioned shift amounts to.  The same dynamics can be
written for the site probabilities plus an interference term, see
:func:`prob_step`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np
from numpy.typing import NDArray

from .errors import DomainError, NormalizationError

__all__ = [
    "CoinParams",
    "WalkerState",
    "PositionProfile",
    "init_localized",
    "step",
    "evolve",
    "trajectory",
    "profile",
    "prob_step",
    "position_spread",
]

NORM_TOL = 1e-12
# accumulated round-off allowed when a state is constructed after many steps
_STATE_NORM_TOL = 1e-9


@dataclass(frozen=True)
class CoinParams:
    """Coin angle ``theta`` in radians, restricted to ``[0, pi/2]``."""

    theta: float

    def __post_init__(self) -> None:
        theta = float(self.theta)
        if not (0.0 <= theta <= math.pi / 2 + 1e-15) or math.isnan(theta):
            raise DomainError(f"theta must lie in [0, pi/2], got {theta!r}")
        object.__setattr__(self, "theta", theta)

    @property
    def cos(self) -> float:
        return math.cos(self.theta)

    @property
    def sin(self) -> float:
        return math.sin(self.theta)

    def require_interior(self) -> "CoinParams":
        """Raise :class:`DomainError` unless ``0 < theta < pi/2``.

        Needed wherever ``tan(theta)`` ends up in a denominator.
        """
        if not (0.0 < self.theta < math.pi / 2) or math.isclose(self.theta, math.pi / 2):
            raise DomainError(
                f"theta must lie in the open interval (0, pi/2), got {self.theta!r}"
            )
        return self


@dataclass(frozen=True, eq=False)
class WalkerState:
    """Amplitudes ``a_k`` (left chirality) and ``b_k`` (right chirality).

    ``left_amp[i]`` and ``right_amp[i]`` belong to lattice site ``origin + i``.
    """

    time: int
    origin: int
    left_amp: NDArray[np.complex128]
    right_amp: NDArray[np.complex128]

    def __post_init__(self) -> None:
        a = np.asarray(self.left_amp, dtype=np.complex128)
        b = np.asarray(self.right_amp, dtype=np.complex128)
        if a.ndim != 1 or a.shape != b.shape or a.size == 0:
            raise ValueError("left_amp and right_amp must be non-empty 1-d arrays of equal length")
        if int(self.time) < 0:
            raise ValueError(f"time must be nonnegative, got {self.time}")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "left_amp", a)
        object.__setattr__(self, "right_amp", b)
        object.__setattr__(self, "time", int(self.time))
        object.__setattr__(self, "origin", int(self.origin))
        norm = self.norm()
        if abs(norm - 1.0) > _STATE_NORM_TOL:
            raise NormalizationError(f"state norm is {norm!r}, expected 1")

    def __len__(self) -> int:
        return self.left_amp.size

    @property
    def sites(self) -> NDArray[np.int64]:
        """Lattice indices of the stored window."""
        return np.arange(self.origin, self.origin + len(self), dtype=np.int64)

    def norm(self) -> float:
        a, b = self.left_amp, self.right_amp
        return float(np.sum(a.real**2 + a.imag**2 + b.real**2 + b.imag**2))

    def support(self) -> tuple[int, int]:
        """First and last site holding a nonzero amplitude."""
        nz = np.flatnonzero((self.left_amp != 0) | (self.right_amp != 0))
        return self.origin + int(nz[0]), self.origin + int(nz[-1])


@dataclass(frozen=True, eq=False)
class PositionProfile:
    """Site-resolved chirality probabilities and interference terms.

    ``beta`` is ``None`` for profiles produced by :func:`prob_step`, which
    cannot propagate the interference term without amplitudes.
    """

    origin: int
    p_left: NDArray[np.float64]
    p_right: NDArray[np.float64]
    beta: Optional[NDArray[np.float64]] = None

    def __post_init__(self) -> None:
        pl = np.asarray(self.p_left, dtype=np.float64)
        pr = np.asarray(self.p_right, dtype=np.float64)
        if pl.shape != pr.shape or pl.ndim != 1:
            raise ValueError("p_left and p_right must be 1-d arrays of equal length")
        object.__setattr__(self, "p_left", pl)
        object.__setattr__(self, "p_right", pr)
        if self.beta is not None:
            beta = np.asarray(self.beta, dtype=np.float64)
            if beta.shape != pl.shape:
                raise ValueError("beta must match p_left in length")
            object.__setattr__(self, "beta", beta)

    @property
    def total(self) -> NDArray[np.float64]:
        """Position distribution ``P_k = P_kL + P_kR``."""
        return self.p_left + self.p_right


def init_localized(chirality_mix: tuple[complex, complex], site: int = 0) -> WalkerState:
    """Walker sitting on a single site with coin state ``(c_L, c_R)``."""
    c_left, c_right = (complex(c) for c in chirality_mix)
    norm = abs(c_left) ** 2 + abs(c_right) ** 2
    if abs(norm - 1.0) > NORM_TOL:
        raise NormalizationError(f"|c_L|^2 + |c_R|^2 = {norm!r}, expected 1")
    return WalkerState(0, int(site), np.array([c_left]), np.array([c_right]))


def _trim(origin: int, a: NDArray, b: NDArray) -> tuple[int, NDArray, NDArray]:
    nz = np.flatnonzero((a != 0) | (b != 0))
    if nz.size == 0:
        return origin, a[:1], b[:1]
    lo, hi = int(nz[0]), int(nz[-1]) + 1
    return origin + lo, a[lo:hi], b[lo:hi]


def step(state: WalkerState, coin: CoinParams) -> WalkerState:
    """Advance the walker by one time step.

    The output window is the input window grown by one site per side and then
    trimmed back to the outermost nonzero amplitudes.
    """
    c, s = coin.cos, coin.sin
    a, b = state.left_amp, state.right_amp
    n = a.size
    new_a = np.zeros(n + 2, dtype=np.complex128)
    new_b = np.zeros(n + 2, dtype=np.complex128)
    # site origin-1+i of the new window reads site origin+i (for a) / origin-2+i (for b)
    new_a[:n] = c * a + s * b
    new_b[2:] = s * a - c * b
    origin, new_a, new_b = _trim(state.origin - 1, new_a, new_b)
    return WalkerState(state.time + 1, origin, new_a, new_b)


def trajectory(state: WalkerState, coin: CoinParams, steps: int) -> Iterator[WalkerState]:
    """Yield the states at ``t+1, ..., t+steps``."""
    for _ in range(steps):
        state = step(state, coin)
        yield state


def evolve(state: WalkerState, coin: CoinParams, steps: int) -> WalkerState:
    """Apply :func:`step` ``steps`` times and return the final state."""
    for state in trajectory(state, coin, steps):
        pass
    return state


def profile(state: WalkerState) -> PositionProfile:
    """Site probabilities ``|a_k|^2``, ``|b_k|^2`` and ``beta_k = Re[a_k b_k*]``."""
    a, b = state.left_amp, state.right_amp
    return PositionProfile(
        origin=state.origin,
        p_left=np.abs(a) ** 2,
        p_right=np.abs(b) ** 2,
        beta=(a * np.conj(b)).real,
    )


def prob_step(prof: PositionProfile, coin: CoinParams) -> PositionProfile:
    """Propagate site probabilities one step using the interference terms.

    Returns only ``p_left`` and ``p_right`` at ``t+1``; the next ``beta``
    needs the amplitudes.
    """
    if prof.beta is None:
        raise ValueError("prob_step needs a profile carrying beta (take it from a WalkerState)")
    c2 = math.cos(coin.theta) ** 2
    s2 = math.sin(coin.theta) ** 2
    s2t = math.sin(2 * coin.theta)
    pl, pr, beta = prof.p_left, prof.p_right, prof.beta
    n = pl.size
    new_l = np.zeros(n + 2)
    new_r = np.zeros(n + 2)
    new_l[:n] = pl * c2 + pr * s2 + beta * s2t
    new_r[2:] = pl * s2 + pr * c2 - beta * s2t
    return PositionProfile(prof.origin - 1, new_l, new_r)


def position_spread(state: WalkerState) -> float:
    """Standard deviation of the position distribution."""
    p = np.abs(state.left_amp) ** 2 + np.abs(state.right_amp) ** 2
    # centre on the window to keep the second moment well conditioned
    k = np.arange(p.size, dtype=np.float64)
    mean = float(np.dot(k, p))
    var = float(np.dot((k - mean) ** 2, p))
    return math.sqrt(max(var, 0.0))
