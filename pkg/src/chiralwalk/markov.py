"""
Two-state master equation for the global chirality distribution.

Summing the site-probability map over all sites gives

    [P_L(t+1)]   [cos^2 th  sin^2 th] [P_L(t)]                     [ 1]
    [P_R(t+1)] = [sin^2 th  cos^2 th] [P_R(t)] + Re Q(t) sin 2th [-1]

which is exact along any walk trajectory.  For constant ``Q`` it has a
closed-form solution relaxing geometrically (ratio ``cos 2 theta``) to the
stationary point ``P_L = 1/2 + Re Q / tan theta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
from numpy.typing import NDArray

from .errors import InconsistentCoherenceError, InfeasibleCoherenceError
from .observables import ChiralityDist
from .walk import CoinParams

__all__ = [
    "GcdTrajectoryPoint",
    "transition_matrix",
    "master_step",
    "master_trajectory",
    "markov_closed_form",
    "stationary_gcd",
]

_TOL = 1e-12


@dataclass(frozen=True)
class GcdTrajectoryPoint:
    time: int
    dist: ChiralityDist


def transition_matrix(coin: CoinParams) -> NDArray[np.float64]:
    """Symmetric stochastic matrix ``[[c^2, s^2], [s^2, c^2]]``."""
    c2 = math.cos(coin.theta) ** 2
    s2 = math.sin(coin.theta) ** 2
    m = np.array([[c2, s2], [s2, c2]])
    assert np.all(m >= 0) and np.allclose(m.sum(axis=0), 1.0, rtol=0, atol=1e-15)
    return m


def _check_q(re_q: float) -> float:
    re_q = float(re_q)
    if abs(re_q) > 0.5 + _TOL:
        raise InconsistentCoherenceError(f"|Re Q| = {abs(re_q)!r} exceeds 1/2")
    return re_q


def _checked_dist(p_left: float, p_right: float) -> ChiralityDist:
    for p in (p_left, p_right):
        if not (-_TOL <= p <= 1.0 + _TOL):
            raise InconsistentCoherenceError(
                f"coherence drives the distribution to ({p_left!r}, {p_right!r})"
            )
    return ChiralityDist(p_left, p_right)


def master_step(dist: ChiralityDist, re_q: float, coin: CoinParams) -> ChiralityDist:
    """One update of the chirality master equation with source ``Re Q``.

    Raises :class:`InconsistentCoherenceError` if the result leaves
    ``[0, 1]``, which means ``re_q`` cannot come from an actual walker state
    with distribution ``dist``.
    """
    re_q = _check_q(re_q)
    c2 = math.cos(coin.theta) ** 2
    s2 = math.sin(coin.theta) ** 2
    source = re_q * math.sin(2.0 * coin.theta)
    p_left = c2 * dist.p_left + s2 * dist.p_right + source
    p_right = s2 * dist.p_left + c2 * dist.p_right - source
    return _checked_dist(p_left, p_right)


def master_trajectory(
    init: ChiralityDist, re_q: Iterable[float], coin: CoinParams, t0: int = 0
) -> Iterator[GcdTrajectoryPoint]:
    """Iterate :func:`master_step` with a (possibly time-dependent) ``Re Q`` series.

    Yields the starting point first, then one point per element of ``re_q``.
    """
    dist = init
    yield GcdTrajectoryPoint(t0, dist)
    for i, q in enumerate(re_q, start=1):
        dist = master_step(dist, q, coin)
        yield GcdTrajectoryPoint(t0 + i, dist)


def markov_closed_form(
    init: ChiralityDist, q_const: float, coin: CoinParams, t: int
) -> ChiralityDist:
    """Distribution after ``t`` steps of the master equation with constant ``Re Q``.

    Only valid for a time-independent coherence; for a measured ``Q(t)``
    iterate :func:`master_step` instead.
    """
    coin.require_interior()
    q_const = _check_q(q_const)
    if int(t) != t or t < 0:
        raise ValueError(f"t must be a nonnegative integer, got {t!r}")
    decay = math.cos(2.0 * coin.theta) ** int(t)
    keep = 0.5 * (1.0 + decay)
    swap = 0.5 * (1.0 - decay)
    source = q_const * (1.0 - decay) / math.tan(coin.theta)
    p_left = keep * init.p_left + swap * init.p_right + source
    p_right = swap * init.p_left + keep * init.p_right - source
    return _checked_dist(p_left, p_right)


def stationary_gcd(q0: float, coin: CoinParams) -> ChiralityDist:
    """Long-time chirality distribution for asymptotic coherence ``Re Q0``."""
    coin.require_interior()
    shift = 2.0 * float(np.real(q0)) / math.tan(coin.theta)
    if abs(shift) > 1.0 + _TOL:
        raise InfeasibleCoherenceError(
            f"2 Re(Q0)/tan(theta) = {shift!r}; no distribution in [0, 1] for this coherence"
        )
    return ChiralityDist(0.5 * (1.0 + shift), 0.5 * (1.0 - shift))
