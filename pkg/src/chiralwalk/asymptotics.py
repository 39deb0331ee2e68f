"""
Long-time behaviour of the walk from a smoothly extended initial state.

For ``t`` large the amplitudes are approximated by a Bessel convolution of the
initial data,

    a_k(t) ~ sum_l (-1)^(k-l) a_l^0 J_{k-l}(t cos theta)

(and the same for ``b``).  The kernel acts identically on both chiralities,
so ``P_L``, ``P_R`` and ``Q`` are frozen at their initial values.

Bessel functions of integer order come from Miller's downward recurrence,
which is stable for all orders and arguments we need (orders up to a bit
beyond ``t cos theta``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from .walk import CoinParams, WalkerState

__all__ = [
    "BesselRow",
    "AsymptoticRecord",
    "bessel_row",
    "kernel_order",
    "asymptotic_state",
    "asymptotic_invariants",
]

_RESCALE_AT = 1e100
_TINY_X = 1e-8


@dataclass(frozen=True, eq=False)
class BesselRow:
    """Values ``J_l(x)`` for ``order_min <= l <= order_max``."""

    order_min: int
    order_max: int
    values: NDArray[np.float64]
    argument: float

    def __getitem__(self, order: int) -> float:
        if not self.order_min <= order <= self.order_max:
            raise IndexError(f"order {order} outside [{self.order_min}, {self.order_max}]")
        return float(self.values[order - self.order_min])

    @property
    def orders(self) -> NDArray[np.int64]:
        return np.arange(self.order_min, self.order_max + 1)


@dataclass(frozen=True)
class AsymptoticRecord:
    """Long-time chirality quantities.

    The entropy fields are ``None`` when only the invariants of the initial
    data are known (see :func:`asymptotic_invariants`).
    """

    pi_left: float
    pi_right: float
    q0: complex
    lambda_plus: Optional[float] = None
    lambda_minus: Optional[float] = None
    s0: Optional[float] = None
    s_shannon: Optional[float] = None


def _miller_start(order_max: int, x: float) -> int:
    m = max(order_max, math.ceil(x))
    return m + 15 + 2 * math.ceil(math.sqrt(m + x))


def _bessel_nonneg(x: float, order_max: int) -> NDArray[np.float64]:
    """``J_0(x) ... J_order_max(x)`` by normalized downward recurrence."""
    out = np.zeros(order_max + 1)
    if x == 0.0:
        out[0] = 1.0
        return out
    if x < _TINY_X:
        # two terms of the power series are exact to double precision here
        half = 0.5 * x
        for n in range(order_max + 1):
            lead = math.exp(n * math.log(half) - math.lgamma(n + 1))
            out[n] = lead * (1.0 - half * half / (n + 1))
        return out

    start = _miller_start(order_max, x)
    j = np.zeros(start + 2)
    j[start] = 1.0
    two_over_x = 2.0 / x
    j_next, j_cur = 0.0, 1.0
    for n in range(start, 0, -1):
        j_prev = n * two_over_x * j_cur - j_next
        j[n - 1] = j_prev
        if abs(j_prev) > _RESCALE_AT:
            j[n - 1 :] /= _RESCALE_AT
            j_prev /= _RESCALE_AT
            j_cur /= _RESCALE_AT
        j_next, j_cur = j_cur, j_prev
    # J_0 + 2 (J_2 + J_4 + ...) = 1
    norm = j[0] + 2.0 * math.fsum(j[2::2])
    return j[: order_max + 1] / norm


def bessel_row(x: float, order_max: int) -> BesselRow:
    """Cylindrical Bessel functions ``J_l(x)`` for ``|l| <= order_max``.

    Negative orders follow from ``J_{-l} = (-1)^l J_l`` and are exact mirror
    images of the positive ones.
    """
    x = float(x)
    if x < 0 or math.isnan(x):
        raise ValueError(f"x must be nonnegative, got {x!r}")
    if order_max < 0:
        raise ValueError(f"order_max must be nonnegative, got {order_max}")
    pos = _bessel_nonneg(x, int(order_max))
    signs = np.where(np.arange(1, order_max + 1) % 2 == 1, -1.0, 1.0)
    neg = (signs * pos[1:])[::-1]
    values = np.concatenate([neg, pos])
    values.setflags(write=False)
    return BesselRow(-int(order_max), int(order_max), values, x)


def kernel_order(x: float) -> int:
    """Order beyond which ``|J_l(x)|`` is negligible (< 1e-15).

    Past the turning point ``l = x`` the decay is Airy-like on the scale
    ``(x/2)^(1/3)``.
    """
    return math.ceil(x + 20.0 + 18.0 * (0.5 * x) ** (1.0 / 3.0))


def asymptotic_state(init: WalkerState, coin: CoinParams, t: int) -> WalkerState:
    """Bessel-convolution approximation to the state at time ``t``.

    This is an asymptotic formula for smoothly extended initial data; it is
    never a substitute for :func:`chiralwalk.walk.evolve`.
    """
    coin.require_interior()
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    x = t * math.cos(coin.theta)
    order = kernel_order(x)
    row = bessel_row(x, order)
    # kernel[n] = (-1)^n J_n(x) = J_{-n}(x), so the row reversed
    kernel = row.values[::-1]
    a = np.convolve(init.left_amp, kernel)
    b = np.convolve(init.right_amp, kernel)
    return WalkerState(init.time + int(t), init.origin - order, a, b)


def asymptotic_invariants(init: WalkerState) -> AsymptoticRecord:
    """``Q0``, ``Pi_L`` and ``Pi_R`` carried unchanged by the Bessel kernel."""
    a, b = init.left_amp, init.right_amp
    pi_left = float(np.sum(np.abs(a) ** 2))
    pi_right = float(np.sum(np.abs(b) ** 2))
    q0 = complex(np.sum(a * np.conj(b)))
    return AsymptoticRecord(pi_left=pi_left, pi_right=pi_right, q0=q0)
