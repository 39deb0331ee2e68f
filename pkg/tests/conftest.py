import math

import numpy as np
import pytest

from chiralwalk.walk import WalkerState

THETAS = [math.pi / 6, math.pi / 4, math.pi / 3]


def random_state(rng: np.random.Generator, n: int = 20, origin: int = -5) -> WalkerState:
    """Normalized state with random complex amplitudes on ``n`` sites."""
    a = rng.normal(size=n) + 1j * rng.normal(size=n)
    b = rng.normal(size=n) + 1j * rng.normal(size=n)
    norm = math.sqrt(np.sum(np.abs(a) ** 2 + np.abs(b) ** 2))
    return WalkerState(0, origin, a / norm, b / norm)


def dense_amplitudes(state: WalkerState, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Amplitudes on sites ``lo..hi`` inclusive, zero-padded."""
    n = hi - lo + 1
    a = np.zeros(n, dtype=complex)
    b = np.zeros(n, dtype=complex)
    start = state.origin - lo
    a[start:start + len(state)] = state.left_amp
    b[start:start + len(state)] = state.right_amp
    return a, b


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
