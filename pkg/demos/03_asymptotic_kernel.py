"""Long-time behaviour from the Bessel kernel.

For a smooth Gaussian start the amplitudes at large t are a convolution
of the initial profile with Bessel functions of argument t cos(theta).
The chirality distribution it predicts is frozen in time and agrees with
the exact evolution.
"""

import math

from chiralwalk import (
    CoinParams,
    GaussianInitParams,
    asymptotic_invariants,
    asymptotic_state,
    build_gaussian_state,
    evolve,
    gcd,
    solve_delta,
)

coin = CoinParams(math.pi / 4)
alpha = math.pi / 3
init = build_gaussian_state(GaussianInitParams(20.0, 0, alpha, solve_delta(alpha, coin)))

inv = asymptotic_invariants(init)
print(f"invariants: Pi_L={inv.pi_left:.6f}  Q0={inv.q0:.6f}")

for t in (100, 500, 1000):
    approx = gcd(asymptotic_state(init, coin, t)).p_left
    exact = gcd(evolve(init, coin, t)).p_left
    print(f"t={t:>5}  kernel P_L={approx:.6f}  exact P_L={exact:.6f}")
