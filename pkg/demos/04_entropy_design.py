"""Choosing the initial state for a target coin-position entanglement.

For each target entropy there are two Gaussian starts, one on each side
of Pi_L = 1/2.  We design both, evolve them for 2000 steps and compare
the measured entanglement entropy with the target.
"""

import math

from chiralwalk import (
    CoinParams,
    build_gaussian_state,
    design_from_entropy,
    entanglement_entropy,
    evolve,
    reduced_density,
)

coin = CoinParams(math.pi / 4)
print(f"{'target':>7} {'branch':>6} {'Pi_L':>8} {'delta':>8} {'S(2000)':>9}")
for target in (0.99, 0.9, 0.7, 0.3):
    for branch in ("left", "right"):
        params = design_from_entropy(target, coin, branch, sigma0=60.0)
        final = evolve(build_gaussian_state(params), coin, 2000)
        s = entanglement_entropy(reduced_density(final)).entropy
        print(f"{target:>7.2f} {branch:>6} {params.pi_left:>8.4f} {params.delta:>8.4f} {s:>9.5f}")
