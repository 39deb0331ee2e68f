"""Asymptotic entropy over the (theta, Pi_L) plane.

The sweep writes a CSV suitable for contour plotting.  Each level curve
has two branches symmetric about Pi_L = 1/2, and the branches close in
as the coin angle grows.
"""

import math
import sys

import numpy as np

from chiralwalk import level_crossings, sweep_entropy_surface

thetas = [math.pi / 6, math.pi / 4, math.pi / 3]
grid = np.linspace(0, 1, 1001)
out = sys.argv[1] if len(sys.argv) > 1 else None
table = sweep_entropy_surface(thetas, grid, out)

for i, theta in enumerate(thetas):
    rows = table[i * grid.size:(i + 1) * grid.size]
    feasible = rows[rows[:, 3] == 1, 1]
    print(f"theta={theta:.4f}: feasible Pi_L in [{feasible.min():.3f}, {feasible.max():.3f}]")
    for level in (0.99, 0.95, 0.90, 0.85, 0.70):
        lo, hi = level_crossings(rows[:, 1], rows[:, 2], level)
        print(f"  S0={level:.2f}: Pi_L = {lo:.4f} and {hi:.4f}")
if out:
    print(f"wrote {out}")
