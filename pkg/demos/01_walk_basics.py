"""Walk basics: a walker released at the origin spreads ballistically.

We start with pure left chirality at site 0 and a balanced coin
(theta = pi/4).  The norm stays at 1 to round-off and the position
spread grows linearly in time, so doubling t doubles sigma.
"""

import math

from chiralwalk import CoinParams, init_localized, position_spread, trajectory

coin = CoinParams(math.pi / 4)
state = init_localized((1, 0), site=0)

print(f"{'t':>6} {'sigma':>10} {'sigma/t':>8} {'norm-1':>10}")
for s in trajectory(state, coin, 2000):
    if s.time in (10, 100, 500, 1000, 2000):
        sigma = position_spread(s)
        print(f"{s.time:>6} {sigma:>10.3f} {sigma / s.time:>8.4f} {s.norm() - 1:>10.1e}")

# the support never outruns the light cone: one site per side per step
lo, hi = s.support()
print(f"support after {s.time} steps: [{lo}, {hi}]")
