"""The chirality distribution obeys a two-state master equation.

Feeding the measured coherence Re Q(t) into the master step reproduces
the next P_L(t + 1) exactly.  With Re Q frozen at a constant, the chain
relaxes geometrically (ratio cos 2 theta) to the stationary value.
"""

import math

from chiralwalk import (
    ChiralityDist,
    CoinParams,
    init_localized,
    markov_closed_form,
    master_step,
    reduced_density,
    stationary_gcd,
    trajectory,
)

coin = CoinParams(math.pi / 3)
start = init_localized((1 / math.sqrt(2), 1j / math.sqrt(2)))

rc = reduced_density(start)
worst = 0.0
for nxt in trajectory(start, coin, 300):
    predicted = master_step(rc.gcd, rc.q.real, coin)
    rc = reduced_density(nxt)
    worst = max(worst, abs(predicted.p_left - rc.p_left))
print(f"max |predicted - measured| P_L over 300 steps: {worst:.1e}")

# constant coherence: closed form against the fixed point
q = 0.2
target = stationary_gcd(q, coin)
init = ChiralityDist(0.9, 0.1)
print(f"stationary P_L for Re Q = {q}: {target.p_left:.6f}")
for t in (0, 1, 2, 5, 10, 20):
    d = markov_closed_form(init, q, coin, t)
    print(f"  t={t:>3}  P_L={d.p_left:.10f}")
