"""Measuring when the asymptotic regime sets in.

A phase-matched Gaussian start (sigma0 = 100, cos^2 alpha = 0.3) keeps
P_L close to 0.3 throughout, so the default tolerance detects the
asymptote immediately.  A tight tolerance resolves the small transient
wiggles and shows them lasting longer for larger coin angles.
"""

import math

from chiralwalk import InitSpec, RunConfig, detect_t0, run_evolution

alpha = math.acos(math.sqrt(0.3))
for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
    cfg = RunConfig(theta=theta, max_time=2000,
                    init=InitSpec(kind="gaussian", sigma0=100, alpha=alpha))
    res = run_evolution(cfg)
    p_left, t = res.column("p_left"), res.column("t")
    coarse = detect_t0(p_left, cfg.epsilon, cfg.window, times=t)
    fine = detect_t0(p_left, 1e-5, cfg.window, times=t)
    print(f"theta={theta:.4f}  mean P_L={coarse.asymptotic_mean:.6f}  "
          f"t0(eps=0.01)={coarse.t0}  t0(eps=1e-5)={fine.t0}")
