"""
Where molecules hit the receiver
================================

A reflecting sphere Tx shadows the far side of the Rx, so almost every hit
lands on the half facing the Tx.  Enzymes remove the wanderers that would
reach the back.
"""

from mcvd_enzymes import SimulationConfig, hemisphere_fractions, run_replication

for scenario in ("none-ST", "ST-ARx"):
    cfg = SimulationConfig(scenario, d=4.0, r_enz=8.0, molecules=10_000, dt=1e-4, t_s=0.1,
                           t_end=1.0, replications=1, bits=(1,))
    rec = run_replication(cfg, seed=7)
    # the axis points from the Tx (at +x) towards the Rx
    front, back = hemisphere_fractions(rec, axis=(-1.0, 0.0, 0.0))
    print(f"{scenario}: {rec.n_hits} hits, front {front:.3f}, back {back:.3f}, "
          f"degraded {rec.degraded_total}")
