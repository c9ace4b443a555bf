"""
Received signal over four symbols
=================================

Four consecutive 1-bits are sent.  Without enzymes the leftover molecules
pile up; enzymes around the Rx keep each symbol looking like the first.
"""

from mcvd_enzymes import SimulationConfig, bin_signal, run_experiment


def per_symbol(scenario):
    cfg = SimulationConfig(scenario, d=4.0, r_enz=8.0, t_s=0.1, t_end=0.4, bits=(1, 1, 1, 1),
                           molecules=5000, replications=5, dt=1e-4, bin_width=0.005)
    sig = bin_signal(run_experiment(cfg), cfg.bin_width, cfg.t_end)
    return sig.mean_counts.reshape(4, -1)


for scenario in ("none-ST", "ST-ARx"):
    blocks = per_symbol(scenario)
    print(scenario)
    for k, b in enumerate(blocks):
        print(f"  symbol {k + 1}: peak {b.max():6.1f}  floor {b.min():6.1f}  total {b.sum():7.1f}")
