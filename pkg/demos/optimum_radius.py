"""
Searching for the best enzyme radius
====================================

A thin enzyme shell barely touches the straggling molecules, while a huge
one dilutes the enzymes.  The interference ratio has a minimum in between.
"""

from mcvd_enzymes.config import parse_config
from mcvd_enzymes.experiment import optimum

plan = parse_config("""
scenario = ST-ARx
d = 6
r_enz = 2:18:4
t_s = 0.1, 0.5
molecules = 2000
replications = 4
delta_t = 1e-4
seed = 3
""")

res = optimum(plan)
for row in res.itr:
    print(f"t_s={row.t_s:3.1f}  r_enz={row.r_enz:4.1f}  ITR {row.itr_mean:.4f} +- {row.std_error:.4f}")
for row in res.optimum:
    print(f"t_s={row.t_s:3.1f}: best r_enz {row.r_enz_star:g} um (ITR {row.itr_min:.4f})")
