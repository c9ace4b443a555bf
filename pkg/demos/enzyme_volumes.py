"""
Enzyme volumes and effective half-lives
=======================================

The amount of enzyme is fixed, so a larger enzyme sphere means a lower
concentration and a longer effective half-life.
"""

import numpy as np

from mcvd_enzymes import geometry as geo
from mcvd_enzymes.kinetics import KineticsSpec

# Rx radius and Tx-Rx gap in um, half-life at an extended radius of 1 um in s
r_r, d, unit_half_life = 5.0, 6.0, 0.002

# the reference volume is the same layout at r_enz = 1 um
ref = geo.total_enzyme_volume(geo.reference_geometry("ST-ARx", r_r, d))
print(f"reference free volume: {ref:.2f} um^3")

# the volume taken by the Rx and Tx changes regime at r_enz = d and d + 2 r_r
print(" r_enz   overlap    free volume   half-life")
for r_enz in np.arange(2.0, 27.0, 4.0):
    g = geo.channel_geometry("ST-ARx", r_r, d, r_enz)
    kin = KineticsSpec.from_volumes(unit_half_life, geo.total_enzyme_volume(g), ref)
    print(f"{r_enz:6.1f} {geo.overlap_volume(g):9.1f} {geo.total_enzyme_volume(g):14.1f}"
          f" {kin.effective_half_life * 1e3:9.2f} ms")

# the "everywhere" sphere is forty microns across the Rx for the longest gap of 10 um
every = geo.channel_geometry("everywhere-ST", r_r, d, 1.0, everywhere_distance=10.0)
kin = KineticsSpec.from_volumes(unit_half_life, geo.total_enzyme_volume(every), ref)
print(f"everywhere: radius {every.enzyme.outer_radius:g} um, half-life {kin.effective_half_life:.2f} s")
