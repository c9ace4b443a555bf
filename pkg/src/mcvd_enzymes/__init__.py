"""Monte Carlo and analytic tools for diffusion channels with a limited amount of enzymes."""

from .analytic import ChannelParams, hit_cdf, hit_cdf_enzyme, hit_rate, hit_rate_enzyme
from .config import ExperimentPlan, load_config, parse_config, render_config
from .engine import (
    HitRecordSet,
    MoleculeState,
    SimulationConfig,
    build_scenario,
    run_experiment,
    run_replication,
    step_particles,
)
from .errors import (
    ConfigError,
    DomainError,
    FitError,
    GeometryError,
    McvdError,
    QuadratureError,
    UndefinedMetricError,
)
from .geometry import (
    ChannelGeometry,
    EnzymeRegion,
    Point3,
    SphereBody,
    channel_geometry,
    contains,
    lens_volume,
    overlap_volume,
    sphere_volume,
    total_enzyme_volume,
)
from .kinetics import (
    KineticsSpec,
    concentration_decay,
    degradation_factor,
    effective_half_life,
    survival_probability,
)
from .metrics import (
    ItrResult,
    ReceivedSignal,
    SweepResult,
    aggregate,
    bin_signal,
    find_optimal_renz,
    fit_renz_star_vs_distance,
    hemisphere_fractions,
    itr,
)
from .seeding import seed_derivation
from .tables import emit_tables

__version__ = "0.1.0"
