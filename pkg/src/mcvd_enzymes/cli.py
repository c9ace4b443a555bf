"""Command line entry point: ``mcvd-enzymes <subcommand> [options]``.

Subcommands
    geometry   enzyme volumes and effective half-lives over the plan grid
    analytic   first-passage density and CDF of the point-Tx channel
    simulate   received signal and ITR of the plan's base channel
    sweep      ITR over every point of the plan
    optimum    sweep plus the ITR-minimising extended radius and slope fits

On failure a single line ``error: <category>: <message>`` goes to stderr and
the exit status is non-zero.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import analytic, experiment, geometry as geo, tables
from .config import ExperimentPlan, load_config
from .engine import SimulationConfig, scenario_kinetics
from .errors import ConfigError, McvdError
from .kinetics import degradation_factor

EXIT_CODES = {"config": 2, "io": 3}
SUBCOMMANDS = {
    "geometry": "enzyme volumes and effective half-lives over the plan grid",
    "analytic": "first-passage density and CDF of the point-Tx channel",
    "simulate": "received signal and ITR of the plan's base channel",
    "sweep": "ITR over every point of the plan",
    "optimum": "sweep plus the ITR-minimising extended radius and slope fits",
}


def _plan(args) -> ExperimentPlan:
    if args.config:
        plan = load_config(args.config)
    elif args.command in ("geometry", "analytic"):
        plan = ExperimentPlan(SimulationConfig("ST-ARx"))
    else:
        raise ConfigError("--config is required for this subcommand")
    over = {}
    if args.seed is not None:
        over["master_seed"] = args.seed
    if args.reps is not None:
        over["replications"] = args.reps
    if args.threads is not None:
        over["threads"] = args.threads
    if args.out is not None:
        over["out"] = args.out
    return plan.with_overrides(**over)


def _geometry_table(plan: ExperimentPlan, out: Path):
    rows = []
    for cfg in plan.points(("scenario", "d", "r_enz", "half_life")):
        g = geo.channel_geometry(cfg.scenario, cfg.r_r, cfg.d, cfg.r_enz, cfg.everywhere_distance,
                                 cfg.point_footprint)
        if g.enzyme is None:
            continue
        kin = scenario_kinetics(cfg, g)
        rows.append((cfg.scenario, cfg.d, cfg.r_enz, g.enzyme.outer_radius, geo.overlap_volume(g),
                     geo.total_enzyme_volume(g), kin.reference_volume, kin.effective_half_life))
    return [tables.write_csv(out / "geometry.csv", tables.GEOMETRY_HEADER, rows)]


def _analytic_table(plan: ExperimentPlan, out: Path, points: int):
    cfg = plan.base
    lam = degradation_factor(cfg.half_life_override) if cfg.half_life_override else 0.0
    p = analytic.ChannelParams(cfg.d, cfg.r_r, cfg.D, lam)
    times = np.linspace(cfg.t_end / points, cfg.t_end, points)
    rows = [
        (t, analytic.hit_rate(t, p), analytic.hit_cdf(t, p), analytic.hit_rate_enzyme(t, p),
         analytic.hit_cdf_enzyme(t, p))
        for t in times
    ]
    return [tables.write_csv(out / "analytic.csv", tables.ANALYTIC_HEADER, rows)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcvd-enzymes", description="Diffusion channels with a limited amount of enzymes."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in SUBCOMMANDS.items():
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("--config", help="plan file (key = value lines)")
        p.add_argument("--out", help="output directory (overrides the plan)")
        p.add_argument("--seed", type=int, help="master seed (overrides the plan)")
        p.add_argument("--reps", type=int, help="replications (overrides the plan)")
        p.add_argument("--threads", type=int, help="worker threads (overrides the plan)")
        p.add_argument("--dump-hits", action="store_true", help="also write hits.csv")
        if name == "analytic":
            p.add_argument("--points", type=int, default=200, help="number of time samples")
    return parser


def run(argv=None) -> list:
    args = build_parser().parse_args(argv)
    plan = _plan(args)
    out = Path(plan.out)
    if args.command == "geometry":
        return _geometry_table(plan, out)
    if args.command == "analytic":
        return _analytic_table(plan, out, args.points)
    if args.command == "simulate":
        res = experiment.simulate(plan, keep_hits=args.dump_hits)
    elif args.command == "sweep":
        res = experiment.sweep(plan)
    else:
        res = experiment.optimum(plan)
    return tables.emit_tables(res, out, dump_hits=args.dump_hits and args.command == "simulate")


def main(argv=None) -> int:
    try:
        for path in run(argv):
            print(path)
    except McvdError as exc:
        msg = str(exc).replace("\n", " ")
        print(f"error: {exc.category}: {msg}", file=sys.stderr)
        return EXIT_CODES.get(exc.category, 1)
    except OSError as exc:
        print(f"error: io: {exc}".replace("\n", " "), file=sys.stderr)
        return EXIT_CODES["io"]
    return 0


if __name__ == "__main__":
    sys.exit(main())
