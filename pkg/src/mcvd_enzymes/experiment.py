"""Running plans: single channels, ITR sweeps and optimum searches.

Work is split into independent (channel, replication) tasks that a bounded
thread pool executes in any order.  Results are merged by key and emitted in
a canonical sort order, so the thread count never changes the output.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import geometry as geo
from .config import ExperimentPlan
from .engine import SimulationConfig, run_experiment, run_replication
from .metrics import (
    ItrResult,
    ReceivedSignal,
    SweepResult,
    aggregate,
    bin_signal,
    find_optimal_renz,
    fit_renz_star_vs_distance,
    itr,
)
from .seeding import seed_derivation

SIM_KEYS = ("scenario", "d", "r_enz", "half_life")


@dataclass
class Results:
    signal: Optional[ReceivedSignal] = None
    itr: list = field(default_factory=list)
    optimum: list = field(default_factory=list)
    fits: list = field(default_factory=list)
    hits: Optional[list] = None


@dataclass(frozen=True)
class OptimumRow:
    scenario: str
    d: float
    t_s: float
    half_life: float
    sweep: SweepResult

    @property
    def r_enz_star(self) -> float:
        return self.sweep.r_enz_star

    @property
    def itr_min(self) -> float:
        return self.sweep.itr_min


@dataclass(frozen=True)
class FitRow:
    scenario: str
    t_s: float
    half_life: float
    slope: float
    intercept: float


@dataclass(frozen=True)
class _TimesOnly:
    hit_times: np.ndarray
    replication_id: int


def _sim_key(cfg: SimulationConfig):
    """Identity of the simulated channel; parameters that cannot matter are dropped."""
    _, anchor = geo.SCENARIOS[cfg.scenario]
    r_enz = cfg.r_enz if anchor in (geo.AROUND_RX, geo.AROUND_TX) else None
    half_life = cfg.unit_half_life if anchor is not None else None
    return (cfg.scenario, cfg.d, r_enz, half_life)


def _run_tasks(fn, tasks, threads: int) -> list:
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))


def sweep_itr(plan: ExperimentPlan, threads: Optional[int] = None) -> list:
    """Aggregated ITR for every point of the plan, sorted canonically.

    Each channel is simulated once with a single impulse at t = 0; every
    symbol period of the plan is then evaluated on the same hit records.
    """
    threads = plan.threads if threads is None else threads
    t_s_values = plan.values("t_s")
    channels = {}
    for cfg in plan.points(SIM_KEYS):
        channels.setdefault(_sim_key(cfg), cfg.single_emission())
    keys = sorted(channels, key=repr)
    tasks = [(k, i) for k in keys for i in range(plan.base.replications)]

    def one(task):
        key, rep = task
        cfg = channels[key]
        rec = run_replication(cfg, seed_derivation(cfg.master_seed, rep), rep)
        return rec.hit_times

    hit_times = dict(zip(tasks, _run_tasks(one, tasks, threads)))

    out = []
    for cfg in plan.points(SIM_KEYS):
        key = _sim_key(cfg)
        for t_s in t_s_values:
            per_rep = []
            for rep in range(cfg.replications):
                rec = _TimesOnly(hit_times[(key, rep)], rep)
                per_rep.append(
                    ItrResult(cfg.scenario, cfg.d, cfg.r_enz, t_s, cfg.unit_half_life,
                              itr(rec, t_s, cfg.t_end))
                )
            out.append(aggregate(per_rep))
    out.sort(key=lambda r: r.key)
    return out


def optimum_search(itr_results) -> tuple:
    """Optimal extended radius per (scenario, d, t_s, half-life) and slope fits.

    Returns ``(optimum_rows, fit_rows)``; a fit is made for every
    (scenario, t_s, half-life) group that spans at least two distances.
    """
    groups = defaultdict(list)
    for r in itr_results:
        groups[(r.scenario, r.d, r.t_s, r.half_life)].append(r)
    rows = [OptimumRow(*key, find_optimal_renz(v)) for key, v in sorted(groups.items())]

    by_ts = defaultdict(list)
    for row in rows:
        by_ts[(row.scenario, row.t_s, row.half_life)].append((row.d, row.r_enz_star))
    fits = []
    for (scenario, t_s, hl), pts in sorted(by_ts.items()):
        if len({d for d, _ in pts}) >= 2:
            slope, intercept = fit_renz_star_vs_distance(pts)
            fits.append(FitRow(scenario, t_s, hl, slope, intercept))
    return rows, fits


def simulate(plan: ExperimentPlan, threads: Optional[int] = None, keep_hits: bool = False) -> Results:
    """Received signal of the plan's base channel plus its ITR.

    The signal uses the configured bit sequence; the ITR always comes from a
    single-emission run (reused when the bit sequence already is one impulse).
    """
    threads = plan.threads if threads is None else threads
    cfg = plan.base
    records = run_experiment(cfg, threads=threads)
    signal = bin_signal(records, cfg.bin_width, cfg.t_end)
    single = records if cfg.bit_sequence == (1,) else run_experiment(cfg.single_emission(), threads=threads)
    itr_rows = []
    for t_s in plan.values("t_s"):
        per_rep = [
            ItrResult(cfg.scenario, cfg.d, cfg.r_enz, t_s, cfg.unit_half_life, itr(rec, t_s, cfg.t_end))
            for rec in single
        ]
        itr_rows.append(aggregate(per_rep))
    return Results(signal=signal, itr=itr_rows, hits=records if keep_hits else None)


def sweep(plan: ExperimentPlan, threads: Optional[int] = None) -> Results:
    return Results(itr=sweep_itr(plan, threads))


def optimum(plan: ExperimentPlan, threads: Optional[int] = None) -> Results:
    rows = sweep_itr(plan, threads)
    opt, fits = optimum_search(rows)
    return Results(itr=rows, optimum=opt, fits=fits)

