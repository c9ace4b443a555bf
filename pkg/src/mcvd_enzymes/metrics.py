"""Observables computed from hit records."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, FitError, UndefinedMetricError


@dataclass(frozen=True)
class ReceivedSignal:
    bin_edges: np.ndarray
    mean_counts: np.ndarray
    std_counts: np.ndarray

    @property
    def bin_starts(self):
        return self.bin_edges[:-1]

    @property
    def bin_ends(self):
        return self.bin_edges[1:]


def _std(x, axis=0):
    x = np.asarray(x, dtype=float)
    if x.shape[axis] < 2:
        return np.zeros(np.delete(x.shape, axis))
    return x.std(axis=axis, ddof=1)


def bin_edges(bin_width: float, t_end: float) -> np.ndarray:
    """Edges tiling ``(0, t_end]``; the last bin is shortened if needed."""
    if not bin_width > 0:
        raise DomainError(f"bin width must be positive, got {bin_width}")
    n = int(np.ceil(t_end / bin_width - 1e-9))
    edges = np.arange(n + 1) * bin_width
    edges[-1] = t_end
    return edges


def bin_counts(hit_times, edges) -> np.ndarray:
    """Hits per bin with bins closed on the right, ``(lo, hi]``."""
    idx = np.searchsorted(edges, np.asarray(hit_times, float), side="left") - 1
    idx = idx[(idx >= 0) & (idx < edges.size - 1)]
    return np.bincount(idx, minlength=edges.size - 1)


def bin_signal(hits: Sequence, bin_width: float, t_end: float) -> ReceivedSignal:
    edges = bin_edges(bin_width, t_end)
    counts = np.array([bin_counts(h.hit_times, edges) for h in hits], dtype=float)
    if counts.size == 0:
        counts = np.zeros((1, edges.size - 1))
    return ReceivedSignal(edges, counts.mean(axis=0), _std(counts))


def received_until(hits, t: float) -> int:
    """Number of molecules received up to and including time ``t``."""
    return int(np.count_nonzero(np.asarray(hits.hit_times) <= t))


def itr(hits, t_s: float, t_end: float) -> float:
    """Interference-to-total-received ratio of one single-emission record.

    ``(F(t_end) - F(t_s)) / F(t_end)`` where ``F(t)`` counts hits up to ``t``
    after the emission at time zero.
    """
    if t_s > t_end:
        raise DomainError(f"t_s={t_s} exceeds t_end={t_end}")
    total = received_until(hits, t_end)
    if total == 0:
        raise UndefinedMetricError(
            f"no molecules received by t_end={t_end} in replication {getattr(hits, 'replication_id', '?')}"
        )
    return (total - received_until(hits, t_s)) / total


def hemisphere_fractions(hits, axis, center=(0.0, 0.0, 0.0)):
    """Fractions of hits on the Tx-facing (front) and far (back) Rx halves.

    ``axis`` points from the Tx towards the Rx.  A hit is on the back half
    when its offset from the Rx centre has a positive component along
    ``axis``; everything else (including the measure-zero equator) is front.
    """
    pos = np.asarray(getattr(hits, "hit_positions", hits), dtype=float).reshape(-1, 3)
    if pos.shape[0] == 0:
        raise UndefinedMetricError("hemisphere fractions of an empty hit set")
    a = np.asarray(axis, dtype=float)
    proj = (pos - np.asarray(center, float)) @ a
    back = np.count_nonzero(proj > 0) / pos.shape[0]
    return 1.0 - back, back


@dataclass(frozen=True)
class ItrResult:
    scenario: str
    d: float
    r_enz: float
    t_s: float
    half_life: float
    itr_mean: float
    itr_std: float = 0.0
    replications: int = 1

    @property
    def key(self):
        return (self.scenario, self.d, self.r_enz, self.t_s, self.half_life)

    @property
    def std_error(self) -> float:
        return self.itr_std / np.sqrt(self.replications)


def aggregate(results: Sequence[ItrResult]) -> ItrResult:
    """Mean and sample standard deviation of per-replication ITR values."""
    if len(results) == 0:
        raise DomainError("aggregate needs at least one replication")
    keys = {r.key for r in results}
    if len(keys) != 1:
        raise DomainError(f"cannot aggregate results of different channels: {sorted(keys)}")
    vals = np.array([r.itr_mean for r in results])
    return replace(results[0], itr_mean=float(vals.mean()), itr_std=float(_std(vals)),
                   replications=len(results))


def pooled_standard_error(a: ItrResult, b: ItrResult) -> float:
    return float(np.hypot(a.std_error, b.std_error))


@dataclass(frozen=True)
class SweepResult:
    grid: tuple
    r_enz_star: float
    itr_min: float

    @property
    def interior(self) -> bool:
        radii = [r.r_enz for r in self.grid]
        return min(radii) < self.r_enz_star < max(radii)


def find_optimal_renz(sweep: Sequence[ItrResult]) -> SweepResult:
    """Grid point with the lowest mean ITR; ties go to the smaller radius."""
    if len(sweep) == 0:
        raise DomainError("empty r_enz sweep")
    grid = tuple(sorted(sweep, key=lambda r: r.r_enz))
    best = min(grid, key=lambda r: (r.itr_mean, r.r_enz))
    return SweepResult(grid, best.r_enz, best.itr_mean)


def fit_renz_star_vs_distance(points) -> tuple:
    """Least-squares line through ``(d, r_enz_star)`` pairs; returns (slope, intercept)."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if np.unique(pts[:, 0]).size < 2:
        raise FitError("need at least two distinct distances to fit a slope")
    slope, intercept = np.polyfit(pts[:, 0], pts[:, 1], 1)
    return float(slope), float(intercept)


def replicate_itrs(records: Sequence, t_s: float, t_end: float, meta: Optional[dict] = None) -> list:
    """One :class:`ItrResult` per replication record (``meta`` fills the key)."""
    meta = dict(meta or {})
    return [ItrResult(itr_mean=itr(h, t_s, t_end), t_s=t_s, **meta) for h in records]
