"""CSV outputs with fixed headers and 9-significant-digit numbers."""

from __future__ import annotations

import csv
import os
from pathlib import Path

SIGNAL_HEADER = ("bin_start_s", "bin_end_s", "mean_count", "std_count")
ITR_HEADER = ("scenario", "d_um", "r_enz_um", "t_s_s", "half_life_s", "itr_mean", "itr_std", "replications")
HITS_HEADER = ("replication", "hit_time_s", "x_um", "y_um", "z_um")
OPTIMUM_HEADER = ("d_um", "t_s_s", "r_enz_star_um", "itr_min")
FIT_HEADER = ("scenario", "t_s_s", "half_life_s", "slope", "intercept")
GEOMETRY_HEADER = (
    "scenario", "d_um", "r_enz_um", "enzyme_radius_um", "overlap_um3",
    "total_volume_um3", "reference_volume_um3", "effective_half_life_s",
)
ANALYTIC_HEADER = ("time_s", "hit_rate_per_s", "hit_cdf", "hit_rate_enzyme_per_s", "hit_cdf_enzyme")


def fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (bool,)):
        return str(int(v))
    if isinstance(v, int) or (hasattr(v, "dtype") and v.dtype.kind in "iu"):
        return str(int(v))
    x = float(v)
    if x == 0:
        return "0"
    return f"{x:.9g}"


def write_csv(path, header, rows) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            for row in rows:
                w.writerow([fmt(v) for v in row])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def signal_rows(signal):
    if signal is None:
        return []
    return zip(signal.bin_starts, signal.bin_ends, signal.mean_counts, signal.std_counts)


def itr_rows(results):
    return [
        (r.scenario, r.d, r.r_enz, r.t_s, r.half_life, r.itr_mean, r.itr_std, r.replications)
        for r in sorted(results, key=lambda r: r.key)
    ]


def hit_rows(records):
    rows = []
    for rec in sorted(records, key=lambda h: h.replication_id):
        for t, (x, y, z) in zip(rec.hit_times, rec.hit_positions):
            rows.append((rec.replication_id, t, x, y, z))
    return rows


def optimum_rows(rows):
    return [(r.d, r.t_s, r.r_enz_star, r.itr_min) for r in rows]


def fit_rows(rows):
    return [(r.scenario, r.t_s, r.half_life, r.slope, r.intercept) for r in rows]


def emit_tables(results, out_dir, dump_hits: bool = False) -> list:
    """Write ``signal.csv``, ``itr.csv``, ``optimum.csv`` (and ``fit.csv`` /
    ``hits.csv`` when there is something to put in them) under ``out_dir``.

    Empty results give header-only files.  Returns the written paths.
    """
    out = Path(out_dir)
    if out.exists() and not out.is_dir():
        raise OSError(f"output path {out} is not a directory")
    if out.exists() and not os.access(out, os.W_OK):
        raise OSError(f"output directory {out} is not writable")
    paths = [
        write_csv(out / "signal.csv", SIGNAL_HEADER, signal_rows(results.signal)),
        write_csv(out / "itr.csv", ITR_HEADER, itr_rows(results.itr)),
        write_csv(out / "optimum.csv", OPTIMUM_HEADER, optimum_rows(results.optimum)),
    ]
    if results.fits:
        paths.append(write_csv(out / "fit.csv", FIT_HEADER, fit_rows(results.fits)))
    if dump_hits:
        paths.append(write_csv(out / "hits.csv", HITS_HEADER, hit_rows(results.hits or [])))
    return paths
