import csv
import os

import pytest

from mcvd_enzymes import tables
from mcvd_enzymes.cli import main
from mcvd_enzymes.experiment import Results

SMALL = """
scenario = ST-ARx
d = 4
r_enz = 2, 8
t_s = 0.1, 0.2
t_end = 0.4
molecules = 300
replications = 2
delta_t = 1e-4
seed = 5
"""


def _write(tmp_path, text, name="plan.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def _read(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_headers_and_header_only_files(tmp_path):
    paths = tables.emit_tables(Results(), tmp_path / "out", dump_hits=True)
    names = sorted(os.path.basename(p) for p in paths)
    assert names == ["hits.csv", "itr.csv", "optimum.csv", "signal.csv"]
    out = tmp_path / "out"
    assert _read(out / "signal.csv") == [["bin_start_s", "bin_end_s", "mean_count", "std_count"]]
    assert _read(out / "itr.csv") == [
        ["scenario", "d_um", "r_enz_um", "t_s_s", "half_life_s", "itr_mean", "itr_std", "replications"]
    ]
    assert _read(out / "hits.csv") == [["replication", "hit_time_s", "x_um", "y_um", "z_um"]]
    assert _read(out / "optimum.csv") == [["d_um", "t_s_s", "r_enz_star_um", "itr_min"]]


def test_number_format():
    assert tables.fmt(0.1 + 0.2) == "0.3"
    assert tables.fmt(1 / 3) == "0.333333333"
    assert tables.fmt(5) == "5" and tables.fmt(0.0) == "0" and tables.fmt("ST-ARx") == "ST-ARx"


def test_simulate_writes_signal_itr_and_hits(tmp_path, capsys):
    plan = _write(tmp_path, "scenario = none-PT\nmolecules = 3\nreplications = 1\nt_end = 0.5\nt_s = 0.1\n"
                            "delta_t = 1e-4\nbits = 1\nseed = 2\n")
    # a single molecule stepping for 0.5 s almost surely reaches an Rx 4 um away
    out = tmp_path / "sim"
    assert main(["simulate", "--config", plan, "--out", str(out), "--dump-hits"]) == 0
    hits = _read(out / "hits.csv")
    assert 1 <= len(hits) - 1 <= 3
    signal = _read(out / "signal.csv")
    assert len(signal) == 1 + 100
    assert sum(float(r[2]) for r in signal[1:]) == len(hits) - 1
    assert len(_read(out / "itr.csv")) == 2
    assert str(out / "signal.csv") in capsys.readouterr().out


def test_sweep_is_identical_across_thread_counts(tmp_path):
    plan = _write(tmp_path, SMALL)
    blobs = []
    for threads in ("1", "3"):
        out = tmp_path / f"t{threads}"
        assert main(["sweep", "--config", plan, "--out", str(out), "--threads", threads]) == 0
        blobs.append({n: (out / n).read_bytes() for n in ("itr.csv", "signal.csv", "optimum.csv")})
    assert blobs[0] == blobs[1]
    rows = _read(tmp_path / "t1" / "itr.csv")
    assert len(rows) == 1 + 2 * 2
    assert [r[2] for r in rows[1:]] == ["2", "2", "8", "8"]


def test_optimum_writes_rows_and_fit(tmp_path):
    plan = _write(tmp_path, SMALL.replace("d = 4", "d = 4, 6"))
    out = tmp_path / "opt"
    assert main(["optimum", "--config", plan, "--out", str(out), "--reps", "2"]) == 0
    rows = _read(out / "optimum.csv")
    assert len(rows) == 1 + 2 * 2
    assert all(r[2] in ("2", "8") for r in rows[1:])
    fit = _read(out / "fit.csv")
    assert fit[0] == ["scenario", "t_s_s", "half_life_s", "slope", "intercept"] and len(fit) == 3


def test_geometry_and_analytic_without_config(tmp_path):
    out = tmp_path / "g"
    assert main(["geometry", "--out", str(out)]) == 0
    rows = _read(out / "geometry.csv")
    assert rows[1][0] == "ST-ARx"
    assert float(rows[1][5]) == pytest.approx(913.156, abs=1e-3)
    assert main(["analytic", "--out", str(out), "--points", "5"]) == 0
    rows = _read(out / "analytic.csv")
    assert rows[0] == ["time_s", "hit_rate_per_s", "hit_cdf", "hit_rate_enzyme_per_s", "hit_cdf_enzyme"]
    assert len(rows) == 6 and float(rows[-1][0]) == 2.0


@pytest.mark.parametrize(
    "argv, code, category",
    [
        (["sweep"], 2, "config"),
        (["sweep", "--config", "MISSING"], 3, "io"),
        (["simulate", "--config", "BAD"], 2, "config"),
        (["sweep", "--config", "ZERO_HITS"], 1, "metric"),
    ],
)
def test_errors_are_reported_on_one_line(tmp_path, capsys, argv, code, category):
    files = {
        "MISSING": str(tmp_path / "absent.txt"),
        "BAD": _write(tmp_path, "scenario = ST-ARx\nd = -1\n", "bad.txt"),
        "ZERO_HITS": _write(tmp_path, "scenario = none-PT\nd = 4\nt_s = 0.001\nt_end = 0.002\n"
                                      "delta_t = 1e-4\nmolecules = 5\nreplications = 1\n", "zero.txt"),
    }
    argv = [files.get(a, a) for a in argv] + ["--out", str(tmp_path / "o")]
    assert main(argv) == code
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith(f"error: {category}: ")


def test_unwritable_output_is_an_io_error(tmp_path, capsys):
    target = tmp_path / "file"
    target.write_text("x")
    assert main(["geometry", "--out", str(target / "sub")]) == 3
    assert capsys.readouterr().err.startswith("error: io: ")
