from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mcvd_enzymes.errors import DomainError, FitError, UndefinedMetricError
from mcvd_enzymes.metrics import (
    ItrResult,
    aggregate,
    bin_counts,
    bin_edges,
    bin_signal,
    find_optimal_renz,
    fit_renz_star_vs_distance,
    hemisphere_fractions,
    itr,
    pooled_standard_error,
    received_until,
    replicate_itrs,
)


def rec(times, rep=0):
    return SimpleNamespace(hit_times=np.asarray(times, float), replication_id=rep)


def test_bin_edges_cover_the_run():
    np.testing.assert_allclose(bin_edges(0.1, 0.4), [0, 0.1, 0.2, 0.3, 0.4])
    e = bin_edges(0.15, 0.4)
    assert e[-1] == 0.4 and e.size == 4
    with pytest.raises(DomainError):
        bin_edges(0.0, 1.0)


def test_bins_are_closed_on_the_right():
    edges = np.array([0.0, 0.1, 0.2])
    np.testing.assert_array_equal(bin_counts([0.1, 0.1000001, 0.2, 0.25], edges), [1, 2])


def test_bin_signal_statistics():
    sig = bin_signal([rec([0.05, 0.15]), rec([0.05, 0.05, 0.15])], 0.1, 0.2)
    np.testing.assert_allclose(sig.mean_counts, [1.5, 1.0])
    np.testing.assert_allclose(sig.std_counts, [np.std([1, 2], ddof=1), 0.0])
    np.testing.assert_allclose(sig.bin_starts, [0, 0.1])
    np.testing.assert_allclose(sig.bin_ends, [0.1, 0.2])
    assert bin_signal([rec([0.05])], 0.1, 0.2).std_counts.tolist() == [0.0, 0.0]


def test_itr_definition():
    r = rec([0.05, 0.1, 0.2, 0.3])
    assert received_until(r, 0.1) == 2
    assert itr(r, 0.1, 2.0) == pytest.approx(0.5)
    assert itr(r, 2.0, 2.0) == 0.0
    assert itr(r, 0.0, 0.25) == 1.0


def test_itr_errors():
    with pytest.raises(UndefinedMetricError):
        itr(rec([]), 0.1, 2.0)
    with pytest.raises(UndefinedMetricError):
        itr(rec([3.0]), 0.1, 2.0)
    with pytest.raises(DomainError):
        itr(rec([0.1]), 3.0, 2.0)


@given(st.lists(st.floats(1e-4, 2.0), min_size=1, max_size=50), st.floats(0, 2.0))
def test_itr_is_a_fraction(times, t_s):
    v = itr(rec(times), t_s, 2.0)
    assert 0.0 <= v <= 1.0


@given(st.lists(st.floats(1e-4, 2.0), min_size=1, max_size=50), st.floats(0, 1.0), st.floats(0, 1.0))
def test_itr_decreases_with_symbol_period(times, a, b):
    lo, hi = sorted((a, b))
    assert itr(rec(times), hi, 2.0) <= itr(rec(times), lo, 2.0)


def test_hemisphere_fractions():
    pos = np.array([[-5, 0, 0], [0, 0, 5], [4, 3, 0], [-3, 4, 0]], float)
    front, back = hemisphere_fractions(pos, axis=(-1, 0, 0))
    assert (front, back) == (0.5, 0.5)
    front, back = hemisphere_fractions(SimpleNamespace(hit_positions=pos[:1]), axis=(-1, 0, 0))
    assert (front, back) == (0.0, 1.0)
    with pytest.raises(UndefinedMetricError):
        hemisphere_fractions(np.empty((0, 3)), axis=(1, 0, 0))


def _res(r_enz, value, std=0.0, reps=1, **kw):
    base = dict(scenario="ST-ARx", d=6.0, t_s=0.1, half_life=0.002)
    base.update(kw)
    return ItrResult(r_enz=r_enz, itr_mean=value, itr_std=std, replications=reps, **base)


def test_aggregate_uses_sample_std():
    agg = aggregate([_res(2, 0.1), _res(2, 0.2), _res(2, 0.3)])
    assert agg.itr_mean == pytest.approx(0.2)
    assert agg.itr_std == pytest.approx(0.1)
    assert agg.replications == 3
    assert agg.std_error == pytest.approx(0.1 / np.sqrt(3))
    assert aggregate([_res(2, 0.4)]).itr_std == 0.0
    with pytest.raises(DomainError):
        aggregate([_res(2, 0.1), _res(4, 0.1)])
    with pytest.raises(DomainError):
        aggregate([])


def test_pooled_standard_error():
    a, b = _res(2, 0.1, std=0.3, reps=9), _res(2, 0.2, std=0.4, reps=4)
    assert pooled_standard_error(a, b) == pytest.approx(np.hypot(0.1, 0.2))


def test_find_optimal_renz():
    sweep = [_res(r, v) for r, v in [(2, 0.5), (4, 0.3), (6, 0.2), (8, 0.2), (10, 0.4)]]
    best = find_optimal_renz(sweep[::-1])
    assert best.r_enz_star == 6 and best.itr_min == 0.2 and best.interior
    edge = find_optimal_renz([_res(2, 0.1), _res(4, 0.3)])
    assert edge.r_enz_star == 2 and not edge.interior
    with pytest.raises(DomainError):
        find_optimal_renz([])


def test_fit_renz_star_vs_distance():
    slope, intercept = fit_renz_star_vs_distance([(4, 6), (6, 7), (8, 8), (10, 9)])
    assert slope == pytest.approx(0.5) and intercept == pytest.approx(4.0)
    with pytest.raises(FitError):
        fit_renz_star_vs_distance([(6, 6), (6, 8)])


def test_replicate_itrs():
    meta = dict(scenario="none-ST", d=4.0, r_enz=2.0, half_life=0.002)
    out = replicate_itrs([rec([0.05, 0.2]), rec([0.05])], 0.1, 2.0, meta)
    assert [r.itr_mean for r in out] == [0.5, 0.0]
    assert aggregate(out).itr_mean == 0.25
