import math

import pytest
from hypothesis import given, strategies as st

from mcvd_enzymes import geometry as geo
from mcvd_enzymes.errors import DomainError
from mcvd_enzymes.kinetics import (
    LN2,
    KineticsSpec,
    concentration_decay,
    degradation_factor,
    effective_half_life,
    survival_probability,
)

half_lives = st.floats(1e-5, 10)


def test_degradation_factor_examples():
    assert degradation_factor(LN2) == pytest.approx(1.0)
    assert degradation_factor(0.002) == pytest.approx(346.574, abs=1e-3)
    assert degradation_factor(2 * 0.003) == pytest.approx(degradation_factor(0.003) / 2)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_degradation_factor_rejects_non_positive(bad):
    with pytest.raises(DomainError):
        degradation_factor(bad)


def test_concentration_decay():
    assert concentration_decay(3.0, 5.0, 0.0) == 3.0
    assert concentration_decay(3.0, LN2 / 0.004, 0.004) == pytest.approx(1.5)
    assert concentration_decay(0.0, 123.0, 7.0) == 0.0
    with pytest.raises(DomainError):
        concentration_decay(1.0, -1.0, 1.0)


def test_effective_half_life():
    assert effective_half_life(0.002, 381.0, 381.0) == 0.002
    assert effective_half_life(0.002, 762.0, 381.0) == pytest.approx(0.004)
    v2 = geo.total_enzyme_volume(geo.channel_geometry("ST-ARx", 5, 4, 2))
    v1 = geo.total_enzyme_volume(geo.channel_geometry("ST-ARx", 5, 4, 1))
    assert effective_half_life(0.002, v2, v1) == pytest.approx(0.002 * 218 / 91)
    assert effective_half_life(0.002, v2, v1) == pytest.approx(0.004791, abs=1e-6)
    with pytest.raises(DomainError):
        effective_half_life(0.002, 0.0, 1.0)


def test_survival_probability():
    assert survival_probability(0.01, 0.01) == pytest.approx(0.5)
    assert survival_probability(1e-5, math.inf) == 1.0
    assert survival_probability(1e-5, 0.002) == pytest.approx(2**-0.005)
    assert survival_probability(1e-5, 0.002) == pytest.approx(0.996541, abs=1e-6)


@given(st.floats(1e-7, 1e-2), half_lives, st.integers(1, 10_000))
def test_survival_composes(dt, hl, n):
    assert survival_probability(dt, hl) ** n == pytest.approx(survival_probability(n * dt, hl), rel=1e-9)


@given(half_lives, st.floats(1, 1e6), st.floats(1, 1e6))
def test_factor_times_half_life_is_ln2(unit, vol, ref):
    hl = effective_half_life(unit, vol, ref)
    assert degradation_factor(hl) * hl == pytest.approx(LN2, rel=1e-15)


@given(half_lives, st.floats(1, 1e5), st.floats(1, 1e5))
def test_enzyme_amount_is_constant(unit, v1, v2):
    # concentration ~ 1/half-life, so half-life / volume is the same for every region
    ref = 381.18
    assert effective_half_life(unit, v1, ref) / v1 == pytest.approx(effective_half_life(unit, v2, ref) / v2)


def test_kinetics_spec():
    k = KineticsSpec.from_volumes(0.002, 913.16, 381.18)
    assert k.degradation_factor * k.effective_half_life == pytest.approx(LN2)
    assert k.survival_probability(k.effective_half_life) == pytest.approx(0.5)
    assert KineticsSpec.from_half_life(0.002).degradation_factor == pytest.approx(346.574, abs=1e-3)
    with pytest.raises(DomainError):
        KineticsSpec(0.002, 1.0, -1.0, 1.0)
