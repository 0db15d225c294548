import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimorb.quantities import (
    ALPHA_E_DEFAULT,
    AuxIndex,
    MassValue,
    ModelConstants,
    OrbitalIndex,
    Unit,
    convert,
    gev,
    mev,
    relative_error,
)

UNITS = list(Unit)


def test_adjacent_units_differ_by_thousand():
    one = mev(1.0)
    assert one.to(Unit.KEV).magnitude == pytest.approx(1e3, rel=1e-12)
    assert one.to(Unit.EV).magnitude == pytest.approx(1e6, rel=1e-12)
    assert one.to(Unit.GEV).magnitude == pytest.approx(1e-3, rel=1e-12)


def test_conversion_examples():
    assert convert(mev(0.511), Unit.GEV).magnitude == pytest.approx(0.000511, rel=1e-12)
    assert convert(gev(91.177), Unit.MEV).magnitude == pytest.approx(91177.0, rel=1e-12)
    assert convert(gev(1.2e19), Unit.MEV).magnitude == pytest.approx(1.2e22, rel=1e-12)


def test_conversion_to_same_unit_is_identity():
    m = gev(91.177)
    assert m.to(Unit.GEV) is m


@given(
    magnitude=st.floats(min_value=1e-30, max_value=1e30),
    path=st.lists(st.sampled_from(UNITS), min_size=1, max_size=4),
)
@settings(max_examples=200)
def test_conversion_chains_invert(magnitude, path):
    start = mev(magnitude)
    value = start
    for unit in path:
        value = value.to(unit)
    back = value.to(Unit.MEV)
    assert back.magnitude == pytest.approx(start.magnitude, rel=1e-12)


@given(
    a=st.floats(min_value=1e-20, max_value=1e20),
    b=st.floats(min_value=1e-20, max_value=1e20),
    unit_a=st.sampled_from(UNITS),
    unit_b=st.sampled_from(UNITS),
)
@settings(max_examples=200)
def test_relative_error_ignores_unit_choice(a, b, unit_a, unit_b):
    base = relative_error(mev(a), mev(b))
    shuffled = relative_error(mev(a).to(unit_a), mev(b).to(unit_b))
    assert shuffled == pytest.approx(base, rel=1e-12)


def test_relative_error_values():
    assert relative_error(mev(0.511), mev(0.511)) == 0.0
    assert relative_error(1.1e19, 1.2e19) == pytest.approx(1.0 / 12.0, rel=1e-9)
    assert relative_error(gev(176.5), gev(176.0)) == pytest.approx(0.5 / 176.0, rel=1e-12)


def test_relative_error_rejects_zero_reference():
    with pytest.raises(ValueError, match="undefined relative error"):
        relative_error(mev(1.0), mev(0.0))
    with pytest.raises(ValueError, match="undefined relative error"):
        relative_error(0.5, 0.0)


def test_relative_error_rejects_mixed_types():
    with pytest.raises(TypeError):
        relative_error(mev(1.0), 1.0)


@pytest.mark.parametrize("magnitude", [-1.0, float("nan"), float("inf"), float("-inf")])
def test_mass_value_rejects_bad_magnitudes(magnitude):
    with pytest.raises(ValueError):
        MassValue(magnitude, Unit.MEV)


def test_mass_value_rejects_bad_unit():
    with pytest.raises(ValueError, match="unknown mass unit"):
        MassValue(1.0, "MeV")


def test_mass_value_str():
    assert str(mev(0.510999)) == "0.510999 MeV"
    assert str(gev(1.2e19)) == "1.2e+19 GeV"


def test_default_constants():
    c = ModelConstants()
    assert c.alpha_e == ALPHA_E_DEFAULT
    assert c.m_electron == mev(0.510999)
    assert c.m_z == gev(91.177)
    assert c.theta_w_deg == 29.69
    assert c.planck_ref == gev(1.2e19)
    assert c.n_orbitals == 7


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha_e": 0.0},
        {"alpha_e": 1.0},
        {"alpha_e": -0.5},
        {"alpha_e": 2.0},
        {"alpha_e": float("nan")},
        {"theta_w_deg": 0.0},
        {"theta_w_deg": 90.0},
        {"theta_w_deg": -10.0},
        {"theta_w_deg": 120.0},
        {"theta_w_deg": float("nan")},
        {"m_electron": mev(0.0)},
        {"m_electron": 0.510999},
        {"m_z": gev(0.0)},
        {"planck_ref": 1.2e19},
        {"n_orbitals": 6},
        {"n_orbitals": 8},
    ],
)
def test_constants_reject_out_of_range_fields(kwargs):
    with pytest.raises(ValueError):
        ModelConstants(**kwargs)


@given(
    alpha=st.floats(allow_nan=True, allow_infinity=True).filter(
        lambda x: not (0.0 < x < 1.0)
    )
)
@settings(max_examples=100)
def test_constants_reject_every_bad_alpha(alpha):
    with pytest.raises(ValueError):
        ModelConstants(alpha_e=alpha)


@given(
    theta=st.floats(allow_nan=True, allow_infinity=True).filter(
        lambda x: not (0.0 < x < 90.0)
    )
)
@settings(max_examples=100)
def test_constants_reject_every_bad_theta(theta):
    with pytest.raises(ValueError):
        ModelConstants(theta_w_deg=theta)


def test_orbital_index_bounds():
    for d in range(5, 12):
        assert int(OrbitalIndex(d)) == d
    for bad in (4, 12, 0, -5):
        with pytest.raises(ValueError):
            OrbitalIndex(bad)
    with pytest.raises(ValueError):
        OrbitalIndex(7.0)
    with pytest.raises(ValueError):
        OrbitalIndex(True)


def test_aux_index_bounds():
    for a in range(0, 6):
        assert int(AuxIndex(a)) == a
    for bad in (-1, 6, 100):
        with pytest.raises(ValueError):
            AuxIndex(bad)
