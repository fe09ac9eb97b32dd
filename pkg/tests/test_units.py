import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasiatom.units import ALPHA, UnitSystem, energy_to_ev, length_to_cm, make_unit_system


def test_defaults():
    u = make_unit_system()
    assert u.alpha == 7.2973525693e-3
    assert u.proton_electron_mass_ratio == 1836.15267343
    assert make_unit_system({}) == u


def test_radii_match_quoted_values():
    u = make_unit_system()
    assert u.classical_electron_radius_cm == pytest.approx(2.8e-13, rel=0.02)
    assert u.bohr_radius_cm == pytest.approx(5.3e-9, rel=0.02)


def test_override_alpha_moves_bohr_radius():
    u = make_unit_system({"alpha": 0.0073})
    assert u.alpha == 0.0073
    assert u.bohr_radius_cm == pytest.approx(0.529e-8, rel=0.01)


@pytest.mark.parametrize(
    "overrides, field",
    [
        ({"alpha": -1}, "alpha"),
        ({"alpha": 1.0}, "alpha"),
        ({"proton_electron_mass_ratio": 0.5}, "proton_electron_mass_ratio"),
        ({"electron_compton_length_cm": 0.0}, "electron_compton_length_cm"),
        ({"electron_rest_energy_ev": -3.0}, "electron_rest_energy_ev"),
        ({"alpha": float("nan")}, "alpha"),
        ({"speed_of_light": 1.0}, "speed_of_light"),
    ],
)
def test_invalid_overrides_name_the_field(overrides, field):
    with pytest.raises(ValueError, match=field):
        make_unit_system(overrides)


def test_immutable():
    u = make_unit_system()
    with pytest.raises(dataclasses.FrozenInstanceError):
        u.alpha = 0.1


def test_conversions():
    u = make_unit_system()
    assert length_to_cm(1.0) == pytest.approx(3.8616e-11, rel=1e-4)
    assert length_to_cm(0.0) == 0.0
    assert energy_to_ev(2.6) == pytest.approx(2.6 * 510998.95, rel=1e-15)
    assert energy_to_ev(2.6) == pytest.approx(1.329e6, rel=1e-3)
    with pytest.raises(ValueError):
        u.length_to_cm(float("inf"))


def test_derived_identities_exact():
    u = UnitSystem(alpha=0.01)
    assert u.classical_electron_radius == 0.01
    assert u.bohr_radius == 1.0 / 0.01
    assert u.bohr_magneton_in_nuclear_magnetons == u.proton_electron_mass_ratio


@given(st.floats(min_value=1e-30, max_value=1e10))
def test_length_round_trip(cm):
    u = make_unit_system()
    assert u.length_to_cm(u.cm_to_length(cm)) == pytest.approx(cm, rel=1e-12)


def test_default_alpha_constant():
    assert ALPHA == UnitSystem().alpha
