import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasiatom.kinematics import (
    ParticleState,
    momentum_from_speed,
    orbit_radius,
    photon_action_quantum,
    photon_from_energy_and_momentum,
    speed_from_momentum,
    yukawa_potential,
)
from quasiatom.units import make_unit_system

ALPHA = make_unit_system().alpha


def test_momentum_from_speed():
    assert momentum_from_speed(0.0) == 0.0
    # direct formula 0.9407 / sqrt(1 - 0.9407^2) = 2.772966...
    assert momentum_from_speed(0.9407) == pytest.approx(2.772, rel=0.005)
    assert momentum_from_speed(0.0073) == pytest.approx(0.0073, rel=1e-4)
    for bad in (1.0, -0.1, 1.5):
        with pytest.raises(ValueError):
            momentum_from_speed(bad)


def test_speed_from_momentum():
    assert speed_from_momentum(0.0) == 0.0
    assert speed_from_momentum(2.772) == pytest.approx(0.9407, rel=0.005)
    assert speed_from_momentum(math.inf) == 1.0
    with pytest.raises(ValueError):
        speed_from_momentum(-1e-9)


@given(st.floats(min_value=0.0, max_value=1 - 1e-9))
def test_speed_momentum_round_trip(v):
    assert speed_from_momentum(momentum_from_speed(v)) == pytest.approx(v, rel=1e-12, abs=1e-300)


@given(st.floats(min_value=0.0, max_value=1e6), st.floats(min_value=0.0, max_value=1e6))
def test_speed_increasing_and_subluminal(p1, p2):
    lo, hi = sorted((p1, p2))
    assert speed_from_momentum(lo) <= speed_from_momentum(hi) < 1.0 or hi > 1e7


def test_particle_state_invariants():
    s = ParticleState.from_speed(0.6)
    assert s.lorentz_factor == pytest.approx(1.25, rel=1e-15)
    assert s.momentum == pytest.approx(s.speed * s.lorentz_factor, rel=1e-15)
    t = ParticleState.from_momentum(0.75)
    assert t.speed == pytest.approx(0.6, rel=1e-15)
    assert t.lorentz_factor == pytest.approx(1.25, rel=1e-15)


def test_orbit_radius_examples():
    bohr = ParticleState(speed=ALPHA, momentum=ALPHA, lorentz_factor=1.0)
    assert orbit_radius(bohr) == pytest.approx(1 / ALPHA, rel=1e-15)
    assert make_unit_system().length_to_cm(orbit_radius(bohr)) == pytest.approx(5.3e-9, rel=0.01)

    rel = ParticleState(speed=0.9407, momentum=2.772, lorentz_factor=2.947)
    r = orbit_radius(rel)
    assert r == pytest.approx(0.00280, rel=0.01)
    assert make_unit_system().length_to_cm(r) == pytest.approx(1.06e-13, rel=0.02)

    unit = ParticleState(speed=math.sqrt(ALPHA), momentum=math.sqrt(ALPHA), lorentz_factor=1.0)
    assert orbit_radius(unit) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        orbit_radius(ParticleState(0.0, 0.0, 1.0))


@given(st.floats(min_value=1e-6, max_value=1 - 1e-9))
def test_orbit_identity(v):
    s = ParticleState.from_speed(v)
    assert orbit_radius(s) * s.momentum * s.speed == pytest.approx(ALPHA, rel=1e-12)


def test_photon_examples():
    ph = photon_from_energy_and_momentum(340.0, 0.0)
    assert ph.inertial_mass == 340.0
    assert photon_from_energy_and_momentum(1.0, 1.0).inertial_mass == 0.0
    assert photon_from_energy_and_momentum(5.0, 3.0).inertial_mass == 4.0
    with pytest.raises(ValueError, match="spacelike"):
        photon_from_energy_and_momentum(3.0, 5.0)
    with pytest.raises(ValueError):
        photon_from_energy_and_momentum(1.0, -1.0)


@given(st.floats(min_value=0.0, max_value=1e3), st.floats(min_value=0.0, max_value=1.0))
def test_dispersion_closure(energy, fraction):
    ph = photon_from_energy_and_momentum(energy, energy * fraction)
    scale = max(1.0, energy * energy)
    assert abs(ph.energy**2 - ph.momentum**2 - ph.inertial_mass**2) <= 1e-12 * scale


def test_yukawa_examples():
    assert yukawa_potential(0.5, 0.0) == ALPHA / 0.5
    r = 1 / 340
    assert yukawa_potential(r, 340.0) == pytest.approx(ALPHA * 340 * math.exp(-1), rel=1e-14)
    # screening length 1/340 r_C ~ 1.1e-13 cm
    assert make_unit_system().length_to_cm(r) == pytest.approx(1.1e-13, rel=0.05)
    assert yukawa_potential(1e300, 340.0) == 0.0
    assert yukawa_potential(1e300, 0.0) == pytest.approx(0.0, abs=1e-300)
    with pytest.raises(ValueError):
        yukawa_potential(0.0, 1.0)
    with pytest.raises(ValueError):
        yukawa_potential(1.0, -1.0)


@given(st.floats(min_value=1e-8, max_value=1e3), st.floats(min_value=1e-6, max_value=1e3))
def test_yukawa_below_coulomb(r, m):
    assert 0.0 <= yukawa_potential(r, m) < yukawa_potential(r, 0.0)


@given(
    st.floats(min_value=1e-6, max_value=1.0),
    st.floats(min_value=1e-6, max_value=1.0),
    st.floats(min_value=0.0, max_value=10.0),
)
def test_yukawa_decreasing(r1, r2, m):
    lo, hi = sorted((r1, r2))
    assert yukawa_potential(lo, m) >= yukawa_potential(hi, m)
    assert yukawa_potential(lo, m) >= yukawa_potential(lo, m + 1.0)


@pytest.mark.parametrize("omega", [1.0, 1e15, 1e-6, 3.7])
def test_action_quantum(omega):
    assert photon_action_quantum(omega) == pytest.approx(1.0, rel=1e-15)


def test_action_quantum_rejects():
    for bad in (0.0, -1.0, math.inf):
        with pytest.raises(ValueError):
            photon_action_quantum(bad)
