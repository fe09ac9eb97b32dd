"""Relativistic electron and virtual-photon relations in electron units."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .units import DEFAULT_UNITS, UnitSystem


@dataclass(frozen=True)
class ParticleState:
    speed: float
    momentum: float
    lorentz_factor: float

    @classmethod
    def from_speed(cls, speed: float) -> "ParticleState":
        gamma = 1.0 / math.sqrt((1.0 - speed) * (1.0 + speed))
        return cls(speed=float(speed), momentum=momentum_from_speed(speed), lorentz_factor=gamma)

    @classmethod
    def from_momentum(cls, momentum: float) -> "ParticleState":
        return cls(
            speed=speed_from_momentum(momentum),
            momentum=float(momentum),
            lorentz_factor=math.sqrt(1.0 + momentum * momentum),
        )


@dataclass(frozen=True)
class PhotonState:
    energy: float
    momentum: float
    inertial_mass: float

    @property
    def screening_length(self) -> float:
        """hbar / (m_ph c) in r_C units; infinite for a massless photon."""
        return math.inf if self.inertial_mass == 0.0 else 1.0 / self.inertial_mass


def momentum_from_speed(speed):
    if not 0.0 <= speed < 1.0:
        raise ValueError(f"speed must lie in [0, 1), got {speed!r}")
    return speed / math.sqrt((1.0 - speed) * (1.0 + speed))


def speed_from_momentum(momentum):
    if not momentum >= 0.0 or math.isnan(momentum):
        raise ValueError(f"momentum must be >= 0, got {momentum!r}")
    if math.isinf(momentum):
        return 1.0
    return momentum / math.hypot(1.0, momentum)


def orbit_radius(state: ParticleState, units: UnitSystem = DEFAULT_UNITS) -> float:
    """Radius of the circular orbit with alpha / r = p v."""
    if not state.speed > 0.0:
        raise ValueError("orbit radius undefined at zero speed")
    return units.alpha / (state.momentum * state.speed)


def photon_from_energy_and_momentum(energy, momentum) -> PhotonState:
    """Virtual photon on its own mass shell, m^2 = E^2 - P^2.

    Only timelike or lightlike photons (``energy >= momentum``) are accepted.
    """
    energy, momentum = float(energy), float(momentum)
    if not (math.isfinite(energy) and math.isfinite(momentum)):
        raise ValueError("photon energy and momentum must be finite")
    if momentum < 0.0:
        raise ValueError(f"photon momentum must be >= 0, got {momentum!r}")
    if energy < momentum:
        raise ValueError(
            f"spacelike photon (energy {energy!r} < momentum {momentum!r}) has no real inertial mass"
        )
    mass = math.sqrt((energy - momentum) * (energy + momentum))
    return PhotonState(energy=energy, momentum=momentum, inertial_mass=mass)


def yukawa_potential(separation, photon_mass, units: UnitSystem = DEFAULT_UNITS):
    """Interaction energy alpha * exp(-m r) / r of two unit charges.

    The exponent uses the photon's inverse Compton length, which in r_C
    units is just its mass in m_e.  ``photon_mass = 0`` is pure Coulomb.
    """
    if not separation > 0.0:
        raise ValueError(f"separation must be > 0, got {separation!r}")
    if not photon_mass >= 0.0:
        raise ValueError(f"photon mass must be >= 0, got {photon_mass!r}")
    coulomb = units.alpha / separation
    if photon_mass == 0.0:
        return coulomb
    return coulomb * math.exp(-photon_mass * separation)


def photon_action_quantum(frequency):
    """Action hbar*omega*T carried by a photon of period T = 2 pi / omega, in units of h."""
    if not frequency > 0.0 or math.isinf(frequency):
        raise ValueError(f"frequency must be positive and finite, got {frequency!r}")
    period = 2.0 * math.pi / frequency
    # hbar * omega * T / h with hbar = h / (2 pi)
    return frequency * period / (2.0 * math.pi)
