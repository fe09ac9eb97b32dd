"""Dimensionless unit scheme and physical constants.

Every physics module works in natural electron units:

========== =============================
velocity   c
momentum   m_e c
energy     m_e c^2
length     r_C = hbar / (m_e c)
action     hbar
========== =============================

In these units the circular-orbit condition e^2/r = p v reads
``alpha / r = p * v``.  Conversion to CGS/eV happens only when reporting.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Mapping

# CODATA 2018
ALPHA = 7.2973525693e-3
PROTON_ELECTRON_MASS_RATIO = 1836.15267343
ELECTRON_COMPTON_LENGTH_CM = 3.8615926796e-11
ELECTRON_REST_ENERGY_EV = 510998.95


@dataclass(frozen=True)
class UnitSystem:
    alpha: float = ALPHA
    proton_electron_mass_ratio: float = PROTON_ELECTRON_MASS_RATIO
    electron_compton_length_cm: float = ELECTRON_COMPTON_LENGTH_CM
    electron_rest_energy_ev: float = ELECTRON_REST_ENERGY_EV

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise TypeError(f"{f.name} must be a number, got {value!r}")
            if not math.isfinite(value):
                raise ValueError(f"{f.name} must be finite, got {value!r}")
            object.__setattr__(self, f.name, float(value))
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha!r}")
        if not self.proton_electron_mass_ratio > 1.0:
            raise ValueError(
                f"proton_electron_mass_ratio must exceed 1, got {self.proton_electron_mass_ratio!r}"
            )
        if not self.electron_compton_length_cm > 0.0:
            raise ValueError(
                f"electron_compton_length_cm must be positive, got {self.electron_compton_length_cm!r}"
            )
        if not self.electron_rest_energy_ev > 0.0:
            raise ValueError(
                f"electron_rest_energy_ev must be positive, got {self.electron_rest_energy_ev!r}"
            )

    @property
    def classical_electron_radius(self) -> float:
        """r_e = alpha r_C, in r_C units."""
        return self.alpha

    @property
    def bohr_radius(self) -> float:
        """r_B = r_C / alpha, in r_C units."""
        return 1.0 / self.alpha

    @property
    def classical_electron_radius_cm(self) -> float:
        return self.length_to_cm(self.classical_electron_radius)

    @property
    def bohr_radius_cm(self) -> float:
        return self.length_to_cm(self.bohr_radius)

    @property
    def bohr_magneton_in_nuclear_magnetons(self) -> float:
        # mu_N = mu_B * m_e / m_p
        return self.proton_electron_mass_ratio

    def length_to_cm(self, length):
        return _finite(length, "length") * self.electron_compton_length_cm

    def cm_to_length(self, cm):
        return _finite(cm, "length") / self.electron_compton_length_cm

    def energy_to_ev(self, energy):
        return _finite(energy, "energy") * self.electron_rest_energy_ev

    def ev_to_energy(self, ev):
        return _finite(ev, "energy") / self.electron_rest_energy_ev

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


FIELDS = tuple(f.name for f in dataclasses.fields(UnitSystem))


def _finite(x, what):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{what} must be finite, got {x!r}")
    return x


def make_unit_system(overrides: Mapping[str, float] | None = None) -> UnitSystem:
    """CODATA defaults with selected constants replaced.

    Unknown names and values violating the field invariants raise
    ``ValueError`` naming the field.
    """
    overrides = dict(overrides or {})
    unknown = sorted(set(overrides) - set(FIELDS))
    if unknown:
        raise ValueError(f"unknown unit-system field(s): {', '.join(unknown)}")
    return UnitSystem(**overrides)


DEFAULT_UNITS = UnitSystem()


def length_to_cm(length, units: UnitSystem = DEFAULT_UNITS):
    return units.length_to_cm(length)


def energy_to_ev(energy, units: UnitSystem = DEFAULT_UNITS):
    return units.energy_to_ev(energy)
