"""Derived parameters of a bound state and comparison with reference data."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Union

from .solver import BoundStateSolution
from .units import DEFAULT_UNITS, UnitSystem

SOURCES = ("paper-table1", "codata", "experiment")
REQUIRED_QUANTITIES = ("radius_cm", "total_mass_excess", "combined_moment_rel")
DEFAULT_PROTON_MOMENT = 2.81
DEFAULT_WARN_THRESHOLD = 0.10


@dataclass(frozen=True)
class DerivedReport:
    """Bound-state parameters.  Energies in m_e c^2, masses in m_e, moments in mu_N."""

    branch_label: str
    beta: float
    speed: float
    momentum: float
    lorentz_factor: float
    radius: float
    radius_cm: float
    binding_energy: float
    binding_energy_ev: float
    orbital_angular_momentum: float
    magnetic_moment_rest_mass: float
    magnetic_moment_relativistic_mass: float
    proton_moment: float
    combined_moment_rest: float
    combined_moment_rel: float
    relativistic_mass: float
    total_mass_excess: float
    photon_energy: float
    photon_energy_ev: float
    photon_mass: float
    photon_range_cm: float
    decay_energy: float
    decay_energy_ev: float

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Reference:
    value: float
    source: str
    quantity: str


class ReferenceSet(Mapping[str, Reference]):
    """Named reference values, each tied to a DerivedReport field."""

    def __init__(self, entries: Mapping[str, Reference]):
        self._entries = dict(entries)
        for name, ref in self._entries.items():
            if not math.isfinite(ref.value):
                raise ValueError(f"reference {name!r} has non-finite value {ref.value!r}")
            if not ref.source:
                raise ValueError(f"reference {name!r} has an empty source tag")
            if ref.source not in SOURCES:
                raise ValueError(f"reference {name!r}: source {ref.source!r} not one of {SOURCES}")

    def __getitem__(self, name):
        return self._entries[name]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    @classmethod
    def from_mapping(cls, data: Mapping) -> "ReferenceSet":
        entries = {}
        for name, item in data.items():
            if not isinstance(item, Mapping) or "value" not in item or "source" not in item:
                raise ValueError(f"reference {name!r} must be an object with 'value' and 'source'")
            extra = set(item) - {"value", "source", "quantity"}
            if extra:
                raise ValueError(f"reference {name!r} has unknown key(s): {', '.join(sorted(extra))}")
            entries[name] = Reference(
                value=float(item["value"]),
                source=str(item["source"]),
                quantity=str(item.get("quantity", name)),
            )
        return cls(entries)

    def for_quantity(self, quantity: str) -> Dict[str, Reference]:
        return {n: r for n, r in self._entries.items() if r.quantity == quantity}


def load_references(path: Union[str, Path, None] = None) -> ReferenceSet:
    """Read a reference file; the bundled one when ``path`` is None."""
    if path is None:
        text = resources.files("quasiatom").joinpath("data/references.json").read_text()
    else:
        text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed reference file {path or '<bundled>'}: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("reference file must contain a JSON object")
    return ReferenceSet.from_mapping(data)


def _proton_moment(refs: Optional[ReferenceSet]) -> float:
    if refs is not None and "proton_moment" in refs:
        return refs["proton_moment"].value
    return DEFAULT_PROTON_MOMENT


def derive_parameters(
    solution: BoundStateSolution,
    units: UnitSystem = DEFAULT_UNITS,
    refs: Optional[ReferenceSet] = None,
) -> DerivedReport:
    """Evaluate the table of derived bound-state parameters.

    The orbital magnetic moment ``L e / (2 m_e c)`` is given twice: with the
    electron rest mass in the denominator, and with its relativistic mass
    (the rest-mass value divided by the Lorentz factor).
    """
    v = solution.particle.speed
    p = solution.particle.momentum
    lorentz = solution.particle.lorentz_factor
    r = solution.radius

    # m v^2 / (2 sqrt(1 - v^2)), identical to p v / 2
    binding = v * v / (2.0 * math.sqrt((1.0 - v) * (1.0 + v)))
    angular_momentum = p * r
    moment_rest = -angular_momentum * units.bohr_magneton_in_nuclear_magnetons
    moment_rel = moment_rest / lorentz
    proton = _proton_moment(refs)
    photon_mass = solution.photon.inertial_mass

    return DerivedReport(
        branch_label=solution.branch_label,
        beta=solution.recoil.beta,
        speed=v,
        momentum=p,
        lorentz_factor=lorentz,
        radius=r,
        radius_cm=units.length_to_cm(r),
        binding_energy=binding,
        binding_energy_ev=units.energy_to_ev(binding),
        orbital_angular_momentum=angular_momentum,
        magnetic_moment_rest_mass=moment_rest,
        magnetic_moment_relativistic_mass=moment_rel,
        proton_moment=proton,
        combined_moment_rest=proton + moment_rest,
        combined_moment_rel=proton + moment_rel,
        relativistic_mass=lorentz,
        total_mass_excess=lorentz,
        photon_energy=solution.photon.energy,
        photon_energy_ev=units.energy_to_ev(solution.photon.energy),
        photon_mass=photon_mass,
        photon_range_cm=units.length_to_cm(1.0 / photon_mass) if photon_mass > 0 else math.inf,
        decay_energy=lorentz - 1.0,
        decay_energy_ev=units.energy_to_ev(lorentz - 1.0),
    )


def uncertainty_bundle(solution: BoundStateSolution, frequency_scale: float = 1.0) -> Dict[str, Dict[str, float]]:
    """Uncertainty products of the bound state, each with its expected value.

    Delta p = p, Delta r = r, Delta eps = hbar omega_ph and Delta t = 1/omega_ph.
    ``frequency_scale`` multiplies omega_ph (and divides Delta t) to show the
    products that do not depend on the photon frequency.
    """
    if not frequency_scale > 0.0:
        raise ValueError(f"frequency_scale must be > 0, got {frequency_scale!r}")
    beta = solution.recoil.beta
    p, v, r = solution.particle.momentum, solution.particle.speed, solution.radius
    d_eps = solution.photon.energy * frequency_scale
    d_t = 1.0 / d_eps
    return {
        "dp_dr": {"value": p * r, "expected": beta},
        "de_dt": {"value": d_eps * d_t, "expected": 1.0},
        "dp_dt_v": {"value": p * (1.0 / solution.photon.energy) * v, "expected": beta},
        "de_dr_over_v": {"value": solution.photon.energy * r / v, "expected": 1.0},
    }


@dataclass(frozen=True)
class Deviation:
    name: str
    quantity: str
    computed: float
    reference: float
    source: str
    relative_deviation: float
    flagged: bool


@dataclass
class DeviationTable:
    rows: List[Deviation] = field(default_factory=list)
    published_vs_reference: List[Deviation] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)
    warn_threshold: float = DEFAULT_WARN_THRESHOLD

    def row(self, name: str) -> Deviation:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "warn_threshold": self.warn_threshold,
            "rows": [asdict(r) for r in self.rows],
            "published_vs_reference": [asdict(r) for r in self.published_vs_reference],
            "missing": list(self.missing),
        }


def _deviation(name, quantity, computed, ref, threshold):
    if ref.value == 0.0:
        rel = math.inf if computed != 0.0 else 0.0
    else:
        rel = (computed - ref.value) / abs(ref.value)
    return Deviation(name, quantity, computed, ref.value, ref.source, rel, abs(rel) > threshold)


def compare_with_reference(
    report: DerivedReport,
    refs: ReferenceSet,
    warn_threshold: float = DEFAULT_WARN_THRESHOLD,
) -> DeviationTable:
    """Signed relative deviation of each computed quantity from its references.

    Reference entries naming an unknown quantity are skipped and listed in
    ``missing`` together with any required quantity lacking a reference.
    """
    fields_ = report.as_dict()
    table = DeviationTable(warn_threshold=warn_threshold)
    for name, ref in refs.items():
        value = fields_.get(ref.quantity)
        if not isinstance(value, float):
            table.missing.append(name)
            continue
        table.rows.append(_deviation(name, ref.quantity, value, ref, warn_threshold))
    for quantity in REQUIRED_QUANTITIES:
        if not refs.for_quantity(quantity):
            table.missing.append(quantity)

    # published table values against the measured ones, for context
    for quantity in sorted({r.quantity for r in refs.values()}):
        group = refs.for_quantity(quantity)
        published = [(n, r) for n, r in group.items() if r.source == "paper-table1"]
        measured = [(n, r) for n, r in group.items() if r.source != "paper-table1"]
        for pname, pref in published:
            for mname, mref in measured:
                table.published_vs_reference.append(
                    _deviation(f"{pname} vs {mname}", quantity, pref.value, mref, warn_threshold)
                )
    return table
