"""Self-consistent bound states of an electron orbiting a proton.

The orbit condition ``alpha / r = p v`` is combined with the recoil-corrected
quantization ``p r = beta``, where ``beta = zeta(gamma)`` is the
Klein-Nishina factor at the energy of the mediating photon,
``gamma = p v / beta``.  Eliminating r gives ``v = alpha / beta`` and the
scalar condition

    F(beta) = beta - zeta(alpha**2 / (beta**3 * sqrt(1 - (alpha/beta)**2))) = 0

on ``alpha < beta <= 1``.  With CODATA constants F has two roots: the Bohr
state at beta ~ 1 and a relativistic state at beta ~ 0.0078.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from . import kernels
from .kinematics import ParticleState, PhotonState, photon_from_energy_and_momentum
from .units import DEFAULT_UNITS, UnitSystem

log = logging.getLogger(__name__)

MAX_ITERATIONS = 200
DEFAULT_TOLERANCE = 1e-12
DEFAULT_BRACKET_WIDTH = 1e-12
DEFAULT_SAMPLES = 512
DOMAIN_MARGIN = 1e-9

NONRELATIVISTIC = "nonrelativistic"
RELATIVISTIC = "relativistic"


class ConvergenceError(RuntimeError):
    """A root refinement or fixed-point solve did not converge."""


@dataclass(frozen=True)
class RecoilFactor:
    beta: float
    gamma_at_solution: float


@dataclass(frozen=True)
class BoundStateSolution:
    recoil: RecoilFactor
    particle: ParticleState
    radius: float
    photon: PhotonState
    branch_label: str
    residual: float
    iterations: int

    @property
    def beta(self) -> float:
        return self.recoil.beta

    @property
    def speed(self) -> float:
        return self.particle.speed

    @property
    def momentum(self) -> float:
        return self.particle.momentum

    @property
    def orbital_frequency(self) -> float:
        """omega_orb = v / r, equal to the photon and electron wave frequencies."""
        return self.particle.speed / self.radius


@dataclass(frozen=True)
class CurveSample:
    abscissa: float
    values: Dict[str, float] = field(default_factory=dict)
    converged: bool = True


def _check_beta(beta, units):
    if not units.alpha < beta <= 1.0:
        raise ValueError(f"beta must lie in (alpha, 1] = ({units.alpha!r}, 1], got {beta!r}")


def consistency_residual(beta: float, units: UnitSystem = DEFAULT_UNITS) -> float:
    """F(beta); positive near beta = 1, negative between the two roots."""
    _check_beta(beta, units)
    return kernels.backend.residual(float(beta), units.alpha)


def photon_energy_ratio(beta: float, units: UnitSystem = DEFAULT_UNITS) -> float:
    """gamma = p v / beta evaluated on the orbit v = alpha / beta."""
    _check_beta(beta, units)
    return kernels.backend.photon_energy_ratio(float(beta), units.alpha)


def beta_grid(units: UnitSystem, points: int) -> np.ndarray:
    """Log-spaced beta grid over (alpha (1 + margin), 1]."""
    return np.geomspace(units.alpha * (1.0 + DOMAIN_MARGIN), 1.0, points)


def solution_from_beta(
    beta: float,
    units: UnitSystem = DEFAULT_UNITS,
    *,
    residual: Optional[float] = None,
    iterations: int = 0,
    branch_label: Optional[str] = None,
) -> BoundStateSolution:
    """Assemble the full state for a given recoil factor on the orbit v = alpha / beta."""
    _check_beta(beta, units)
    particle = ParticleState.from_speed(units.alpha / beta)
    p, v = particle.momentum, particle.speed
    radius = beta / p
    gamma = p * v / beta
    if residual is None:
        residual = abs(kernels.backend.residual(beta, units.alpha))
    if branch_label is None:
        branch_label = NONRELATIVISTIC if v < 0.5 else RELATIVISTIC
    return BoundStateSolution(
        recoil=RecoilFactor(beta=beta, gamma_at_solution=gamma),
        particle=particle,
        radius=radius,
        # photon 3-momentum neglected: inertial mass equals energy
        photon=photon_from_energy_and_momentum(gamma, 0.0),
        branch_label=branch_label,
        residual=residual,
        iterations=iterations,
    )


def find_bound_states(
    units: UnitSystem = DEFAULT_UNITS,
    grid_points: int = 1024,
    tolerance: float = DEFAULT_TOLERANCE,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
) -> List[BoundStateSolution]:
    """All roots of F on (alpha, 1], largest beta (Bohr state) first.

    F is sampled on a log grid; every sign change is refined with Brent's
    method until ``|F| <= tolerance`` and the bracket is narrower than
    ``bracket_width``.
    """
    if grid_points < 100:
        raise ValueError(f"grid_points must be >= 100, got {grid_points!r}")
    if not 0.0 < tolerance <= 1e-6:
        raise ValueError(f"tolerance must lie in (0, 1e-6], got {tolerance!r}")
    if not bracket_width > 0.0:
        raise ValueError(f"bracket_width must be > 0, got {bracket_width!r}")

    betas = beta_grid(units, grid_points)
    idx = kernels.backend.sign_change_indices(betas, units.alpha)
    if idx.size == 0:
        log.warning("F(beta) has no sign change on %d grid points; no bound states", grid_points)
        return []

    solutions = []
    for i in idx[::-1]:
        lo, hi = float(betas[i]), float(betas[i + 1])
        root, froot, iters, ok = kernels.backend.brent_residual(
            units.alpha, lo, hi, tolerance, bracket_width, MAX_ITERATIONS
        )
        if not ok:
            raise ConvergenceError(
                f"root refinement did not converge in bracket [{lo!r}, {hi!r}] "
                f"after {iters} iterations (|F| = {abs(froot):.3e})"
            )
        solutions.append(solution_from_beta(root, units, residual=abs(froot), iterations=iters))
    return solutions


def speed_from_orbit_equation(radius: float, units: UnitSystem = DEFAULT_UNITS) -> float:
    """Speed on a circular orbit of given radius, v^2 / sqrt(1 - v^2) = alpha / r.

    The left side increases monotonically from 0 to infinity on [0, 1), so
    plain bisection always brackets the unique root.
    """
    if not radius > 0.0:
        raise ValueError(f"radius must be > 0, got {radius!r}")
    target = units.alpha / radius
    if math.isinf(radius):
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if mid * mid / math.sqrt((1.0 - mid) * (1.0 + mid)) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi or hi - lo <= 5e-324:
            break
    return 0.5 * (lo + hi)


def beta_of_radius(
    radius: float,
    units: UnitSystem = DEFAULT_UNITS,
    tolerance: float = DEFAULT_TOLERANCE,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
) -> RecoilFactor:
    """Recoil factor at orbital radius r: solves beta = zeta((alpha / r) / beta)."""
    if not radius > 0.0:
        raise ValueError(f"radius must be > 0, got {radius!r}")
    energy = units.alpha / radius
    return _recoil_factor(energy, tolerance, bracket_width, f"radius {radius!r}")


def _recoil_factor(energy, tolerance, bracket_width, where):
    beta, iters, ok = kernels.backend.recoil_beta(energy, tolerance, bracket_width, MAX_ITERATIONS)
    if not ok:
        raise ConvergenceError(
            f"recoil fixed point beta = zeta({energy!r}/beta) failed at {where} "
            f"(last beta {beta!r}, {iters} iterations, decade-bracketed in (0, 1])"
        )
    return RecoilFactor(beta=beta, gamma_at_solution=energy / beta if beta > 0 else math.inf)


def _log_grid(lo, hi, samples, name):
    if not (math.isfinite(lo) and math.isfinite(hi)) or not 0.0 < lo < hi:
        raise ValueError(f"{name} grid needs 0 < min < max, got [{lo!r}, {hi!r}]")
    if samples < 2:
        raise ValueError(f"{name} grid needs at least 2 samples, got {samples!r}")
    return np.geomspace(lo, hi, samples)


def figure1_curve(
    r_min: float = 1e-3,
    r_max: float = 1e3,
    samples: int = DEFAULT_SAMPLES,
    units: UnitSystem = DEFAULT_UNITS,
    tolerance: float = DEFAULT_TOLERANCE,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
) -> List[CurveSample]:
    """beta(r) on a log grid of radii in r_C units."""
    radii = _log_grid(r_min, r_max, samples, "radius")
    betas, _, conv = kernels.backend.recoil_beta_array(
        units.alpha / radii, tolerance, bracket_width, MAX_ITERATIONS
    )
    out = []
    for r, b, ok in zip(radii.tolist(), betas.tolist(), conv.tolist()):
        if not ok:
            log.warning("beta(r) did not converge at r = %r", r)
        out.append(CurveSample(abscissa=r, values={"beta": b}, converged=bool(ok)))
    return out


def figure2_curves(
    p_min: float = 1e-3,
    p_max: float = 1e2,
    samples: int = DEFAULT_SAMPLES,
    units: UnitSystem = DEFAULT_UNITS,
    tolerance: float = DEFAULT_TOLERANCE,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
) -> List[CurveSample]:
    """Orbit radius and position uncertainties versus electron momentum.

    ``r_orbit``   alpha / (p v), the circular orbit at this momentum
    ``dr_beta1``  1 / p, the uncertainty Delta r with no recoil
    ``dr_recoil`` beta(p) / p with beta = zeta(p v / beta)

    Crossings of ``r_orbit`` with ``dr_recoil`` are the bound states.
    """
    momenta = _log_grid(p_min, p_max, samples, "momentum")
    speeds = momenta / np.hypot(1.0, momenta)
    energies = momenta * speeds
    betas, _, conv = kernels.backend.recoil_beta_array(
        energies, tolerance, bracket_width, MAX_ITERATIONS
    )
    out = []
    for p, pv, b, ok in zip(momenta.tolist(), energies.tolist(), betas.tolist(), conv.tolist()):
        if not ok:
            log.warning("beta(p) did not converge at p = %r", p)
        values = {
            "r_orbit": units.alpha / pv,
            "dr_beta1": 1.0 / p,
            "dr_recoil": b / p,
            "beta": b,
        }
        out.append(CurveSample(abscissa=p, values=values, converged=bool(ok)))
    return out


def curve_crossings(samples: List[CurveSample], first: str, second: str) -> List[float]:
    """Abscissas where two curves cross, by linear interpolation between samples."""
    pts = [s for s in samples if s.converged]
    crossings = []
    for a, b in zip(pts, pts[1:]):
        da = a.values[first] - a.values[second]
        db = b.values[first] - b.values[second]
        if da == 0.0:
            crossings.append(a.abscissa)
        elif da * db < 0.0:
            t = da / (da - db)
            crossings.append(a.abscissa + t * (b.abscissa - a.abscissa))
    return crossings
