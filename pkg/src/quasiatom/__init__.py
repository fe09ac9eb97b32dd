"""Electron-proton bound states with recoil-corrected uncertainty relations."""

__version__ = "0.1.0"

from .kernels import BACKEND
from .kinematics import (
    ParticleState,
    PhotonState,
    momentum_from_speed,
    orbit_radius,
    photon_action_quantum,
    photon_from_energy_and_momentum,
    speed_from_momentum,
    yukawa_potential,
)
from .kleinnishina import zeta, zeta_closed_form, zeta_derivative, zeta_series
from .report import (
    DerivedReport,
    ReferenceSet,
    compare_with_reference,
    derive_parameters,
    load_references,
    uncertainty_bundle,
)
from .solver import (
    BoundStateSolution,
    ConvergenceError,
    CurveSample,
    RecoilFactor,
    beta_of_radius,
    consistency_residual,
    figure1_curve,
    figure2_curves,
    find_bound_states,
    speed_from_orbit_equation,
)
from .units import UnitSystem, make_unit_system
