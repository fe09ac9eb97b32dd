"""Klein-Nishina suppression of the total Compton cross section.

``zeta(gamma)`` is the ratio sigma_KN / sigma_Thomson at photon energy
``gamma = hbar*omega / (m_e c^2)``.  The closed form cancels
catastrophically as gamma -> 0, so below ``GAMMA_SWITCH`` a Maclaurin
series (exact rational coefficients, see ``tools/derive_zeta_series.py``)
is used instead.
"""
import math

import numpy as np

from . import kernels
from ._zeta_series import COEFFS, GAMMA_SWITCH

__all__ = [
    "GAMMA_SWITCH",
    "SERIES_COEFFS",
    "zeta",
    "zeta_closed_form",
    "zeta_derivative",
    "zeta_series",
    "zeta_values",
]

SERIES_COEFFS = COEFFS


def _check(gamma, allow_zero=True):
    gamma = float(gamma)
    if not math.isfinite(gamma):
        raise ValueError(f"gamma must be finite, got {gamma!r}")
    if gamma < 0.0 or (gamma == 0.0 and not allow_zero):
        bound = ">= 0" if allow_zero else "> 0"
        raise ValueError(f"gamma must be {bound}, got {gamma!r}")
    return gamma


def zeta_closed_form(gamma):
    """Klein-Nishina factor from the closed-form expression.

    Loses roughly ``gamma**-2`` ulps to cancellation at small gamma; use
    :func:`zeta` unless the literal expression is what you want.
    """
    return kernels.backend.zeta_closed(_check(gamma, allow_zero=False))


def zeta_series(gamma):
    """Truncated Maclaurin series, valid for ``0 <= gamma <= GAMMA_SWITCH``."""
    gamma = _check(gamma)
    if gamma > GAMMA_SWITCH:
        raise ValueError(f"series branch only covers gamma <= {GAMMA_SWITCH}, got {gamma!r}")
    return kernels.backend.zeta_series(gamma)


def zeta(gamma):
    """Klein-Nishina factor, 1 at gamma = 0 and decreasing to 0."""
    return kernels.backend.zeta(_check(gamma))


def zeta_derivative(gamma):
    """d zeta / d gamma (analytic; series derivative below the switch)."""
    return kernels.backend.zeta_deriv(_check(gamma, allow_zero=False))


def zeta_values(gammas):
    """Vectorised :func:`zeta` over an array of photon energy ratios."""
    g = np.asarray(gammas, dtype=float)
    if not np.all(np.isfinite(g)) or np.any(g < 0.0):
        raise ValueError("gamma values must be finite and >= 0")
    return kernels.backend.zeta_array(g)
