"""Pure-Python numerical kernels.

Reference implementation of the hot loops; ``_kernels.pyx`` mirrors it
operation for operation so both backends agree to rounding.
"""
import math

import numpy as np

from ._zeta_series import COEFFS, GAMMA_SWITCH

BACKEND = "python"

_DCOEFFS = tuple(k * c for k, c in enumerate(COEFFS))[1:]
_EPS = 2.220446049250313e-16


def zeta_closed(g):
    # written in q = 1/g so that nothing overflows for large g
    q = 1.0 / g
    lg = math.log1p(2.0 * g)
    s = 1.0 + 2.0 * g
    return 0.75 * (
        (1.0 + q) * q * ((1.0 + q) * (2.0 * g / s) - lg * q)
        + 0.5 * lg * q
        - (1.0 + 3.0 * g) / s / s
    )


def zeta_series(g):
    acc = 0.0
    for c in reversed(COEFFS):
        acc = acc * g + c
    return acc


def zeta(g):
    if g <= GAMMA_SWITCH:
        return zeta_series(g)
    return zeta_closed(g)


def zeta_closed_deriv(g):
    # 3/(8 g^4) [(6 + 4g - g^2) L + 2g (2g^4 - 39g^3 - 63g^2 - 34g - 6)/s^3], scaled by q = 1/g
    q = 1.0 / g
    lg = math.log1p(2.0 * g)
    s = 1.0 + 2.0 * g
    u = g / s
    u3 = u * u * u
    quartic = 2.0 * u3 - q * (39.0 * u3 + (63.0 * u * u + (34.0 * u + 6.0 / s) / s) / s)
    return 0.375 * q * q * ((6.0 * q * q + 4.0 * q - 1.0) * lg + 2.0 * quartic)


def zeta_series_deriv(g):
    acc = 0.0
    for c in reversed(_DCOEFFS):
        acc = acc * g + c
    return acc


def zeta_deriv(g):
    if g <= GAMMA_SWITCH:
        return zeta_series_deriv(g)
    return zeta_closed_deriv(g)


def zeta_array(g):
    g = np.asarray(g, dtype=float)
    out = np.empty_like(g)
    flat_in, flat_out = g.ravel(), out.ravel()
    for i in range(flat_in.size):
        flat_out[i] = zeta(float(flat_in[i]))
    return out


def photon_energy_ratio(beta, alpha):
    """gamma = p*v/beta with v = alpha/beta, written out in beta."""
    v = alpha / beta
    return alpha * alpha / (beta * beta * beta * math.sqrt((1.0 - v) * (1.0 + v)))


def residual(beta, alpha):
    return beta - zeta(photon_energy_ratio(beta, alpha))


def residual_array(betas, alpha):
    betas = np.asarray(betas, dtype=float)
    out = np.empty_like(betas)
    for i in range(betas.size):
        out[i] = residual(float(betas[i]), alpha)
    return out


def sign_change_indices(betas, alpha):
    f = residual_array(betas, alpha)
    neg = np.signbit(f)
    return np.flatnonzero(neg[:-1] != neg[1:])


def _brent(f, arg, xa, xb, ftol, xtol, maxiter):
    """Brent's bracketing root finder.

    Returns ``(x, f(x), iterations, converged)``.  Convergence needs both the
    half bracket below ``xtol/2`` (plus a rounding floor) and ``|f| <= ftol``.
    """
    xpre, xcur = xa, xb
    fpre, fcur = f(xpre, arg), f(xcur, arg)
    if fpre == 0.0:
        return xpre, fpre, 0, True
    if fcur == 0.0:
        return xcur, fcur, 0, True
    if math.copysign(1.0, fpre) == math.copysign(1.0, fcur):
        return xcur, fcur, 0, False
    xblk = fblk = spre = scur = 0.0
    for it in range(1, maxiter + 1):
        if fpre != 0.0 and fcur != 0.0 and math.copysign(1.0, fpre) != math.copysign(1.0, fcur):
            xblk, fblk = xpre, fpre
            spre = scur = xcur - xpre
        if abs(fblk) < abs(fcur):
            xpre, xcur, xblk = xcur, xblk, xcur
            fpre, fcur, fblk = fcur, fblk, fcur
        delta = 0.5 * (xtol + 4.0 * _EPS * abs(xcur))
        sbis = 0.5 * (xblk - xcur)
        if fcur == 0.0 or (abs(sbis) < delta and abs(fcur) <= ftol):
            return xcur, fcur, it, True
        if abs(spre) > delta and abs(fcur) < abs(fpre):
            if xpre == xblk:
                stry = -fcur * (xcur - xpre) / (fcur - fpre)
            else:
                dpre = (fpre - fcur) / (xpre - xcur)
                dblk = (fblk - fcur) / (xblk - xcur)
                stry = -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))
            if 2.0 * abs(stry) < min(abs(spre), 3.0 * abs(sbis) - delta):
                spre, scur = scur, stry
            else:
                spre = scur = sbis
        else:
            spre = scur = sbis
        xpre, fpre = xcur, fcur
        if abs(scur) > delta:
            xcur += scur
        else:
            xcur += delta if sbis > 0.0 else -delta
        fcur = f(xcur, arg)
    return xcur, fcur, maxiter, False


def brent_residual(alpha, lo, hi, ftol, xtol, maxiter):
    return _brent(residual, alpha, lo, hi, ftol, xtol, maxiter)


def _recoil_scaled(s, energy):
    # 1 - zeta(E/beta)/beta at beta = exp(s); same sign as beta - zeta(E/beta)
    inv = math.exp(-s)
    return 1.0 - zeta(energy * inv) * inv


def recoil_beta(energy, ftol, xtol, maxiter):
    """Solve beta = zeta(energy/beta) on (0, 1] in log space.

    Returns ``(beta, iterations, converged)``.
    """
    if energy <= 0.0:
        return 1.0, 0, True
    hi = 0.0
    if _recoil_scaled(hi, energy) <= 0.0:
        return 1.0, 0, _recoil_scaled(hi, energy) == 0.0
    lo = hi
    # decade bracketing down to the smallest normal double
    while True:
        lo = hi - math.log(10.0)
        if lo < -708.0:
            return 0.0, 0, False
        if _recoil_scaled(lo, energy) < 0.0:
            break
        hi = lo
    s, fs, iters, ok = _brent(_recoil_scaled, energy, lo, hi, ftol, xtol, maxiter)
    return math.exp(s), iters, ok


def recoil_beta_array(energies, ftol, xtol, maxiter):
    energies = np.asarray(energies, dtype=float)
    n = energies.size
    betas = np.empty(n)
    iters = np.empty(n, dtype=np.int64)
    conv = np.empty(n, dtype=bool)
    for i in range(n):
        betas[i], iters[i], conv[i] = recoil_beta(float(energies[i]), ftol, xtol, maxiter)
    return betas, iters, conv
