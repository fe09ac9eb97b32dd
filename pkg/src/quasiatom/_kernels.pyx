# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same operations, same order of floating-point steps as ``_kernels_py``.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport copysign, exp, fabs, log, log1p, sqrt

from ._zeta_series import COEFFS, GAMMA_SWITCH as _SWITCH

cnp.import_array()

BACKEND = "cython"

DEF MAXTERMS = 128
DEF EPS = 2.220446049250313e-16

cdef double _switch = _SWITCH
cdef double _c[MAXTERMS]
cdef double _dc[MAXTERMS]
cdef int _n = len(COEFFS)
if _n > MAXTERMS:
    raise ImportError("too many series coefficients")
for _k in range(_n):
    _c[_k] = COEFFS[_k]
    _dc[_k] = _k * COEFFS[_k]

ctypedef double (*objective)(double, double) noexcept nogil


cdef inline double _zeta_closed(double g) noexcept nogil:
    cdef double q = 1.0 / g
    cdef double lg = log1p(2.0 * g)
    cdef double s = 1.0 + 2.0 * g
    return 0.75 * (
        (1.0 + q) * q * ((1.0 + q) * (2.0 * g / s) - lg * q)
        + 0.5 * lg * q
        - (1.0 + 3.0 * g) / s / s
    )


cdef inline double _zeta_series(double g) noexcept nogil:
    cdef double acc = 0.0
    cdef int k
    for k in range(_n - 1, -1, -1):
        acc = acc * g + _c[k]
    return acc


cdef inline double _zeta(double g) noexcept nogil:
    if g <= _switch:
        return _zeta_series(g)
    return _zeta_closed(g)


cdef inline double _zeta_closed_deriv(double g) noexcept nogil:
    cdef double q = 1.0 / g
    cdef double lg = log1p(2.0 * g)
    cdef double s = 1.0 + 2.0 * g
    cdef double u = g / s
    cdef double u3 = u * u * u
    cdef double quartic = 2.0 * u3 - q * (39.0 * u3 + (63.0 * u * u + (34.0 * u + 6.0 / s) / s) / s)
    return 0.375 * q * q * ((6.0 * q * q + 4.0 * q - 1.0) * lg + 2.0 * quartic)


cdef inline double _zeta_series_deriv(double g) noexcept nogil:
    cdef double acc = 0.0
    cdef int k
    for k in range(_n - 1, 0, -1):
        acc = acc * g + _dc[k]
    return acc


cdef inline double _photon_energy_ratio(double beta, double alpha) noexcept nogil:
    cdef double v = alpha / beta
    return alpha * alpha / (beta * beta * beta * sqrt((1.0 - v) * (1.0 + v)))


cdef double _residual(double beta, double alpha) noexcept nogil:
    return beta - _zeta(_photon_energy_ratio(beta, alpha))


cdef double _recoil_scaled(double s, double energy) noexcept nogil:
    cdef double inv = exp(-s)
    return 1.0 - _zeta(energy * inv) * inv


cdef inline bint _same_sign(double a, double b) noexcept nogil:
    return copysign(1.0, a) == copysign(1.0, b)


cdef bint _brent(objective f, double arg, double xa, double xb, double ftol,
                 double xtol, int maxiter, double *xout, double *fout,
                 int *iters) noexcept nogil:
    cdef double xpre = xa, xcur = xb
    cdef double fpre = f(xpre, arg), fcur = f(xcur, arg)
    cdef double xblk = 0.0, fblk = 0.0, spre = 0.0, scur = 0.0
    cdef double delta, sbis, stry, dpre, dblk, lim
    cdef int it
    iters[0] = 0
    if fpre == 0.0:
        xout[0] = xpre; fout[0] = fpre
        return True
    if fcur == 0.0:
        xout[0] = xcur; fout[0] = fcur
        return True
    if _same_sign(fpre, fcur):
        xout[0] = xcur; fout[0] = fcur
        return False
    for it in range(1, maxiter + 1):
        if fpre != 0.0 and fcur != 0.0 and not _same_sign(fpre, fcur):
            xblk = xpre; fblk = fpre
            spre = xcur - xpre; scur = spre
        if fabs(fblk) < fabs(fcur):
            xpre = xcur; xcur = xblk; xblk = xpre
            fpre = fcur; fcur = fblk; fblk = fpre
        delta = 0.5 * (xtol + 4.0 * EPS * fabs(xcur))
        sbis = 0.5 * (xblk - xcur)
        if fcur == 0.0 or (fabs(sbis) < delta and fabs(fcur) <= ftol):
            xout[0] = xcur; fout[0] = fcur
            iters[0] = it
            return True
        if fabs(spre) > delta and fabs(fcur) < fabs(fpre):
            if xpre == xblk:
                stry = -fcur * (xcur - xpre) / (fcur - fpre)
            else:
                dpre = (fpre - fcur) / (xpre - xcur)
                dblk = (fblk - fcur) / (xblk - xcur)
                stry = -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))
            lim = 3.0 * fabs(sbis) - delta
            if fabs(spre) < lim:
                lim = fabs(spre)
            if 2.0 * fabs(stry) < lim:
                spre = scur; scur = stry
            else:
                spre = sbis; scur = sbis
        else:
            spre = sbis; scur = sbis
        xpre = xcur; fpre = fcur
        if fabs(scur) > delta:
            xcur += scur
        elif sbis > 0.0:
            xcur += delta
        else:
            xcur -= delta
        fcur = f(xcur, arg)
    xout[0] = xcur; fout[0] = fcur
    iters[0] = maxiter
    return False


cdef bint _recoil_beta(double energy, double ftol, double xtol, int maxiter,
                       double *beta, int *iters) noexcept nogil:
    cdef double hi = 0.0, lo, s, fs, f0
    cdef bint ok
    iters[0] = 0
    if energy <= 0.0:
        beta[0] = 1.0
        return True
    f0 = _recoil_scaled(hi, energy)
    if f0 <= 0.0:
        beta[0] = 1.0
        return f0 == 0.0
    while True:
        lo = hi - log(10.0)
        if lo < -708.0:
            beta[0] = 0.0
            return False
        if _recoil_scaled(lo, energy) < 0.0:
            break
        hi = lo
    ok = _brent(_recoil_scaled, energy, lo, hi, ftol, xtol, maxiter, &s, &fs, iters)
    beta[0] = exp(s)
    return ok


def zeta_closed(double g):
    return _zeta_closed(g)


def zeta_series(double g):
    return _zeta_series(g)


def zeta(double g):
    return _zeta(g)


def zeta_closed_deriv(double g):
    return _zeta_closed_deriv(g)


def zeta_series_deriv(double g):
    return _zeta_series_deriv(g)


def zeta_deriv(double g):
    if g <= _switch:
        return _zeta_series_deriv(g)
    return _zeta_closed_deriv(g)


def zeta_array(g):
    cdef cnp.ndarray[double, ndim=1] src = np.ascontiguousarray(g, dtype=float).ravel()
    cdef cnp.ndarray[double, ndim=1] out = np.empty_like(src)
    cdef Py_ssize_t i, n = src.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _zeta(src[i])
    return out.reshape(np.shape(g))


def photon_energy_ratio(double beta, double alpha):
    return _photon_energy_ratio(beta, alpha)


def residual(double beta, double alpha):
    return _residual(beta, alpha)


def residual_array(betas, double alpha):
    cdef cnp.ndarray[double, ndim=1] src = np.ascontiguousarray(betas, dtype=float).ravel()
    cdef cnp.ndarray[double, ndim=1] out = np.empty_like(src)
    cdef Py_ssize_t i, n = src.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _residual(src[i], alpha)
    return out


def sign_change_indices(betas, double alpha):
    f = residual_array(betas, alpha)
    neg = np.signbit(f)
    return np.flatnonzero(neg[:-1] != neg[1:])


def brent_residual(double alpha, double lo, double hi, double ftol, double xtol, int maxiter):
    cdef double x, fx
    cdef int it
    cdef bint ok = _brent(_residual, alpha, lo, hi, ftol, xtol, maxiter, &x, &fx, &it)
    return x, fx, it, ok


def recoil_beta(double energy, double ftol, double xtol, int maxiter):
    cdef double beta
    cdef int it
    cdef bint ok = _recoil_beta(energy, ftol, xtol, maxiter, &beta, &it)
    return beta, it, ok


def recoil_beta_array(energies, double ftol, double xtol, int maxiter):
    cdef cnp.ndarray[double, ndim=1] src = np.ascontiguousarray(energies, dtype=float).ravel()
    cdef Py_ssize_t i, n = src.shape[0]
    cdef cnp.ndarray[double, ndim=1] betas = np.empty(n)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] iters = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] conv = np.empty(n, dtype=np.uint8)
    cdef int it
    cdef double b
    with nogil:
        for i in range(n):
            conv[i] = _recoil_beta(src[i], ftol, xtol, maxiter, &b, &it)
            betas[i] = b
            iters[i] = it
    return betas, iters, conv.astype(bool)
