"""Independent high-precision references (mpmath), used only by the tests."""
import mpmath as mp

CODATA_ALPHA = "7.2973525693e-3"

# 40-digit mpmath bisection of F(beta), CODATA alpha
BETA_BOHR = 0.99989347516470362941
BETA_RELATIVISTIC = 0.0077533422008912775811


def _zeta(g):
    g = mp.mpf(g)
    lg = mp.log1p(2 * g)
    return mp.mpf(3) / 4 * (
        (1 + g) / g**3 * (2 * g * (1 + g) / (1 + 2 * g) - lg)
        + lg / (2 * g)
        - (1 + 3 * g) / (1 + 2 * g) ** 2
    )


def zeta_mp(g, dps=60):
    with mp.workdps(dps):
        return +_zeta(g)


def zeta_derivative_mp(g, dps=60):
    with mp.workdps(dps):
        return mp.diff(_zeta, mp.mpf(g))


def zeta_taylor_mp(order, dps=200):
    """Maclaurin coefficients from numerical derivatives at g = 1e-30.

    The closed form cancels ~g**-2, so 200 digits leave plenty after the
    60 lost at this point; the shift from g = 0 is far below double precision.
    """
    with mp.workdps(dps):
        return mp.taylor(_zeta, mp.mpf(10) ** -30, order)


def residual_mp(beta, alpha=CODATA_ALPHA, dps=40):
    with mp.workdps(dps):
        a = mp.mpf(alpha)
        b = mp.mpf(beta)
        return b - zeta_mp(a**2 / (b**3 * mp.sqrt(1 - (a / b) ** 2)), dps)


def bisect_mp(f, lo, hi, iterations=120, dps=40):
    """Plain bisection; f(lo) and f(hi) must differ in sign."""
    with mp.workdps(dps):
        lo, hi = mp.mpf(lo), mp.mpf(hi)
        flo = f(lo)
        for _ in range(iterations):
            mid = (lo + hi) / 2
            fm = f(mid)
            if (fm < 0) == (flo < 0):
                lo, flo = mid, fm
            else:
                hi = mid
        return (lo + hi) / 2


def recoil_beta_mp(energy, dps=40):
    """beta = zeta(E/beta) by bisection in log(beta)."""
    with mp.workdps(dps):
        e = mp.mpf(energy)
        s = bisect_mp(lambda t: mp.exp(t) - zeta_mp(e / mp.exp(t), dps), mp.log(mp.mpf("1e-300")), 0, 300, dps)
        return mp.exp(s)
