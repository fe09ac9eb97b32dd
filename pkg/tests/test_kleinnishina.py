import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasiatom.kleinnishina import (
    GAMMA_SWITCH,
    SERIES_COEFFS,
    zeta,
    zeta_closed_form,
    zeta_derivative,
    zeta_series,
    zeta_values,
)

from .oracles import zeta_derivative_mp, zeta_mp, zeta_taylor_mp


def test_closed_form_values(backend):
    assert zeta_closed_form(1.0) == pytest.approx(0.4307, abs=1e-3)
    assert zeta_closed_form(1.0) == pytest.approx(float(zeta_mp(1)), rel=1e-14)
    assert zeta_closed_form(341.0) == pytest.approx(0.0077, abs=1e-4)


def test_closed_form_cancellation_near_thomson_limit(backend):
    # the closed form loses ~g**-2 ulps; at 1e-8 nothing survives, which is
    # why zeta() switches to the series
    assert abs(zeta_closed_form(1e-8) - 1.0) > 1e-3
    assert abs(zeta_closed_form(1e-4) / float(zeta_mp(1e-4)) - 1) > 1e-12
    assert zeta(1e-8) == pytest.approx(float(zeta_mp(1e-8)), rel=1e-15)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_closed_form_rejects(bad):
    with pytest.raises(ValueError):
        zeta_closed_form(bad)


def test_series_values(backend):
    assert zeta_series(0.0) == 1.0
    assert zeta_series(1e-4) == pytest.approx(1 - 2e-4, abs=1e-7)
    assert zeta_series(1e-3) == pytest.approx(float(zeta_mp(1e-3)), rel=1e-10)
    with pytest.raises(ValueError):
        zeta_series(GAMMA_SWITCH * 1.01)


def test_series_leading_coefficient_from_oracle():
    # fit (zeta - 1)/g at tiny g with 60-digit closed form; the slope must be -2
    with mp.workdps(60):
        g = [mp.mpf(10) ** -k for k in (12, 13)]
        slopes = [(zeta_mp(x) - 1) / x for x in g]
    assert float(slopes[-1]) == pytest.approx(-2.0, abs=1e-11)
    assert SERIES_COEFFS[:2] == (1.0, -2.0)


def test_series_coefficients_against_oracle():
    # Taylor coefficients from finite sums of the high-precision closed form
    coeffs = zeta_taylor_mp(6)
    for k, c in enumerate(coeffs):
        assert SERIES_COEFFS[k] == pytest.approx(float(c), rel=1e-9)


def test_series_closed_form_overlap(backend):
    for g in np.linspace(GAMMA_SWITCH / 10, GAMMA_SWITCH, 60):
        exact = zeta_mp(float(g))
        assert abs(zeta_series(float(g)) / exact - 1) <= 1e-10


def test_dispatch_values(backend):
    assert zeta(0.0) == 1.0
    assert zeta(5.3e-5) == pytest.approx(0.99989, abs=1e-5)
    below = zeta(GAMMA_SWITCH)
    above = zeta(math.nextafter(GAMMA_SWITCH, 1.0))
    assert above == pytest.approx(below, rel=1e-9)


@pytest.mark.parametrize("g", [1e3, 1e5])
def test_high_energy_asymptote(backend, g):
    assert zeta(g) == pytest.approx(3 / (8 * g) * (math.log(2 * g) + 0.5), rel=0.01)


@pytest.mark.parametrize("g", [1e-6, 1e-3, 0.05, 0.2, 0.21, 0.7, 3.0, 341.0, 1e6, 1e50, 1e200, 1e300])
def test_zeta_matches_high_precision(backend, g):
    assert zeta(g) == pytest.approx(float(zeta_mp(g)), rel=1e-13)


def test_derivative_examples(backend):
    d1 = zeta_derivative(1.0)
    h = 1e-6
    fd = (zeta(1 + h) - zeta(1 - h)) / (2 * h)
    assert d1 < 0
    assert d1 == pytest.approx(fd, rel=1e-6)
    assert d1 == pytest.approx(float(zeta_derivative_mp(1)), rel=1e-12)
    assert zeta_derivative(1e-9) == pytest.approx(-2.0, abs=1e-4)
    assert zeta_derivative(100.0) < 0
    assert abs(zeta_derivative(100.0)) < abs(d1)
    with pytest.raises(ValueError):
        zeta_derivative(0.0)


def test_derivative_vs_central_differences(backend):
    worst = 0.0
    for g in np.geomspace(1e-3, 1e3, 241):
        g = float(g)
        h = g * 1e-6
        fd = (zeta(g + h) - zeta(g - h)) / (2 * h)
        worst = max(worst, abs(zeta_derivative(g) / fd - 1))
    assert worst <= 1e-6


@pytest.mark.parametrize("g", [1e-3, 0.1, 0.2, 0.3, 10.0, 1e3])
def test_derivative_vs_high_precision(backend, g):
    assert zeta_derivative(g) == pytest.approx(float(zeta_derivative_mp(g)), rel=1e-11)


@given(
    st.floats(min_value=1e-12, max_value=1e6),
    st.floats(min_value=1e-12, max_value=1e6),
)
def test_strictly_decreasing(a, b):
    lo, hi = sorted((a, b))
    if lo == hi:
        return
    # resolvable separation: slope ~ -2 near 0, ~ -ln(g)/g^2 far out
    if hi / lo - 1 < 1e-9:
        return
    assert zeta(lo) > zeta(hi)


@given(st.floats(min_value=0.0, max_value=1e300))
def test_range(g):
    z = zeta(g)
    assert 0.0 < z <= 1.0


def test_monotone_dense_grid(backend):
    g = np.geomspace(1e-10, 1e6, 20001)
    z = zeta_values(g)
    assert np.all(np.diff(z) < 0)
    assert zeta_values([0.0])[0] == 1.0


def test_values_rejects_bad():
    with pytest.raises(ValueError):
        zeta_values([1.0, -1.0])
    with pytest.raises(ValueError):
        zeta(math.nan)
