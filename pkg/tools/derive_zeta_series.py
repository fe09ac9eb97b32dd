"""Regenerate ``src/quasiatom/_zeta_series.py``.

The Klein-Nishina factor is expanded about zero with exact rational
power-series arithmetic, then the result is checked against a 60-digit
mpmath evaluation of the closed form before anything is written.

    python tools/derive_zeta_series.py [--terms 64]
"""
import argparse
from fractions import Fraction
from pathlib import Path

import mpmath as mp

TARGET = Path(__file__).resolve().parents[1] / "src" / "quasiatom" / "_zeta_series.py"


def _mul(a, b, n):
    out = [Fraction(0)] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[: n - i]):
                out[i + j] += ai * bj
    return out


def _add(*series):
    return [sum(col, Fraction(0)) for col in zip(*series)]


def _scale(a, k):
    return [k * x for x in a]


def maclaurin(terms):
    """Exact coefficients c_k of zeta(g) = sum c_k g**k, k < terms."""
    n = terms + 3  # everything is multiplied by g**3 and shifted back at the end
    g = [Fraction(0)] * n
    g[1] = Fraction(1)
    one_plus_g = [Fraction(1), Fraction(1)] + [Fraction(0)] * (n - 2)
    log1p2g = [Fraction(0)] + [Fraction((-1) ** (k + 1) * 2**k, k) for k in range(1, n)]
    inv = [Fraction((-2) ** k) for k in range(n)]
    inv2 = [Fraction((k + 1) * (-2) ** k) for k in range(n)]

    bracket = _add(_scale(_mul(_mul(g, one_plus_g, n), inv, n), 2), _scale(log1p2g, -1))
    t1 = _mul(one_plus_g, bracket, n)
    t2 = _scale(_mul(_mul(g, g, n), log1p2g, n), Fraction(1, 2))
    g3 = _mul(_mul(g, g, n), g, n)
    t3 = _scale(_mul(_mul(g3, [Fraction(1), Fraction(3)] + [Fraction(0)] * (n - 2), n), inv2, n), -1)
    total = _scale(_add(t1, t2, t3), Fraction(3, 4))
    if any(total[:3]):
        raise ArithmeticError("g**3 prefactor did not cancel")
    return total[3:]


def closed_form_mp(g):
    g = mp.mpf(g)
    lg = mp.log1p(2 * g)
    return mp.mpf(3) / 4 * (
        (1 + g) / g**3 * (2 * g * (1 + g) / (1 + 2 * g) - lg)
        + lg / (2 * g)
        - (1 + 3 * g) / (1 + 2 * g) ** 2
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--terms", type=int, default=64)
    parser.add_argument("--switch", type=float, default=0.2)
    args = parser.parse_args()

    coeffs = maclaurin(args.terms)
    mp.mp.dps = 60
    worst = 0.0
    for x in mp.linspace(args.switch / 10, args.switch, 41):
        series = mp.fsum(mp.mpf(c.numerator) / c.denominator * x**k for k, c in enumerate(coeffs))
        worst = max(worst, float(abs(series / closed_form_mp(x) - 1)))
    print(f"max relative deviation on [{args.switch / 10:g}, {args.switch:g}]: {worst:.3e}")
    if worst > 1e-15:
        raise SystemExit("series too short for the requested switch")

    lines = [
        '"""Maclaurin coefficients of the Klein-Nishina factor about zero.',
        "",
        "Generated by tools/derive_zeta_series.py; do not edit by hand.",
        '"""',
        "",
        f"GAMMA_SWITCH = {args.switch!r}",
        "",
        "COEFFS = (",
    ]
    lines += [f"    {float(c)!r},  # {c.numerator}/{c.denominator}" if len(str(c)) < 60 else f"    {float(c)!r}," for c in coeffs]
    lines += [")", ""]
    TARGET.write_text("\n".join(lines))
    print(f"wrote {len(coeffs)} coefficients to {TARGET}")


if __name__ == "__main__":
    main()
