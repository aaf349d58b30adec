"""Independent oracles used by the tests.

Everything here is deliberately separate from the library code paths it
checks: plain bisection, naive float continued fractions, truncation via
the decimal module, numpy grid sign counting, and exact polynomial gcd
over Fractions for multiple-root detection.
"""

from __future__ import annotations

from decimal import ROUND_DOWN, Decimal
from fractions import Fraction
from math import floor, isqrt

import numpy as np

GRID = np.linspace(-10.0, 10.0, 20001)  # step 1e-3
_GRID_POWERS = {k: GRID ** k for k in range(6)}


def bisect_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Plain bisection on a sign-change interval."""
    f_lo = f(lo)
    assert f_lo * f(hi) < 0, "oracle bracket must change sign"
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0 or hi - lo < tol:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def float_cf_terms(value: float, count: int) -> list[int]:
    """Naive float continued-fraction expansion."""
    out = []
    x = value
    for _ in range(count):
        a = floor(x)
        out.append(a)
        x = 1.0 / (x - a)
    return out


def truncate_float(value: float, digits: int) -> str:
    """Decimal rendering truncated toward zero (independent of the library)."""
    quantum = Decimal(1).scaleb(-digits)
    return str(Decimal(value).quantize(quantum, rounding=ROUND_DOWN))


def sqrt_decimal_string(whole: int, radicand: int, digits: int) -> str:
    """Truncated decimal string of ``whole + sqrt(radicand)`` via isqrt."""
    scale = 10 ** digits
    scaled = whole * scale + isqrt(radicand * scale * scale)
    return f"{scaled // scale}.{scaled % scale:0{digits}d}"


def grid_sign_changes(n: int, c: int, e: int, rhs: float) -> int:
    """Sign changes of x**n + c*x**e - rhs sampled on [-10, 10] at step 1e-3."""
    values = _GRID_POWERS[n] + c * _GRID_POWERS[e] - rhs
    signs = np.sign(values)
    nonzero = signs[signs != 0]
    return int(np.count_nonzero(nonzero[1:] != nonzero[:-1]))


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _trim(list(a))
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, coefficient in enumerate(b):
            a[i + shift] -= factor * coefficient
        _trim(a)
        if not a:
            break
    return a


def has_multiple_root(n: int, c: int, e: int, rhs: Fraction) -> bool:
    """Whether x**n + c*x**e - rhs has a repeated root (exact gcd test).

    For these trinomial families any root shared with the derivative is
    real, so a non-constant gcd(f, f') means a repeated real root.
    """
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] += 1
    coeffs[e] += c
    coeffs[0] -= rhs
    f = _trim(coeffs)
    fp = _trim([i * coefficient for i, coefficient in enumerate(f)][1:])
    a, b = f, fp
    while b:
        a, b = b, _poly_mod(a, b)
    return len(a) > 1
