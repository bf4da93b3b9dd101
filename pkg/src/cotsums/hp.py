"""High-precision numeric substrate.

Real/complex values are mpmath mpf/mpc carrying an explicit bit precision.
Every routine that produces numbers takes a ``bits`` argument and evaluates
under ``workprec(bits + guard)`` so that the returned value is accurate at
the configured precision; the guard absorbs the O(k) accumulation of the
summations involved.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mpc, mpf, workprec

DEFAULT_BITS = 256

# extra working bits on top of the requested precision
GUARD_BITS = 16


def guarded(bits: int, n: int = 0) -> int:
    """Working precision for a computation combining ~n rounded terms."""
    return bits + GUARD_BITS + max(0, n).bit_length()


def to_mpf(x) -> mpf:
    """Convert int/Fraction/mpf to mpf at the current working precision."""
    if isinstance(x, Fraction):
        return mpmath.mpmathify(x)
    return mpf(x)


def to_number(x):
    """Promote int/Fraction/float/complex to mpf/mpc; pass mp types through."""
    if isinstance(x, (mpf, mpc)):
        return x
    if isinstance(x, Fraction):
        return mpmath.mpmathify(x)
    if isinstance(x, complex):
        return mpc(x.real, x.imag)
    return mpmath.mpmathify(x)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def abs_residual(lhs, rhs, bits: int = DEFAULT_BITS) -> mpf:
    """|lhs - rhs| evaluated at full working precision."""
    with workprec(guarded(bits)):
        return abs(to_number(lhs) - to_number(rhs))


def max_abs(values, bits: int = DEFAULT_BITS) -> mpf:
    with workprec(guarded(bits)):
        out = mpf(0)
        for v in values:
            a = abs(to_number(v))
            if a > out:
                out = a
        return out


def parse_tolerance(text: str) -> mpf:
    """Parse '2^-128', '1e-30' or a plain decimal into an mpf tolerance."""
    text = text.strip()
    if text.startswith("2^"):
        return mpf(2) ** int(text[2:])
    with workprec(80):
        return mpf(text)


def fmt(x, bits: int = DEFAULT_BITS) -> str:
    """Render exact values as fractions, numerics as decimals.

    Exact rationals keep the lossless p/q form; mpf/mpc are printed with
    the number of digits the precision actually supports.
    """
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    digits = max(8, int(bits * 0.3010) - 2)
    return mpmath.nstr(x, digits)
