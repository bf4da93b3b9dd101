"""tan/cot and cotangent derivatives at rational multiples of pi.

Higher derivatives of cot are evaluated through exact integer polynomials
Q_m with cot^(m)(x) = Q_m(cot x), so each value costs one transcendental
evaluation and the coefficients carry no rounding error.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mpf, workprec

from .errors import PoleAtHalfPeriod, PoleAtIntegerMultiple
from .hp import DEFAULT_BITS, guarded


@dataclass(frozen=True)
class CotPoly:
    """Q_m(t) with cot^(m)(x) = Q_m(cot x); integer coefficients, ascending."""

    order: int
    coefficients: tuple[int, ...]

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc


_COT_POLYS: list[CotPoly] = [CotPoly(0, (0, 1))]
_COT_POLYS_LOCK = threading.Lock()


def cot_poly(m: int) -> CotPoly:
    """Q_m via Q_{m+1} = -(1 + t^2) Q_m', memoized."""
    if m < 0:
        raise ValueError("derivative order must be >= 0")
    if m >= len(_COT_POLYS):
        with _COT_POLYS_LOCK:
            while len(_COT_POLYS) <= m:
                prev = _COT_POLYS[-1].coefficients
                deriv = tuple(i * c for i, c in enumerate(prev))[1:]
                out = [0] * (len(deriv) + 2)
                for i, c in enumerate(deriv):
                    out[i] -= c
                    out[i + 2] -= c
                _COT_POLYS.append(CotPoly(len(_COT_POLYS), tuple(out)))
    return _COT_POLYS[m]


def cot_at(a: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """cot(pi*a/k), argument reduced mod k first."""
    a %= k
    if a == 0:
        raise PoleAtIntegerMultiple(f"cot(pi*{a}/{k}) has a pole: k | a")
    with workprec(guarded(bits, k)):
        q = mpf(a) / k
        return mpmath.cospi(q) / mpmath.sinpi(q)


def tan_at(a: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """tan(pi*a/k); a = k/2 (mod k) is a pole when k is even."""
    a %= k
    if k % 2 == 0 and a == k // 2:
        raise PoleAtHalfPeriod(f"tan(pi*{a}/{k}) is undefined")
    with workprec(guarded(bits, k)):
        q = mpf(a) / k
        return mpmath.sinpi(q) / mpmath.cospi(q)


def cot_deriv_at(m: int, a: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """cot^(m)(pi*a/k) = Q_m(cot(pi*a/k))."""
    poly = cot_poly(m)
    with workprec(guarded(bits, k) + m):
        return poly(cot_at(a, k, bits + m))


@lru_cache(maxsize=256)
def cot_table(k: int, bits: int = DEFAULT_BITS) -> tuple:
    """(cot(pi*a/k))_{a=1..k-1}, built symmetrically so table[k-a] = -table[a]."""
    with workprec(guarded(bits, k)):
        half = {}
        for a in range(1, k // 2 + 1):
            q = mpf(a) / k
            half[a] = mpmath.cospi(q) / mpmath.sinpi(q)
        vals = []
        for a in range(1, k):
            vals.append(half[a] if 2 * a <= k else -half[k - a])
        return tuple(vals)


@lru_cache(maxsize=256)
def tan_table(k: int, bits: int = DEFAULT_BITS) -> tuple:
    """(tan(pi*a/k))_{a=1..k-1}; the k/2 slot of an even k holds None."""
    with workprec(guarded(bits, k)):
        half = {}
        for a in range(1, k // 2 + 1):
            if 2 * a == k:
                half[a] = None
                continue
            q = mpf(a) / k
            half[a] = mpmath.sinpi(q) / mpmath.cospi(q)
        vals = []
        for a in range(1, k):
            v = half[a] if 2 * a <= k else half[k - a]
            vals.append(v if (2 * a <= k or v is None) else -v)
        return tuple(vals)


def trig_product_sum(factors, k: int, exclusions=frozenset(),
                     bits: int = DEFAULT_BITS) -> mpf:
    """sum_{a=1}^{k-1} prod_j factor_j(a), skipping excluded residues.

    Each factor is (kind, order, multiplier) with kind "cot-deriv" or "tan";
    order is the cot derivative order (0 for plain cot) and is ignored for
    tan. Exclusions must cover every pole (a = k/2 for tan with k even);
    an uncovered pole raises.
    """
    excl = {e % k for e in exclusions}
    with workprec(guarded(bits, k * k)):
        total = mpf(0)
        for a in range(1, k):
            if a in excl:
                continue
            term = mpf(1)
            for kind, order, mult in factors:
                if kind == "tan":
                    term *= tan_at(a * mult, k, bits)
                elif kind == "cot-deriv":
                    term *= cot_deriv_at(order, a * mult, k, bits)
                else:
                    raise ValueError(f"unknown trig factor kind {kind!r}")
            total += term
        return total
