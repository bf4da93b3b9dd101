"""Dedekind, Zagier-type, Bernoulli and Hardy sums: exact definitional side
and finite trigonometric side for each.

Exact sides are brute-force enumerations over residue tuples (O(k^(m-1))
products, Fraction arithmetic, optional work limit). Trig sides are O(k)
sums over cached cot/tan tables with multipliers inverted mod k.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, prod

import mpmath
from mpmath import mpc, mpf, workprec

from . import periodic, trig
from .errors import NotCoprime, ParityViolation
from .exact import mod_inverse, periodic_bernoulli, sawtooth
from .hp import DEFAULT_BITS, guarded
from .periodic import DEFAULT_WORK_LIMIT, PeriodicMap, constrained_product_sum

HARDY_KINDS = ("S", "s1", "s2", "s3", "s4", "s5")

EXCLUDE_ZERO = "exclude-zero-residue"
INCLUDE_ZERO = "include-zero-residue"


def _sign(exponent: int) -> int:
    """(-1)^exponent for any integer exponent (negative included)."""
    return -1 if exponent % 2 else 1


def _require_coprime(h: int, k: int, name: str = "h") -> None:
    if gcd(h, k) != 1:
        raise NotCoprime(f"{name} must be coprime to k: gcd({h}, {k}) = {gcd(h, k)}")


def _require_all_coprime(hs, k) -> None:
    for j, h in enumerate(hs, 1):
        _require_coprime(h, k, f"h{j}")


# ---------------------------------------------------------------------------
# classical Dedekind sum


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h,k) = sum_{a mod k} ((a/k)) ((ah/k)), exact."""
    if k < 1:
        raise ValueError("k must be positive")
    total = Fraction(0)
    for a in range(1, k):
        total += sawtooth(Fraction(a, k)) * sawtooth(Fraction(a * h, k))
    return total


def dedekind_cot(h: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """s(h,k) = (1/4k) sum_{a=1}^{k-1} cot(pi*a/k) cot(pi*a*h/k)."""
    _require_coprime(h, k)
    if k == 1:
        return mpf(0)
    ct = trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            acc += ct[a - 1] * ct[(a * h) % k - 1]
        return acc / (4 * k)


def dedekind_series(h: int, k: int, terms: int = 100_000,
                    bits: int = DEFAULT_BITS):
    """Truncation of s(h,k) = (1/2pi) sum over r >= 1 with k not dividing r
    of cot(pi*r*h/k)/r.

    Returns (partial_sum, tail_bound). The summand is k-periodic with zero
    mean over a period, so Abel summation bounds the omitted tail by
    k * max_r |cot(pi*r*h/k)| / (2*pi*N).
    """
    _require_coprime(h, k)
    with workprec(guarded(bits, terms)):
        if k == 1:
            return mpf(0), mpf(0)
        ct = trig.cot_table(k, bits)
        table = [None] + [ct[(r * h) % k - 1] for r in range(1, k)]
        acc = mpf(0)
        for r in range(1, terms + 1):
            rho = r % k
            if rho == 0:
                continue
            acc += table[rho] / r
        two_pi = 2 * mpmath.pi
        value = acc / two_pi
        bound = k * max(abs(t) for t in table[1:]) / (two_pi * terms)
        return value, bound


# ---------------------------------------------------------------------------
# Zagier-type higher dimensional sums


def zagier_sum(hs, k: int, work_limit: int = DEFAULT_WORK_LIMIT) -> Fraction:
    """sum of ((a_1 h_1/k)) ... ((a_m h_m/k)) over tuples with sum = 0 (mod k)."""
    maps = [periodic.sawtooth_map(k)] * len(hs)
    return constrained_product_sum(maps, hs, work_limit)


def zagier_cot(hs, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """((-1)^(m/2) / 2^m k) sum_{a=1}^{k-1} prod_j cot(pi*a*h_j'/k); m even."""
    m = len(hs)
    if m % 2 != 0:
        raise ParityViolation("the cotangent form needs even m")
    _require_all_coprime(hs, k)
    if k == 1:
        return mpf(0)
    invs = [mod_inverse(h, k) for h in hs]
    ct = trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            p = mpf(1)
            for hp in invs:
                p *= ct[(a * hp) % k - 1]
            acc += p
        sign = -1 if (m // 2) % 2 else 1
        return sign * acc / (mpf(2) ** m * k)


def homogeneous_pair_sum(h1: int, h2: int, k: int) -> Fraction:
    """sum_{a=1}^{k-1} ((a h1/k)) ((a h2/k)), exact."""
    return sum((sawtooth(Fraction(a * h1, k)) * sawtooth(Fraction(a * h2, k))
                for a in range(1, k)), Fraction(0))


def homogeneous_pair_cot(h1: int, h2: int, k: int,
                         bits: int = DEFAULT_BITS) -> mpf:
    """(1/4k) sum_{a=1}^{k-1} cot(pi*a*h1/k) cot(pi*a*h2/k), no inverses."""
    _require_coprime(h1, k, "h1")
    _require_coprime(h2, k, "h2")
    if k == 1:
        return mpf(0)
    ct = trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            acc += ct[(a * h1) % k - 1] * ct[(a * h2) % k - 1]
        return acc / (4 * k)


# ---------------------------------------------------------------------------
# Bernoulli-function sums


def bernoulli_dedekind_sum(rs, hs, k: int,
                           work_limit: int = DEFAULT_WORK_LIMIT) -> Fraction:
    """sum of B_{r_1}({a_1 h_1/k}) ... B_{r_m}({a_m h_m/k}) over zero-sum tuples."""
    if len(rs) != len(hs):
        raise ValueError("orders and multipliers must pair up")
    maps = [periodic.bernoulli_map(r, k) for r in rs]
    return constrained_product_sum(maps, hs, work_limit)


def bernoulli_dedekind_rhs(rs, hs, k: int, bits: int = DEFAULT_BITS,
                           convention: str = "corrected"):
    """Closed form for the zero-sum Bernoulli product sum, A = sum r_j even.

    convention="paper": the literal closed form
        prod B_{r_j} / k^(A-m+1)
        + ((-1)^(A/2) prod r_j / (2^A k^(A-m+1)))
          * sum_{a=1}^{k-1} prod_j cot^(r_j - 1)(pi*a*h_j'/k),
    which is exact iff every r_j >= 2.

    convention="corrected": (1/k) sum_a prod_j ghat_j(a h_j') with the
    r = 1 transforms carrying their missing constant, exact for all r_j.
    """
    m, A = len(rs), sum(rs)
    if A % 2 != 0:
        raise ParityViolation("needs even total order A")
    _require_all_coprime(hs, k)
    invs = [mod_inverse(h, k) for h in hs]
    if convention == "corrected":
        hats = [periodic.bernoulli_dft_map(r, k, bits, "corrected") for r in rs]
        with workprec(guarded(bits, k)):
            acc = mpc(0)
            for a in range(k):
                p = mpc(1)
                for hat, hp in zip(hats, invs):
                    p *= hat.values[(a * hp) % k]
                acc += p
            return acc / k
    if convention != "paper":
        raise ValueError(f"unknown convention {convention!r}")
    polys = [trig.cot_poly(r - 1) for r in rs]
    first = Fraction(1)
    for r in rs:
        first *= periodic_bernoulli(r, Fraction(0))
    first /= Fraction(k) ** (A - m + 1)
    if k == 1:
        with workprec(guarded(bits)):
            return mpmath.mpmathify(first)
    ct = trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            p = mpf(1)
            for poly, hp in zip(polys, invs):
                p *= poly(ct[(a * hp) % k - 1])
            acc += p
        sign = -1 if (A // 2) % 2 else 1
        coeff = mpf(sign * prod(rs)) / (mpf(2) ** A * mpf(k) ** (A - m + 1))
        return mpmath.mpmathify(first) + coeff * acc


def bernoulli_pair_sum(r1: int, r2: int, h1: int, h2: int, k: int) -> Fraction:
    """sum_{a mod k} B_{r1}({a h1/k}) B_{r2}({a h2/k}), exact."""
    return sum((periodic_bernoulli(r1, Fraction(a * h1, k))
                * periodic_bernoulli(r2, Fraction(a * h2, k))
                for a in range(k)), Fraction(0))


def bernoulli_pair_rhs(r1: int, r2: int, h1: int, h2: int, k: int,
                       bits: int = DEFAULT_BITS, convention: str = "corrected"):
    """Closed form for bernoulli_pair_sum, r1 + r2 even, no inverses.

    The cot-derivative of order r1 - 1 is attached to h2 (and r2 - 1 to
    h1): that is the pairing the transform derivation produces, and the
    one that matches the exact side for r1 != r2 (brute-force checked).

    convention="corrected" routes through the zero-sum evaluator with the
    exact r = 1 transforms, using multiplier pair (h1, -h2).
    """
    A = r1 + r2
    if A % 2 != 0:
        raise ParityViolation("needs r1 + r2 even")
    _require_coprime(h1, k, "h1")
    _require_coprime(h2, k, "h2")
    if convention == "corrected":
        return bernoulli_dedekind_rhs((r1, r2), (h1, -h2), k, bits, "corrected")
    if convention != "paper":
        raise ValueError(f"unknown convention {convention!r}")
    first = (periodic_bernoulli(r1, Fraction(0)) * periodic_bernoulli(r2, Fraction(0))
             / Fraction(k) ** (A - 1))
    if k == 1:
        with workprec(guarded(bits)):
            return mpmath.mpmathify(first)
    p1, p2 = trig.cot_poly(r1 - 1), trig.cot_poly(r2 - 1)
    ct = trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            acc += p1(ct[(a * h2) % k - 1]) * p2(ct[(a * h1) % k - 1])
        sign = -1 if (((r1 - r2) // 2) % 2) else 1
        coeff = mpf(sign * r1 * r2) / (mpf(2) ** A * mpf(k) ** (A - 1))
        return mpmath.mpmathify(first) + coeff * acc


# ---------------------------------------------------------------------------
# Hardy sums


def hardy_sum(which: str, h: int, k: int,
              convention: str = EXCLUDE_ZERO) -> Fraction:
    """The six classical Hardy sums, exact.

    The a = 0 residue contributes only to S (a -1) and s4 (a +1); the
    convention argument selects whether it is included. The finite trig
    representations hold with it excluded, which is the default.
    """
    if which not in HARDY_KINDS:
        raise ValueError(f"unknown Hardy sum {which!r}")
    if k < 1:
        raise ValueError("k must be positive")
    if convention not in (EXCLUDE_ZERO, INCLUDE_ZERO):
        raise ValueError(f"unknown convention {convention!r}")
    start = 0 if convention == INCLUDE_ZERO else 1
    total = Fraction(0)
    for a in range(start, k):
        fl = (a * h) // k  # may be negative for h < 0; signs go through parity
        if which == "S":
            total += _sign(a + 1 + fl)
        elif which == "s1":
            total += _sign(fl) * sawtooth(Fraction(a, k))
        elif which == "s2":
            total += _sign(a) * sawtooth(Fraction(a, k)) * sawtooth(Fraction(a * h, k))
        elif which == "s3":
            total += _sign(a) * sawtooth(Fraction(a * h, k))
        elif which == "s4":
            total += _sign(fl)
        else:  # s5
            total += _sign(a + fl) * sawtooth(Fraction(a, k))
    return total


def _alt_sawtooth_dilated(h: int, k: int) -> PeriodicMap:
    # a -> (-1)^a ((a*h/k)); k-periodic for even k
    vals = tuple(_sign(a) * sawtooth(Fraction(a * h, k)) for a in range(k))
    return PeriodicMap(vals)


def _floor_sign_dilated(h: int, k: int) -> PeriodicMap:
    # a -> (-1)^(a*h + k*floor(a*h/k)) off a = 0, 0 at a = 0
    vals = [Fraction(0)]
    for a in range(1, k):
        vals.append(Fraction(_sign(a * h + k * ((a * h) // k))))
    return PeriodicMap(tuple(vals))


def hardy_A(hs, k: int, work_limit: int = DEFAULT_WORK_LIMIT) -> Fraction:
    """(-1)^(a_1)-weighted zero-sum sawtooth product sum (generalizes s2).

    Needs k even (for periodicity of the weight) and h_1 odd.
    """
    if k % 2 != 0:
        raise ParityViolation("needs even k")
    if hs[0] % 2 == 0:
        raise ParityViolation("needs odd h1")
    _require_all_coprime(hs, k)
    maps = [_alt_sawtooth_dilated(hs[0], k)]
    maps += [periodic.PeriodicMap(tuple(sawtooth(Fraction(a * h, k)) for a in range(k)))
             for h in hs[1:]]
    return constrained_product_sum(maps, [1] * len(hs), work_limit)


def hardy_A_rhs(hs, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """((-1)^(m/2-1) / 2^m k) sum_{a != k/2} tan(pi*a*h_1'/k) prod cot(pi*a*h_j'/k)."""
    m = len(hs)
    if k % 2 != 0 or m % 2 != 0:
        raise ParityViolation("needs even k and even m")
    if hs[0] % 2 == 0:
        raise ParityViolation("needs odd h1")
    _require_all_coprime(hs, k)
    invs = [mod_inverse(h, k) for h in hs]
    tt, ct = trig.tan_table(k, bits), trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            if 2 * a == k:
                continue
            p = tt[(a * invs[0]) % k - 1]
            for hp in invs[1:]:
                p = p * ct[(a * hp) % k - 1]
            acc += p
        sign = -1 if (m // 2 - 1) % 2 else 1
        return sign * acc / (mpf(2) ** m * k)


def hardy_B(hs, k: int, work_limit: int = DEFAULT_WORK_LIMIT) -> Fraction:
    """Zero-sum product sum weighted by (-1)^(a_1 h_1 + k*floor(a_1 h_1/k)),
    a_1 not = 0, with sawtooth factors on h_2..h_m (generalizes s1, s3, s5).

    Needs k odd.
    """
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    _require_all_coprime(hs, k)
    maps = [_floor_sign_dilated(hs[0], k)]
    maps += [periodic.PeriodicMap(tuple(sawtooth(Fraction(a * h, k)) for a in range(k)))
             for h in hs[1:]]
    return constrained_product_sum(maps, [1] * len(hs), work_limit)


def hardy_B_rhs(hs, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """((-1)^(m/2) / 2^(m-1) k) sum_a tan(pi*a*h_1'/k) prod cot(pi*a*h_j'/k)."""
    m = len(hs)
    if k % 2 == 0 or m % 2 != 0:
        raise ParityViolation("needs odd k and even m")
    _require_all_coprime(hs, k)
    invs = [mod_inverse(h, k) for h in hs]
    tt, ct = trig.tan_table(k, bits), trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            p = tt[(a * invs[0]) % k - 1]
            for hp in invs[1:]:
                p = p * ct[(a * hp) % k - 1]
            acc += p
        sign = -1 if (m // 2) % 2 else 1
        return sign * acc / (mpf(2) ** (m - 1) * k)


# m = 2 corollary forms (homogeneous multipliers, no inverses)


def alt_pair_sum(h1: int, h2: int, k: int) -> Fraction:
    """sum_{a=1}^{k-1} (-1)^a ((a h1/k)) ((a h2/k)); equals s2 for h1 = 1."""
    return sum((_sign(a) * sawtooth(Fraction(a * h1, k)) * sawtooth(Fraction(a * h2, k))
                for a in range(1, k)), Fraction(0))


def alt_pair_rhs(h1: int, h2: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """-(1/4k) sum_{a != k/2} tan(pi*a*h2/k) cot(pi*a*h1/k); k even, h1 odd."""
    if k % 2 != 0:
        raise ParityViolation("needs even k")
    if h1 % 2 == 0:
        raise ParityViolation("needs odd h1")
    _require_coprime(h1, k, "h1")
    _require_coprime(h2, k, "h2")
    tt, ct = trig.tan_table(k, bits), trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            if 2 * a == k:
                continue
            acc += tt[(a * h2) % k - 1] * ct[(a * h1) % k - 1]
        return -acc / (4 * k)


def floor_pair_sum(h1: int, h2: int, k: int, with_alt: bool) -> Fraction:
    """sum_{a=1}^{k-1} (-1)^(a + floor(a h1/k)) ((a h2/k)) when with_alt,
    else sum (-1)^floor(a h1/k) ((a h2/k))."""
    total = Fraction(0)
    for a in range(1, k):
        e = (a + (a * h1) // k) if with_alt else (a * h1) // k
        total += _sign(e) * sawtooth(Fraction(a * h2, k))
    return total


def tan_cot_pair_rhs(h1: int, h2: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """(1/2k) sum_{a=1}^{k-1} tan(pi*a*h2/k) cot(pi*a*h1/k); k odd."""
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    _require_coprime(h1, k, "h1")
    _require_coprime(h2, k, "h2")
    if k == 1:
        return mpf(0)
    tt, ct = trig.tan_table(k, bits), trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            acc += tt[(a * h2) % k - 1] * ct[(a * h1) % k - 1]
        return acc / (2 * k)


def alt_sign_pair_sum(h1: int, h2: int, k: int) -> int:
    """sum_{a=1}^{k-1} (-1)^((a h1 mod k) + (a h2 mod k)); equals s4(h1,k)
    for h2 = 1, h1 odd. The exponent reduces each product mod k separately
    (the form the transform derivation yields)."""
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    _require_coprime(h1, k, "h1")
    _require_coprime(h2, k, "h2")
    return sum(_sign((a * h1) % k + (a * h2) % k) for a in range(1, k))


def tan_pair_mean(h1: int, h2: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """(1/k) sum_{a=1}^{k-1} tan(pi*a*h1/k) tan(pi*a*h2/k); k odd."""
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    tt = trig.tan_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for a in range(1, k):
            acc += tt[(a * h1) % k - 1] * tt[(a * h2) % k - 1]
        return acc / k


def tan_square_sum(k: int, bits: int = DEFAULT_BITS) -> mpf:
    """sum_{a=1}^{k-1} tan^2(pi*a/k) for odd k (classically k^2 - k)."""
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    tt = trig.tan_table(k, bits)
    with workprec(guarded(bits, k)):
        return sum((t * t for t in tt), mpf(0))


def s1_half_range(h: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """(1/k) sum_{j=1}^{(k-1)/2} tan(pi*j/k) cot(pi*h*j/k); k odd, h even."""
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    if h % 2 != 0:
        raise ParityViolation("needs even h")
    _require_coprime(h, k)
    tt, ct = trig.tan_table(k, bits), trig.cot_table(k, bits)
    with workprec(guarded(bits, k)):
        acc = mpf(0)
        for j in range(1, (k - 1) // 2 + 1):
            acc += tt[j - 1] * ct[(j * h) % k - 1]
        return acc / k
