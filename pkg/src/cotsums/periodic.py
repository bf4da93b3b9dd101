"""The DFT algebra on k-periodic maps.

A PeriodicMap stores one period of values, either exact (int/Fraction) or
high-precision mpf/mpc. Exact maps stay exact through convolution, dilation
and the brute-force product sums; values are promoted to mpc only at the
transform boundary. The transform is the direct O(k^2) sum: k is small at
verification scale, every k (including primes) must work, and the error
budget stays a simple k*2^(-bits) per output.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mpc, mpf, workprec

from . import trig
from .errors import NotCoprime, ParityViolation, PeriodMismatch, WorkLimitExceeded
from .exact import bernoulli_number, mod_inverse, periodic_bernoulli, sawtooth
from .hp import DEFAULT_BITS, guarded, is_exact, to_number

DEFAULT_WORK_LIMIT = 10 ** 8


class PeriodicMap:
    """A k-periodic function given by its values on 0..k-1."""

    __slots__ = ("values", "_parity")

    def __init__(self, values, parity="auto"):
        self.values = tuple(values)
        if not self.values:
            raise ValueError("period must be positive")
        self._parity = self._detect_parity() if parity == "auto" else parity

    @property
    def period(self) -> int:
        return len(self.values)

    @property
    def parity(self):
        return self._parity

    def __call__(self, n: int):
        return self.values[n % len(self.values)]

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def _detect_parity(self):
        # structural check: a sum/difference of exactly opposite/equal values
        # is exactly zero at any working precision, so this is safe for both
        # exact entries and symmetrically constructed numeric ones
        k = len(self.values)
        odd = even = True
        for a in range(k):
            va, vn = self.values[a], self.values[-a % k]
            if vn + va != 0:
                odd = False
            if vn - va != 0:
                even = False
        if odd:
            return "odd"
        if even:
            return "even"
        return None

    def __repr__(self):
        return f"PeriodicMap(k={self.period}, parity={self._parity})"


def _require_same_period(f: PeriodicMap, g: PeriodicMap) -> int:
    if f.period != g.period:
        raise PeriodMismatch(f"periods differ: {f.period} != {g.period}")
    return f.period


def dft(f: PeriodicMap, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """fhat(n) = sum_a f(a) e^(-2*pi*i*a*n/k), direct evaluation.

    The k roots of unity are built from one evaluation of e^(-2*pi*i/k)
    by repeated multiplication; the guard bits absorb the O(k) drift of
    that table plus the O(k) summation, keeping the final error within
    k*2^(2-bits) of the requested precision.
    """
    k = f.period
    with workprec(guarded(bits, 4 * k * k)):
        w = mpmath.expjpi(mpf(-2) / k) if k > 1 else mpc(1)
        roots = [mpc(1)]
        for _ in range(k - 1):
            roots.append(roots[-1] * w)
        vals = [to_number(v) for v in f.values]
        out = []
        for n in range(k):
            acc = mpc(0)
            for a in range(k):
                acc += vals[a] * roots[(a * n) % k]
            out.append(acc)
    return PeriodicMap(out, parity=None)


def involution_residual(f: PeriodicMap, bits: int = DEFAULT_BITS) -> mpf:
    """max_n |F(F(f))(n) - k*f(-n)|: the double-transform identity."""
    k = f.period
    ff = dft(dft(f, bits), bits)
    with workprec(guarded(bits, k)):
        return max(abs(ff(n) - k * to_number(f(-n))) for n in range(k))


def convolve(f: PeriodicMap, g: PeriodicMap) -> PeriodicMap:
    """Cauchy convolution (f*g)(n) = sum_a f(a) g(n-a); exact in, exact out."""
    k = _require_same_period(f, g)
    out = []
    for n in range(k):
        acc = 0
        for a in range(k):
            acc = acc + f.values[a] * g.values[(n - a) % k]
        out.append(acc)
    return PeriodicMap(out)


def dilate(f: PeriodicMap, h: int) -> PeriodicMap:
    """n -> f(n*h); h must be a unit mod k so the DFT dilation law holds."""
    k = f.period
    if gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) != 1")
    return PeriodicMap(tuple(f.values[(n * h) % k] for n in range(k)))


def constrained_product_sum(fs, hs, work_limit: int = DEFAULT_WORK_LIMIT):
    """sum of f_1(a_1 h_1) ... f_m(a_m h_m) over tuples with sum a_j = 0 (mod k).

    Brute force over (a_1, ..., a_{m-1}) with a_m determined mod k:
    O(k^(m-1)) products of m factors, exact when the maps are exact.
    """
    if not fs:
        raise ValueError("need at least one map")
    k = fs[0].period
    for f in fs[1:]:
        _require_same_period(fs[0], f)
    m = len(fs)
    if k ** (m - 1) > work_limit:
        raise WorkLimitExceeded(f"{k}^{m - 1} terms exceed the limit {work_limit}")
    tables = [tuple(f.values[(a * h) % k] for a in range(k)) for f, h in zip(fs, hs)]
    if m == 1:
        return tables[0][0]

    total = 0
    rest, last = tables[:-1], tables[-1]
    idx = [0] * (m - 1)
    while True:
        s = 0
        p = 1
        for j, a in enumerate(idx):
            p = p * rest[j][a]
            s += a
        total = total + p * last[-s % k]
        j = m - 2
        while j >= 0:
            idx[j] += 1
            if idx[j] < k:
                break
            idx[j] = 0
            j -= 1
        else:
            break
    return total


def spectral_product_sum(fs, hs, bits: int = DEFAULT_BITS) -> mpc:
    """(1/k) sum_a prod_j fhat_j(a * h_j'): the transform side of the same sum."""
    if not fs:
        raise ValueError("need at least one map")
    k = fs[0].period
    for f in fs[1:]:
        _require_same_period(fs[0], f)
    hats = [dft(f, bits) for f in fs]
    invs = [mod_inverse(h, k) for h in hs]
    with workprec(guarded(bits, k)):
        acc = mpc(0)
        for a in range(k):
            p = mpc(1)
            for fh, hp in zip(hats, invs):
                p *= fh((a * hp) % k)
            acc += p
        return acc / k


def parseval_sides(f1: PeriodicMap, f2: PeriodicMap, bits: int = DEFAULT_BITS):
    """Both sides of sum_a f1(a) f2(-a) = (1/k) sum_a f1hat(a) f2hat(a)."""
    k = _require_same_period(f1, f2)
    lhs = 0
    for a in range(k):
        lhs = lhs + f1.values[a] * f2.values[-a % k]
    h1, h2 = dft(f1, bits), dft(f2, bits)
    with workprec(guarded(bits, k)):
        rhs = sum((h1.values[a] * h2.values[a] for a in range(k)), mpc(0)) / k
    return lhs, rhs


def parseval_residual(f1: PeriodicMap, f2: PeriodicMap,
                      bits: int = DEFAULT_BITS) -> mpf:
    """|lhs - rhs| of the transform inner-product identity."""
    lhs, rhs = parseval_sides(f1, f2, bits)
    with workprec(guarded(bits)):
        return abs(to_number(lhs) - rhs)


def map_max_residual(f: PeriodicMap, g: PeriodicMap, bits: int = DEFAULT_BITS):
    """(max_n |f(n) - g(n)|, argmax n)."""
    k = _require_same_period(f, g)
    with workprec(guarded(bits, k)):
        worst, where = mpf(-1), 0
        for n in range(k):
            d = abs(to_number(f.values[n]) - to_number(g.values[n]))
            if d > worst:
                worst, where = d, n
        return worst, where


# ---------------------------------------------------------------------------
# the defining maps


def sawtooth_map(k: int) -> PeriodicMap:
    return PeriodicMap(tuple(sawtooth(Fraction(a, k)) for a in range(k)), parity="odd")


def bernoulli_map(r: int, k: int) -> PeriodicMap:
    return PeriodicMap(tuple(periodic_bernoulli(r, Fraction(a, k)) for a in range(k)))


def alt_sawtooth_map(k: int) -> PeriodicMap:
    """(-1)^n ((n/k)); k-periodic only for even k."""
    if k % 2 != 0:
        raise ParityViolation("(-1)^n ((n/k)) is k-periodic only for even k")
    vals = tuple((-1) ** a * sawtooth(Fraction(a, k)) for a in range(k))
    return PeriodicMap(vals, parity="odd")


def alt_sign_map(k: int) -> PeriodicMap:
    """(-1)^(n mod k) off multiples of k, 0 at them; k must be odd."""
    if k % 2 == 0:
        raise ParityViolation("the alternating-sign map needs odd k")
    vals = (Fraction(0),) + tuple(Fraction((-1) ** a) for a in range(1, k))
    return PeriodicMap(vals, parity="odd")


def delta_map(k: int) -> PeriodicMap:
    return PeriodicMap((Fraction(1),) + (Fraction(0),) * (k - 1))


def constant_map(c, k: int) -> PeriodicMap:
    return PeriodicMap((Fraction(c),) * k)


def random_rational_map(k: int, seed: int, span: int = 9) -> PeriodicMap:
    rng = random.Random(seed)
    vals = tuple(Fraction(rng.randint(-span, span), rng.randint(1, span))
                 for _ in range(k))
    return PeriodicMap(vals)


def random_odd_map(k: int, seed: int, span: int = 9) -> PeriodicMap:
    """Random exact odd map: free on 1..floor((k-1)/2), reflected, 0 elsewhere."""
    rng = random.Random(seed)
    vals = [Fraction(0)] * k
    for a in range(1, (k - 1) // 2 + 1):
        vals[a] = Fraction(rng.randint(-span, span), rng.randint(1, span))
        vals[k - a] = -vals[a]
    return PeriodicMap(vals, parity="odd")


def random_even_map(k: int, seed: int, span: int = 9) -> PeriodicMap:
    rng = random.Random(seed)
    vals = [Fraction(0)] * k
    vals[0] = Fraction(rng.randint(-span, span), rng.randint(1, span))
    for a in range(1, k // 2 + 1):
        vals[a] = Fraction(rng.randint(-span, span), rng.randint(1, span))
        vals[k - a] = vals[a]
    return PeriodicMap(vals, parity="even")


# ---------------------------------------------------------------------------
# closed-form transforms


def sawtooth_dft_map(k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """Transform of ((n/k)): (i/2) cot(pi*n/k) off multiples of k, 0 at them."""
    vals = [Fraction(0)]
    if k > 1:
        ct = trig.cot_table(k, bits)
        with workprec(guarded(bits, k)):
            vals += [mpc(0, 1) / 2 * ct[n - 1] for n in range(1, k)]
    return PeriodicMap(vals, parity=None)


def bernoulli_dft_map(r: int, k: int, bits: int = DEFAULT_BITS,
                      variant: str = "corrected") -> PeriodicMap:
    """Transform of B_r({n/k}): r k^(1-r) (i/2)^r cot^(r-1)(pi*n/k) off
    multiples, B_r k^(1-r) at them.

    That off-multiples formula is exact for r >= 2. For r = 1 the stated
    form misses a constant: the r = 1 map equals the sawtooth map minus
    (1/2) * indicator(k | n), whose transform is the constant -1/2, so the
    "corrected" variant adds -1/2 off the multiples branch (the at-multiples
    value -1/2 is already right). variant="paper" keeps the uncorrected
    closed form so its residual can be reported.
    """
    if variant not in ("paper", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    at_multiples = bernoulli_number(r) * Fraction(k) ** (1 - r)
    vals = [at_multiples]
    with workprec(guarded(bits, k)):
        scale = mpf(r) * mpf(k) ** (1 - r) * (mpc(0, 1) / 2) ** r
        shift = mpf(0)
        if r == 1 and variant == "corrected":
            shift = mpf(-1) / 2
        for n in range(1, k):
            vals.append(scale * trig.cot_deriv_at(r - 1, n, k, bits) + shift)
    return PeriodicMap(vals, parity=None)


def alt_sawtooth_dft_map(k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """Transform of (-1)^n ((n/k)) (k even): -(i/2) tan(pi*n/k), 0 at n = k/2."""
    if k % 2 != 0:
        raise ParityViolation("needs even k")
    tt = trig.tan_table(k, bits)
    vals = [mpc(0)]
    with workprec(guarded(bits, k)):
        for n in range(1, k):
            t = tt[n - 1]
            vals.append(mpc(0) if t is None else mpc(0, -1) / 2 * t)
    return PeriodicMap(vals, parity=None)


def alt_sign_dft_map(k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """Transform of the odd-k alternating-sign map: i tan(pi*n/k)."""
    if k % 2 == 0:
        raise ParityViolation("needs odd k")
    tt = trig.tan_table(k, bits)
    with workprec(guarded(bits, k)):
        vals = [mpc(0)] + [mpc(0, 1) * tt[n - 1] for n in range(1, k)]
    return PeriodicMap(vals, parity=None)


def closed_form_dft(kind: str, k: int, bits: int = DEFAULT_BITS, *,
                    r: int | None = None, s=None,
                    variant: str = "corrected") -> PeriodicMap:
    """Dispatch the closed-form transform of a named map family.

    kind: "sawtooth" | "bernoulli" (needs r) | "alt-sawtooth" (k even)
          | "alt-sign" (k odd) | "periodic-zeta" (needs s, Re s > 1).
    """
    if kind == "sawtooth":
        return sawtooth_dft_map(k, bits)
    if kind == "bernoulli":
        if r is None:
            raise ValueError("bernoulli transform needs the order r")
        return bernoulli_dft_map(r, k, bits, variant)
    if kind == "alt-sawtooth":
        return alt_sawtooth_dft_map(k, bits)
    if kind == "alt-sign":
        return alt_sign_dft_map(k, bits)
    if kind == "periodic-zeta":
        from .zeta import periodic_zeta_dft_map

        if s is None:
            raise ValueError("periodic-zeta transform needs s")
        return periodic_zeta_dft_map(s, k, bits)
    raise ValueError(f"unknown closed-form kind {kind!r}")


def defining_map(kind: str, k: int, bits: int = DEFAULT_BITS, *,
                 r: int | None = None, s=None) -> PeriodicMap:
    """The map whose transform closed_form_dft(kind, ...) claims to be."""
    if kind == "sawtooth":
        return sawtooth_map(k)
    if kind == "bernoulli":
        if r is None:
            raise ValueError("bernoulli map needs the order r")
        return bernoulli_map(r, k)
    if kind == "alt-sawtooth":
        return alt_sawtooth_map(k)
    if kind == "alt-sign":
        return alt_sign_map(k)
    if kind == "periodic-zeta":
        from .zeta import periodic_zeta_map

        if s is None:
            raise ValueError("periodic-zeta map needs s")
        return periodic_zeta_map(s, k, bits)
    raise ValueError(f"unknown map kind {kind!r}")
