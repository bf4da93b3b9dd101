"""Hurwitz zeta, periodic zeta, digamma, generalized Euler constants, and
the finite identities tying them to periodic maps.

The zeta-side identities are implemented exactly on their stated domain
Re s > 1 (plus the closed-form s = 1 branch of the periodic zeta); analytic
continuation is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

import mpmath
from mpmath import mpc, mpf, workprec

from . import trig
from .errors import (ConvergenceDomain, NonPositiveArgument, NotCoprime,
                     NotOdd, OutOfRange)
from .exact import bernoulli_number, frac
from .hp import DEFAULT_BITS, guarded, to_number
from .periodic import PeriodicMap, dft, map_max_residual

_EM_GUARD = 32


def _to_s(s, bits: int = DEFAULT_BITS) -> mpc:
    """Normalize an exponent argument (int/Fraction/str/complex/mp) to mpc,
    converting at full working precision."""
    with workprec(guarded(bits)):
        if isinstance(s, str):
            s = s.strip().replace("i", "j")
            if "j" in s:
                z = complex(s if s[-1] == "j" else s + "j")
                return mpc(z.real, z.imag)
            return mpc(mpmath.mpmathify(Fraction(s)))
        if isinstance(s, Fraction):
            return mpc(mpmath.mpmathify(s))
        if isinstance(s, complex):
            return mpc(s.real, s.imag)
        return mpc(s)


def hurwitz_zeta(s, x, bits: int = DEFAULT_BITS):
    """zeta(s, x) = sum_{n>=0} (n+x)^(-s) for Re s > 1, 0 < x <= 1.

    Euler-Maclaurin: direct sum of the first M terms, the integral and
    half-term corrections at the cut, then Bernoulli corrections of
    increasing order until the first omitted term falls under the target
    2^-(bits+8); M doubles if the asymptotic tail stalls first. Returns
    mpf for real s, mpc otherwise.
    """
    sc = _to_s(s, bits)
    if not sc.real > 1:
        raise ConvergenceDomain(f"needs Re s > 1, got Re s = {sc.real}")
    xq = Fraction(x)
    if not 0 < xq <= 1:
        raise OutOfRange(f"x must lie in (0, 1], got {xq}")
    real_s = sc.imag == 0
    wp = guarded(bits, 0) + _EM_GUARD
    with workprec(wp):
        se = sc.real if real_s else sc
        xv = mpmath.mpmathify(xq)
        target = mpf(2) ** -(bits + 8)
        m_cut = max(16, int(0.4 * wp), int(2 * abs(sc.imag)))
        for _ in range(8):
            value = _em_tail(se, xv, m_cut, target)
            if value is not None:
                for n in range(m_cut):
                    value += (n + xv) ** -se
                return value
            m_cut *= 2
        raise ConvergenceDomain("Euler-Maclaurin failed to converge")  # pragma: no cover


def _em_tail(s, x, m_cut, target):
    """sum_{n>=M} (n+x)^(-s) via Euler-Maclaurin, or None if J-growth stalls."""
    w = m_cut + x
    total = w ** (1 - s) / (s - 1) + w ** -s / 2
    rising = s
    wpow = w ** (-s - 1)
    w_m2 = 1 / (w * w)
    prev = None
    j = 1
    while 2 * j < 8 * mpmath.mp.prec:
        coeff = Fraction(bernoulli_number(2 * j), factorial(2 * j))
        term = mpmath.mpmathify(coeff) * rising * wpow
        total += term
        size = abs(term)
        if size < target:
            return total
        if prev is not None and size >= prev:
            return None
        prev = size
        rising = rising * (s + 2 * j - 1) * (s + 2 * j)
        wpow *= w_m2
        j += 1
    return None  # pragma: no cover


def riemann_zeta(s, bits: int = DEFAULT_BITS):
    return hurwitz_zeta(s, Fraction(1), bits)


def digamma(x, bits: int = DEFAULT_BITS) -> mpf:
    """psi(x) for rational x > 0: recurrence shift to the asymptotic range,
    then the Bernoulli-coefficient expansion with first-omitted-term bound."""
    xq = Fraction(x)
    if xq <= 0:
        raise NonPositiveArgument(f"digamma needs x > 0, got {xq}")
    wp = guarded(bits, 0) + _EM_GUARD
    with workprec(wp):
        target = mpf(2) ** -(bits + 8)
        m_cut = max(16, int(0.4 * wp))
        xv = mpmath.mpmathify(xq)
        for _ in range(8):
            shift = max(0, m_cut - int(xq))
            shifted = mpf(0)
            for i in range(shift):
                shifted += 1 / (xv + i)
            w = xv + shift
            value = mpmath.log(w) - 1 / (2 * w)
            w_m2 = 1 / (w * w)
            wpow = w_m2
            prev = None
            j = 1
            ok = False
            while 2 * j < 8 * wp:
                term = mpmath.mpmathify(Fraction(bernoulli_number(2 * j), 2 * j)) * wpow
                value -= term
                size = abs(term)
                if size < target:
                    ok = True
                    break
                if prev is not None and size >= prev:
                    break
                prev = size
                wpow *= w_m2
                j += 1
            if ok:
                return value - shifted
            m_cut *= 2
        raise ConvergenceDomain("digamma expansion failed to converge")  # pragma: no cover


def euler_gamma_rk(r: int, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """gamma(r,k) = lim (sum_{n<=x, n=r mod k} 1/n - log(x)/k)
    = -(log k + psi(r/k)) / k, for 1 <= r <= k."""
    if not 1 <= r <= k:
        raise OutOfRange(f"need 1 <= r <= k, got r={r}, k={k}")
    with workprec(guarded(bits, k)):
        return -(mpmath.log(k) + digamma(Fraction(r, k), bits)) / k


def euler_gamma_partial(r: int, k: int, x: int) -> float:
    """Float partial-sum oracle for gamma(r,k): the definitional limit cut
    at n <= x (O(1/x) from the limit)."""
    import math

    first = r if r >= 1 else r + k
    acc = math.fsum(1.0 / n for n in range(first, x + 1, k))
    return acc - math.log(x) / k


@lru_cache(maxsize=64)
def euler_gamma_table(k: int, bits: int = DEFAULT_BITS) -> tuple:
    """(gamma(1,k), ..., gamma(k,k))."""
    return tuple(euler_gamma_rk(r, k, bits) for r in range(1, k + 1))


def gamma_map(k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """The k-periodic map r -> gamma(r,k) with representatives 1..k."""
    table = euler_gamma_table(k, bits)
    return PeriodicMap(tuple(table[(a - 1) % k] for a in range(k)), parity=None)


def periodic_zeta(s, x, bits: int = DEFAULT_BITS):
    """F(s, x) = sum_{n>=1} e^(2*pi*i*n*x) / n^s for rational x.

    For Re s > 1 and x = p/q this is assembled from the finite Hurwitz
    combination F(s, p/q) = q^(-s) sum_{a=1}^{q} e^(2*pi*i*a*p/q) zeta(s, a/q),
    which is exact on the stated domain and avoids the conditionally
    convergent direct series. For s = 1 and non-integer x the closed form
    -log(2 sin(pi {x})) + i*pi*(1/2 - {x}) is used.
    """
    sc = _to_s(s, bits)
    xq = frac(Fraction(x))
    if sc == 1:
        if xq == 0:
            raise ConvergenceDomain("F(1, x) diverges at integer x")
        with workprec(guarded(bits, xq.denominator)):
            xv = mpmath.mpmathify(xq)
            return mpc(-mpmath.log(2 * mpmath.sinpi(xv)),
                       mpmath.pi * (mpf(1) / 2 - xv))
    if not sc.real > 1:
        raise ConvergenceDomain(f"needs Re s > 1 (or s = 1 off integers), "
                                f"got Re s = {sc.real}")
    q, p = xq.denominator, xq.numerator
    if q == 1:
        return mpc(riemann_zeta(sc, bits))
    with workprec(guarded(bits, q)):
        acc = mpc(0)
        for a in range(1, q + 1):
            phase = mpmath.expjpi(mpf(2 * ((a * p) % q)) / q)
            acc += phase * hurwitz_zeta(sc, Fraction(a, q), bits)
        return acc * mpf(q) ** -sc


def periodic_zeta_map(s, k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """n -> F(s, n/k) as a k-periodic map; one Hurwitz table, k phase sums."""
    sc = _to_s(s, bits)
    if not sc.real > 1:
        raise ConvergenceDomain(f"needs Re s > 1, got Re s = {sc.real}")
    with workprec(guarded(bits, k * k)):
        hz = [hurwitz_zeta(sc, Fraction(a, k), bits) for a in range(1, k + 1)]
        scale = mpf(k) ** -sc
        roots = [mpmath.expjpi(mpf(2 * j) / k) for j in range(k)]
        vals = []
        for n in range(k):
            acc = mpc(0)
            for a in range(1, k + 1):
                acc += roots[(a * n) % k] * hz[a - 1]
            vals.append(acc * scale)
    return PeriodicMap(vals, parity=None)


def periodic_zeta_dft_map(s, k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """Stated transform of n -> F(s, n/k): k^(1-s) zeta(s, {n/k}) off
    multiples of k and k^(1-s) zeta(s) at them."""
    sc = _to_s(s, bits)
    if not sc.real > 1:
        raise ConvergenceDomain(f"needs Re s > 1, got Re s = {sc.real}")
    with workprec(guarded(bits, k)):
        scale = mpf(k) ** (1 - sc)
        vals = [scale * riemann_zeta(sc, bits)]
        for n in range(1, k):
            vals.append(scale * hurwitz_zeta(sc, Fraction(n, k), bits))
    return PeriodicMap(vals, parity=None)


def periodic_zeta_dft_residual(s, k: int, bits: int = DEFAULT_BITS) -> mpf:
    """max_n | dft(n -> F(s, n/k))(n) - stated closed form |."""
    lhs = dft(periodic_zeta_map(s, k, bits), bits)
    rhs = periodic_zeta_dft_map(s, k, bits)
    return map_max_residual(lhs, rhs, bits)[0]


def mikolas_pair(s1, s2, h1: int, h2: int, k: int, bits: int = DEFAULT_BITS):
    """Both sides of the Hurwitz-zeta analogue of the Dedekind sum:

    lhs = sum_{a=1}^{k-1} zeta(s1, {a h1/k}) zeta(s2, {a h2/k})
    rhs = (k^(s1+s2-1) - 1) zeta(s1) zeta(s2)
          + k^(s1+s2-1) sum_{a=1}^{k-1} F(s1, a h2/k) F(s2, -a h1/k)
    """
    sc1, sc2 = _to_s(s1, bits), _to_s(s2, bits)
    if not (sc1.real > 1 and sc2.real > 1):
        raise ConvergenceDomain("needs Re s1 > 1 and Re s2 > 1")
    if gcd(h1, k) != 1 or gcd(h2, k) != 1:
        raise NotCoprime(f"h1, h2 must be units mod {k}")
    with workprec(guarded(bits, k)):
        lhs = mpc(0)
        for a in range(1, k):
            x1 = frac(Fraction(a * h1, k))
            x2 = frac(Fraction(a * h2, k))
            lhs += hurwitz_zeta(sc1, x1, bits) * hurwitz_zeta(sc2, x2, bits)
        kp = mpf(k) ** (sc1 + sc2 - 1)
        rhs = (kp - 1) * riemann_zeta(sc1, bits) * riemann_zeta(sc2, bits)
        if k > 1:
            f1 = periodic_zeta_map(sc1, k, bits)
            f2 = periodic_zeta_map(sc2, k, bits)
            acc = mpc(0)
            for a in range(1, k):
                acc += f1.values[(a * h2) % k] * f2.values[(-a * h1) % k]
            rhs += kp * acc
        return lhs, rhs


# ---------------------------------------------------------------------------
# S(f) = sum f(r)/r for odd k-periodic maps: the four finite evaluations


@dataclass(frozen=True)
class SeriesForms:
    """Finite evaluations of S(f); all four agree for odd k-periodic f."""

    cot_form: object       # (pi/2k) sum f(r) cot(pi r/k)
    spectral_form: object  # -(pi i/k^2) sum r fhat(r)
    lehmer_form: object    # sum f(r) gamma(r,k)
    zeta_form: object      # -(1/k) sum fhat(r) F(1, -r/k)

    def all_forms(self):
        return (self.cot_form, self.spectral_form, self.lehmer_form,
                self.zeta_form)

    def max_pairwise_residual(self, bits: int = DEFAULT_BITS) -> mpf:
        vals = self.all_forms()
        with workprec(guarded(bits, 4)):
            worst = mpf(0)
            for i in range(len(vals)):
                for j in range(i + 1, len(vals)):
                    d = abs(to_number(vals[i]) - to_number(vals[j]))
                    if d > worst:
                        worst = d
            return worst


def _check_odd(f: PeriodicMap, bits: int) -> None:
    if f.parity == "odd":
        return
    k = f.period
    if f.exact:
        raise NotOdd("map is not odd over its period")
    with workprec(guarded(bits, k)):
        tol = mpf(2) ** -(bits // 2)
        for a in range(k):
            if abs(to_number(f.values[a]) + to_number(f.values[-a % k])) > tol:
                raise NotOdd(f"map is not odd at n = {a}")


def series_forms(f: PeriodicMap, bits: int = DEFAULT_BITS) -> SeriesForms:
    """Evaluate S(f) = sum_{r>=1} f(r)/r four independent ways.

    Requires f odd (which forces the zero period-sum that convergence of
    S(f) needs); a non-odd map is refused.
    """
    _check_odd(f, bits)
    k = f.period
    fhat = dft(f, bits)
    with workprec(guarded(bits, k)):
        pi = mpmath.pi
        ct = trig.cot_table(k, bits) if k > 1 else ()
        cot_acc = mpf(0)
        for r in range(1, k):
            cot_acc += to_number(f.values[r]) * ct[r - 1]
        cot_form = pi / (2 * k) * cot_acc

        spec_acc = mpc(0)
        for r in range(1, k):
            spec_acc += r * fhat.values[r]
        spectral_form = -pi * mpc(0, 1) / (k * k) * spec_acc

        gtab = euler_gamma_table(k, bits)
        leh_acc = mpf(0)
        for r in range(1, k + 1):
            leh_acc += to_number(f.values[r % k]) * gtab[r - 1]
        lehmer_form = leh_acc

        zeta_acc = mpc(0)
        for r in range(1, k):
            zeta_acc += fhat.values[r] * periodic_zeta(1, Fraction(-r, k), bits)
        zeta_form = -zeta_acc / k

    return SeriesForms(cot_form, spectral_form, lehmer_form, zeta_form)


def series_partial(f: PeriodicMap, terms: int, bits: int = DEFAULT_BITS):
    """Truncated S(f): sum_{r=1}^{N} f(r)/r, plus the Abel tail bound
    k * max|f| / N."""
    k = f.period
    with workprec(guarded(bits, terms)):
        acc = mpf(0)
        vals = [to_number(v) for v in f.values]
        for r in range(1, terms + 1):
            v = vals[r % k]
            if v:
                acc += v / r
        bound = k * max(abs(v) for v in vals) / terms
        return acc, bound


def gamma_dft_map(k: int, bits: int = DEFAULT_BITS) -> PeriodicMap:
    """Stated transform of r -> gamma(r,k): F(1, -n/k) off multiples of k,
    Euler's constant at them."""
    with workprec(guarded(bits, k)):
        vals = [+mpmath.euler]
        for n in range(1, k):
            vals.append(periodic_zeta(1, Fraction(-n, k), bits))
    return PeriodicMap(vals, parity=None)


def gamma_dft_residual(k: int, bits: int = DEFAULT_BITS) -> mpf:
    """max_n | dft(r -> gamma(r,k))(n) - stated closed form |."""
    lhs = dft(gamma_map(k, bits), bits)
    return map_max_residual(lhs, gamma_dft_map(k, bits), bits)[0]
