"""Beta-expansions for Pisot bases and distances ||beta^n||.

Supported bases are integers >= 2 and real quadratic Pisot numbers
(algebraic integers beta > 1 whose conjugate satisfies |beta'| < 1,
both conditions checked exactly).  For quadratic bases the distances
||beta^n|| collapse to |beta'|^n as soon as |beta'|^n < 1/2, because
beta^n + beta'^n is a rational integer; the module exploits that
identity and also exposes the exact geometric tail index used to bound
sum_{n>=m} ||beta^n||.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .errors import InvalidSpec, PrecisionExhausted
from . import digitstreams, exact
from .contfrac import nearest_int_dist_exact
from .exact import (CertifiedValue, DigitStreamSpec, QuadraticSurd,
                    RationalSpec, RealSpec, SurdSpec, bit_ladder,
                    real_to_exact)


@dataclass(frozen=True)
class PisotBase:
    """A Pisot base: integer >= 2 (degree 1) or quadratic surd (degree 2)."""

    value: Union[int, QuadraticSurd]
    degree: int
    conjugate: Optional[QuadraticSurd] = None

    @staticmethod
    def from_value(v) -> "PisotBase":
        if isinstance(v, int):
            if v < 2:
                raise InvalidSpec("integer base must be >= 2")
            return PisotBase(v, 1)
        if isinstance(v, RealSpec):
            ex = real_to_exact(v)
            if isinstance(ex, Fraction):
                if ex.denominator == 1:
                    return PisotBase.from_value(int(ex))
                raise InvalidSpec("non-integer rational cannot be a Pisot base")
            v = ex
        if not isinstance(v, QuadraticSurd):
            raise InvalidSpec("unsupported base %r" % (v,))
        if v.is_rational:
            f = v.to_fraction()
            if f.denominator == 1:
                return PisotBase.from_value(int(f))
            raise InvalidSpec("non-integer rational cannot be a Pisot base")
        # algebraic integer: trace and norm must be rational integers
        trace = Fraction(2 * v.a, v.c)
        norm = Fraction(v.a * v.a - v.b * v.b * v.d, v.c * v.c)
        if trace.denominator != 1 or norm.denominator != 1:
            raise InvalidSpec("base %s is not an algebraic integer" % v)
        if (v - 1).sign() <= 0:
            raise InvalidSpec("Pisot base must exceed 1")
        conj = v.conjugate()
        if (conj - 1).sign() >= 0 or (conj + 1).sign() <= 0:
            raise InvalidSpec("conjugate of %s is not inside (-1, 1)" % v)
        return PisotBase(v, 2, conj)

    @property
    def ceiling(self) -> int:
        if self.degree == 1:
            return self.value
        return self.value.floor_exact() + 1  # irrational, so ceil = floor + 1

    def as_surd(self) -> QuadraticSurd:
        if self.degree == 1:
            return QuadraticSurd(self.value, 0, 1, 0)
        return self.value

    def __str__(self) -> str:
        return str(self.value)


GOLDEN_BASE = PisotBase.from_value(QuadraticSurd(1, 1, 2, 5))


@dataclass
class BetaExpansion:
    """Greedy digit expansion x = sum digits[i] * beta^-(i+1), digits in
    {0, ..., ceil(beta)-1}, with the admissible-tail property by construction."""

    digits: List[int]
    base: PisotBase

    def partial_value(self, n: Optional[int] = None) -> QuadraticSurd:
        """Exact value of the first n digits as an element of the base field."""
        n = len(self.digits) if n is None else n
        beta = self.base.as_surd()
        inv = beta.inverse()
        acc = QuadraticSurd(0, 0, 1, 0)
        for d in reversed(self.digits[:n]):
            acc = (acc + d) * inv
        return acc

    def tail_is_admissible(self) -> bool:
        """Check sum_{i>j} digits[i] beta^-i < beta^-j for every truncation j,
        exactly, over the materialised digits."""
        beta = self.base.as_surd()
        # scaled tail t_j = beta^j * sum_{i>j} d_i beta^-i must stay in [0, 1)
        t = self.partial_value()
        one = QuadraticSurd(1, 0, 1, 0)
        for j in range(len(self.digits)):
            if t.sign() < 0 or t.cmp_same_field(one) >= 0:
                return False
            t = t * beta - self.digits[j]
        return True


def _greedy_exact(x: exact.ExactValue, base: PisotBase, n_digits: int) -> List[int]:
    beta = base.as_surd()
    r = QuadraticSurd.from_fraction(x) if isinstance(x, Fraction) else x
    if beta.d and r.d and beta.d != r.d:
        raise InvalidSpec("value and base live in different quadratic fields")
    digits = []
    for _ in range(n_digits):
        r = r * beta
        d = r.floor_exact()
        digits.append(d)
        r = r - d
    return digits


def _greedy_interval(lo: Fraction, hi: Fraction, base: PisotBase,
                     n_digits: int) -> Optional[List[int]]:
    """Greedy digits shared by every value in [lo, hi]; None when the
    enclosure is too wide to pin a digit."""
    bs = base.as_surd()
    blo_n, bhi_n = bs.scaled_bounds(96)
    blo, bhi = Fraction(blo_n, 1 << 96), Fraction(bhi_n, 1 << 96)
    digits = []
    for _ in range(n_digits):
        plo, phi = lo * blo, hi * bhi
        dlo, dhi = math.floor(plo), math.floor(phi)
        if dlo != dhi:
            return None
        digits.append(dlo)
        lo, hi = plo - dlo, phi - dlo
    return digits


def beta_expand(x, base: PisotBase, n_digits: int) -> BetaExpansion:
    """First n_digits greedy digits of x in [0, 1) for the given base."""
    if n_digits < 0:
        raise InvalidSpec("digit count must be >= 0")
    if isinstance(x, (int, Fraction, QuadraticSurd)):
        spec = None
        ex = exact.as_exact(x)
    elif isinstance(x, RealSpec):
        spec = x
        ex = real_to_exact(x)
    else:
        raise InvalidSpec("beta_expand expects a RealSpec or exact value")

    if ex is not None:
        sign = ex.sign() if isinstance(ex, QuadraticSurd) else (ex > 0) - (ex < 0)
        above1 = (exact.cmp_exact(ex, Fraction(1)) >= 0)
        if sign < 0 or above1:
            raise InvalidSpec("beta_expand needs 0 <= x < 1")

    if base.degree == 1 and isinstance(spec, DigitStreamSpec) and spec.base == base.value:
        # the positional digits *are* the greedy digits (streams here never
        # end in an all-(b-1) tail)
        stream = digitstreams.make_stream(spec.source, spec.base, spec.seed)
        return BetaExpansion(list(stream.prefix(n_digits)), base)

    if ex is not None:
        if isinstance(ex, QuadraticSurd) and base.degree == 2 \
                and ex.d not in (0, base.value.d):
            raise InvalidSpec("value and base live in different quadratic fields")
        return BetaExpansion(_greedy_exact(ex, base, n_digits), base)

    # digit-stream input in a foreign base: certified greedy
    assert isinstance(spec, DigitStreamSpec)
    last = 0
    for bits in bit_ladder():
        last = bits
        nd = max(8, math.ceil((bits + 4 * n_digits) / math.log2(spec.base)))
        s, den = exact._digit_stream_bounds(spec, nd)
        digits = _greedy_interval(Fraction(s, den), Fraction(s + 1, den),
                                  base, n_digits)
        if digits is not None:
            return BetaExpansion(digits, base)
    raise PrecisionExhausted("digit stream too ambiguous for greedy digits", last)


def pisot_power_dist(base: PisotBase, n: int, tol,
                     max_bits: Optional[int] = None) -> CertifiedValue:
    """Certified ||beta^n||.

    Integer bases give 0 exactly.  Quadratic bases use the exact identity
    beta^n + beta'^n in Z whenever |beta'|^n < 1/2, so that ||beta^n|| is
    literally |beta'|^n; the small-n cases where |beta'|^n >= 1/2 fall back
    to direct evaluation of the power.
    """
    if n < 0:
        raise InvalidSpec("exponent must be >= 0")
    tol = Fraction(tol)
    if base.degree == 1:
        z = Fraction(0)
        return CertifiedValue(z, z, 0, exact=z)
    conj_pow = base.conjugate.pow(n)
    abs_conj = conj_pow.abs_exact()
    half = QuadraticSurd.from_fraction(Fraction(1, 2))
    if abs_conj.cmp_same_field(half) < 0:
        trace = base.value.pow(n) + conj_pow
        if not trace.is_rational or trace.to_fraction().denominator != 1:
            raise AssertionError("trace of beta^n must be a rational integer")
        return abs_conj.evaluate(tol, max_bits)
    dist = nearest_int_dist_exact(base.value.pow(n))
    if isinstance(dist, Fraction):
        return CertifiedValue(dist, Fraction(0), 0, exact=dist)
    return dist.evaluate(tol, max_bits)


def tail_index(base: PisotBase, eps) -> int:
    """Smallest m with sum_{n>=m} ||beta^n|| < eps / (ceil(beta) - 1),
    computed exactly from the geometric tail of |beta'|^n."""
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidSpec("eps must be positive")
    if base.degree == 1:
        return 0
    threshold = eps / (base.ceiling - 1)
    abs_conj = base.conjugate.abs_exact()
    one = QuadraticSurd.from_fraction(1)
    geom = (one - abs_conj).inverse()
    half = QuadraticSurd.from_fraction(Fraction(1, 2))
    # n0 = first exponent with |beta'|^n < 1/2; below it distances are direct
    n0 = 0
    p = one
    while p.cmp_same_field(half) >= 0:
        n0 += 1
        p = p * abs_conj
    head = [nearest_int_dist_exact(base.value.pow(k)) for k in range(n0)]
    thr = QuadraticSurd.from_fraction(threshold)

    def tail_sum(m: int) -> QuadraticSurd:
        s = abs_conj.pow(max(m, n0)) * geom
        for k in range(m, n0):
            h = head[k]
            s = s + (h if isinstance(h, Fraction) else Fraction(0)) \
                if isinstance(h, Fraction) else s + h
        return s

    m = 0
    while True:
        if tail_sum(m).cmp_same_field(thr) < 0:
            return m
        m += 1


def zero_run_find(digits, run_len: int, scan_cap: int) -> Optional[int]:
    """First 1-based index where run_len consecutive zero digits begin, or
    None when no run fits within the first scan_cap digits.  Accepts a
    digit stream, a BetaExpansion, or any digit sequence."""
    if isinstance(digits, digitstreams.DigitStream):
        return digitstreams.find_zero_run(digits, run_len, scan_cap)
    if isinstance(digits, BetaExpansion):
        seq: Sequence[int] = digits.digits
    else:
        seq = list(digits)
    if run_len < 1:
        raise InvalidSpec("run length must be >= 1")
    if scan_cap < run_len:
        raise InvalidSpec("scan cap shorter than the requested run")
    buf = bytes(seq[:scan_cap])
    pos = buf.find(bytes(run_len))
    return pos + 1 if pos != -1 else None


def seeded_admissible_digits(base: PisotBase, seed: int, n_digits: int) -> List[int]:
    """Greedy digits of a seeded pseudo-random real in [0, 1).

    Being an actual greedy expansion, the digit block is admissible by
    construction.  The underlying number is *not* claimed to be normal to
    base beta; it merely gives a reproducible generic-looking input.
    """
    rng = random.Random(seed)
    bits = max(256, int(n_digits * 4 * math.log2(float(base.as_surd()) + 1)) + 64)
    while True:
        s = rng.getrandbits(bits)
        den = 1 << bits
        digits = _greedy_interval(Fraction(s, den), Fraction(s + 1, den),
                                  base, n_digits)
        if digits is not None:
            return digits
        bits *= 2
