"""Continued fractions: expansion, convergents, and simultaneous approximation.

Surd inputs get their expansion computed exactly with the classical
(P + sqrt(D))/Q state recurrence; the eventually-periodic structure is
detected by state repetition and stored in closed form, so arbitrarily
deep partial quotients and convergent denominators are available without
re-expansion.  Everything else is expanded through certified interval
refinement and flagged as truncated or terminated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import InvalidSpec, NotFound, PrecisionExhausted
from . import exact
from .exact import (CertifiedValue, CFSpec, DigitStreamSpec, ExactValue,
                    QuadraticSurd, RationalSpec, RealSpec, SurdSpec,
                    bit_ladder, cmp_exact, exact_scaled_bounds, real_to_exact)


class CFExactness(Enum):
    CLOSED_PERIODIC = "closed-periodic"   # period detected exactly
    TERMINATED = "terminated"             # rational; expansion is complete
    TRUNCATED = "truncated"               # prefix only; do not extrapolate


@dataclass
class CFExpansion:
    """Partial quotients [a0; a1, a2, ...] with an exactness flag.

    For CLOSED_PERIODIC expansions `preperiod`/`period` describe the whole
    expansion and `quotient(i)` is valid for every i; otherwise only the
    materialised prefix is trustworthy.
    """

    quotients: List[int]
    exactness: CFExactness
    preperiod: tuple = ()
    period: tuple = ()

    def __post_init__(self):
        for a in self.quotients[1:]:
            if a < 1:
                raise InvalidSpec("partial quotients must be >= 1 beyond a0")

    @property
    def is_exact(self) -> bool:
        return self.exactness is not CFExactness.TRUNCATED

    def quotient(self, i: int) -> int:
        """a_i for arbitrary i (periodic expansions extend beyond the prefix)."""
        if i < len(self.quotients):
            return self.quotients[i]
        if self.exactness is CFExactness.CLOSED_PERIODIC:
            k = i - len(self.preperiod)
            return self.period[k % len(self.period)]
        raise InvalidSpec("quotient %d past the materialised prefix of an "
                          "inexact expansion" % i)

    def max_partial_quotient(self) -> int:
        """max a_i over i >= 1; only well-defined for exact expansions."""
        if self.exactness is CFExactness.CLOSED_PERIODIC:
            pool = list(self.preperiod[1:]) + list(self.period)
        elif self.exactness is CFExactness.TERMINATED:
            pool = self.quotients[1:]
        else:
            raise InvalidSpec("truncated expansion has no certified quotient bound")
        return max(pool) if pool else 0

    def __str__(self) -> str:
        if self.exactness is CFExactness.CLOSED_PERIODIC:
            body = ",".join(str(a) for a in self.preperiod[1:])
            per = "(%s)" % ",".join(str(a) for a in self.period)
            joiner = "," if body else ""
            return "[%d;%s%s%s]" % (self.preperiod[0], body, joiner, per)
        return "[%d;%s]" % (self.quotients[0],
                            ",".join(str(a) for a in self.quotients[1:]))


@dataclass(frozen=True)
class Convergent:
    n: int
    p: int
    q: int


def _expand_rational(value: Fraction) -> List[int]:
    p, q = value.numerator, value.denominator
    out = []
    while True:
        a, r = divmod(p, q)
        out.append(a)
        if r == 0:
            return out
        p, q = q, r


def _expand_surd(surd: QuadraticSurd) -> CFExpansion:
    """Exact expansion with period detection via the (P, Q) state recurrence."""
    if surd.is_rational:
        qs = _expand_rational(surd.to_fraction())
        return CFExpansion(qs, CFExactness.TERMINATED)
    # bring (a + b sqrt(d))/c into (P + sqrt(D))/Q with Q | D - P^2
    a, b, c, d = surd.a, surd.b, surd.c, surd.d
    if b > 0:
        P, D, Q = a, b * b * d, c
    else:
        P, D, Q = -a, b * b * d, -c
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    quotients = []
    seen = {}
    while True:
        state = (P, Q)
        if state in seen:
            start = seen[state]
            return CFExpansion(quotients[:],
                               CFExactness.CLOSED_PERIODIC,
                               preperiod=tuple(quotients[:start]),
                               period=tuple(quotients[start:]))
        seen[state] = len(quotients)
        ai = QuadraticSurd(P, 1, Q, D).floor_exact()
        quotients.append(ai)
        P = ai * Q - P
        Q = (D - P * P) // Q


def _expand_interval(lo: Fraction, hi: Fraction, n: int) -> Optional[List[int]]:
    """Quotients common to every value in [lo, hi]; None when ambiguous before
    n quotients are secured.  Exact-rational endpoints make this rigorous."""
    out = []
    while len(out) < n:
        flo, fhi = math.floor(lo), math.floor(hi)
        if flo != fhi:
            return None
        out.append(flo)
        lo, hi = lo - flo, hi - flo
        if lo == 0:
            return None if hi != 0 else out  # exactly rational inside: stop
        lo, hi = 1 / hi, 1 / lo
    return out


def cf_expand(x: RealSpec, n: int) -> CFExpansion:
    """First n partial quotients of x; exact (closed periodic / terminated)
    whenever x admits an exact expansion, truncated-with-flag otherwise."""
    if n < 1:
        raise InvalidSpec("need at least one quotient")
    if isinstance(x, RationalSpec):
        qs = _expand_rational(x.value)
        return CFExpansion(qs[:n] if len(qs) > n else qs, CFExactness.TERMINATED)
    if isinstance(x, SurdSpec):
        expansion = _expand_surd(x.surd)
        if expansion.exactness is CFExactness.CLOSED_PERIODIC:
            expansion.quotients = [expansion.quotient(i) for i in range(n)]
        return expansion
    if isinstance(x, CFSpec):
        if x.period:
            qs = [x.preperiod[i] if i < len(x.preperiod)
                  else x.period[(i - len(x.preperiod)) % len(x.period)]
                  for i in range(n)]
            return CFExpansion(qs, CFExactness.CLOSED_PERIODIC,
                               preperiod=x.preperiod, period=x.period)
        qs = list(x.preperiod)
        return CFExpansion(qs[:n] if len(qs) > n else qs, CFExactness.TERMINATED)
    if isinstance(x, DigitStreamSpec):
        base = x.base
        last = 0
        for bits in bit_ladder():
            last = bits
            n_digits = max(8, math.ceil(bits / math.log2(base)))
            s, den = exact._digit_stream_bounds(x, n_digits)
            qs = _expand_interval(Fraction(s, den), Fraction(s + 1, den), n)
            if qs is not None:
                return CFExpansion(qs, CFExactness.TRUNCATED)
        raise PrecisionExhausted("digit stream expansion did not stabilise", last)
    raise InvalidSpec("cannot expand %r" % (x,))


def convergents(cf: CFExpansion, n: int) -> List[Convergent]:
    """Convergents 1..n from the standard recurrence (q_0 = 1 seed internal)."""
    out = []
    p_prev, p_curr = 1, cf.quotient(0)       # p_{-1}, p_0
    q_prev, q_curr = 0, 1                    # q_{-1}, q_0
    for i in range(1, n + 1):
        a = cf.quotient(i)
        p_prev, p_curr = p_curr, a * p_curr + p_prev
        q_prev, q_curr = q_curr, a * q_curr + q_prev
        out.append(Convergent(i, p_curr, q_curr))
    return out


def _mat_mul(x, y):
    return (x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3])


def _mat_pow(m, e):
    r = (1, 0, 0, 1)
    while e:
        if e & 1:
            r = _mat_mul(r, m)
        m = _mat_mul(m, m)
        e >>= 1
    return r


def convergent_denominator(cf: CFExpansion, n: int) -> int:
    """q_n for arbitrary n; periodic expansions use matrix powering so that
    astronomically deep denominators stay cheap."""
    if n < 0:
        raise InvalidSpec("negative convergent index")
    if cf.exactness is not CFExactness.CLOSED_PERIODIC or n < len(cf.preperiod) + 8:
        # small or non-periodic: plain recurrence over materialised quotients
        q_prev, q_curr = 0, 1
        for i in range(1, n + 1):
            q_prev, q_curr = q_curr, cf.quotient(i) * q_curr + q_prev
        return q_curr
    pre_len = len(cf.preperiod)
    m = (1, 0, 0, 1)
    for i in range(pre_len):
        a = cf.quotient(i)
        m = _mat_mul(m, (a, 1, 1, 0))
    per = (1, 0, 0, 1)
    for a in cf.period:
        per = _mat_mul(per, (a, 1, 1, 0))
    remaining = n + 1 - pre_len
    reps, extra = divmod(remaining, len(cf.period))
    m = _mat_mul(m, _mat_pow(per, reps))
    for i in range(extra):
        m = _mat_mul(m, (cf.period[i], 1, 1, 0))
    return m[2]  # bottom-left entry of prod_{i<=n} [[a_i,1],[1,0]]


def nearest_int_dist_exact(value: ExactValue, m: int = 1) -> ExactValue:
    """||m * value|| as an exact object (Fraction or same-field surd)."""
    if isinstance(value, Fraction):
        v = value * m
        f = v - math.floor(v)
        return min(f, 1 - f)
    frac = value.scale(m).frac_exact()
    if frac.is_rational:
        f = frac.to_fraction()
        return min(f, 1 - f)
    half = QuadraticSurd.from_fraction(Fraction(1, 2))
    if frac.cmp_same_field(half) <= 0:
        return frac
    return QuadraticSurd.from_fraction(1) - frac


def simultaneous_approx(alphas: Sequence[RealSpec], eps, q_cap: int,
                        q_min: int = 1) -> int:
    """Smallest q in [q_min, q_cap] with ||q * alpha_i|| < eps for every i.

    The scan is certified: each candidate is screened with shared scaled
    integer arithmetic and only boundary-ambiguous candidates fall back to
    exact comparisons.  Raises NotFound when the cap is exhausted (the
    Dirichlet window guarantees existence for q_cap >= ceil(eps^-k))."""
    if not alphas:
        raise InvalidSpec("need at least one alpha")
    if q_cap < q_min:
        raise InvalidSpec("empty search range")
    eps_exact = exact.as_exact(eps)
    eps_sign = (eps_exact.sign() if isinstance(eps_exact, QuadraticSurd)
                else (eps_exact > 0) - (eps_exact < 0))
    if eps_sign <= 0:
        raise InvalidSpec("eps must be positive")
    exacts = []
    for a in alphas:
        val = real_to_exact(a)
        if val is None:
            raise InvalidSpec("simultaneous approximation needs exact alphas")
        exacts.append(val)

    bits = 128 + q_cap.bit_length()
    M = 1 << bits
    e_lo, e_hi = exact_scaled_bounds(eps_exact, bits)
    steps = []
    for val in exacts:
        lo, hi = exact_scaled_bounds(val, bits)
        steps.append((lo % M, hi - lo))
    toll = [s[0] * (q_min - 1) % M for s in steps]

    for q in range(q_min, q_cap + 1):
        ok = True
        for i, (step_lo, width) in enumerate(steps):
            # the accumulator must advance for every alpha at every q,
            # even after the candidate is already known to fail
            r = (toll[i] + step_lo) % M
            toll[i] = r
            if not ok:
                continue
            err = q * width
            if r + err >= M:  # enclosure wraps past the next integer
                d_hi = max(M - r, r + err - M)
            else:
                d_hi = min(r + err, M - r)
            d_lo = min(r, M - r - err)
            if d_hi < e_lo:
                continue
            if d_lo > e_hi:
                ok = False
                continue
            # ambiguous at this precision: settle exactly
            dist = nearest_int_dist_exact(exacts[i], q)
            if cmp_exact(dist, eps_exact) >= 0:
                ok = False
        if ok:
            return q
    raise NotFound("no q <= %d with all ||q*alpha_i|| < eps" % q_cap)
