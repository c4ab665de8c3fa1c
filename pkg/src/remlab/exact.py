"""Certified arithmetic over exact real-number descriptors.

The library never trusts floating point.  Every real number enters as an
exact descriptor (`RealSpec`): a rational, a quadratic surd (a + b*sqrt(d))/c,
a continued fraction with explicit period, or a digit stream in an integer
base.  Operations that need a numeric value produce a `CertifiedValue`:
a rational midpoint together with a rational radius that provably encloses
the true value.

The workhorse is integer arithmetic on scaled square roots:

    sqrt_scaled(d, bits) = floor(sqrt(d) * 2**bits)

which brackets sqrt(d) between two consecutive dyadic rationals.  Floors
and fractional parts of surds are computed exactly (one integer square
root plus one sign test), so the integer part of m*x never suffers
rounding error regardless of how large m is.

Precision policy: evaluation starts at 128 bits and doubles on failure
until a cap is reached (default 16384 bits, overridable globally or per
call), at which point `PrecisionExhausted` is raised.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import InvalidSpec, PrecisionExhausted

DEFAULT_START_BITS = 128
DEFAULT_MAX_BITS = 16384

_max_bits = DEFAULT_MAX_BITS

# Trial factorisation bound for radicand normalisation; cofactors that are
# neither 1, prime, nor a perfect square after this point are rejected.
_TRIAL_LIMIT = 10 ** 6


def get_max_bits() -> int:
    return _max_bits


def set_max_bits(bits: int) -> None:
    """Override the global precision cap (see also REMLAB_MAX_BITS in the CLI)."""
    global _max_bits
    if bits < DEFAULT_START_BITS:
        raise ValueError("precision cap below the starting precision")
    _max_bits = bits


def bit_ladder(cap: Optional[int] = None, start: int = DEFAULT_START_BITS) -> Iterator[int]:
    """Yield the escalation ladder start, 2*start, ... up to and including cap."""
    cap = _max_bits if cap is None else cap
    bits = start
    while True:
        yield bits
        if bits >= cap:
            return
        bits = min(2 * bits, cap)


_SQRT_CACHE: dict = {}


def sqrt_scaled(d: int, bits: int) -> int:
    """floor(sqrt(d) * 2**bits), cached.  Exact bracket: s <= sqrt(d)*2^bits < s+1."""
    key = (d, bits)
    s = _SQRT_CACHE.get(key)
    if s is None:
        s = math.isqrt(d << (2 * bits))
        _SQRT_CACHE[key] = s
    return s


def sign_linear_in_sqrt(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d) for squarefree d >= 0 (so b*sqrt(d) is
    irrational unless b == 0 or d == 0)."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 against b^2 d on the side of the positive term
    lhs = a * a
    rhs = b * b * d
    if a > 0:  # a > 0, b < 0: sign = sign(a - |b| sqrt d)
        return 1 if lhs > rhs else -1  # equality impossible, d squarefree > 1
    return 1 if rhs > lhs else -1


def _squarefree_split(d: int) -> tuple:
    """Write d = s^2 * r with r squarefree.  Rejects cofactors whose
    squarefreeness cannot be certified without deep factoring."""
    if d < 0:
        raise InvalidSpec("negative radicand")
    if d in (0, 1):
        return 1, d
    s, r, m = 1, 1, d
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    if m == 1:
        return s, r
    t = math.isqrt(m)
    if t * t == m:
        return s * t, r
    if m <= _TRIAL_LIMIT * _TRIAL_LIMIT:
        # no factor <= 1e6 and not a square => prime
        return s, r * m
    try:
        from sympy import isprime
    except ImportError:  # pragma: no cover
        raise InvalidSpec("radicand cofactor %d too large to certify squarefree" % m)
    if isprime(m):
        return s, r * m
    raise InvalidSpec("radicand cofactor %d requires deep factoring" % m)


@dataclass(frozen=True)
class QuadraticSurd:
    """Canonical exact representation of (a + b*sqrt(d)) / c.

    Invariants after construction: c > 0, gcd(a, b, c) = 1, d squarefree,
    and d == 0 iff b == 0 (the rational case).  Two surds are equal iff
    their canonical fields are identical.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = int(self.a), int(self.b), int(self.c), int(self.d)
        if c == 0:
            raise InvalidSpec("zero denominator")
        if c < 0:
            a, b, c = -a, -b, -c
        if b == 0:
            d = 0
        else:
            s, r = _squarefree_split(d)
            b *= s
            d = r
            if d == 1:
                a, b, d = a + b, 0, 0
            elif d == 0:
                b = 0
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    # --- predicates -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise InvalidSpec("irrational surd has no exact rational value")
        return Fraction(self.a, self.c)

    @staticmethod
    def from_fraction(f) -> "QuadraticSurd":
        f = Fraction(f)
        return QuadraticSurd(f.numerator, 0, f.denominator, 0)

    # --- exact arithmetic (closed within one quadratic field) ------------

    def _join_d(self, other: "QuadraticSurd") -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise InvalidSpec("surd arithmetic across distinct radicands")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_fraction(other)
        d = self._join_d(other)
        return QuadraticSurd(
            self.a * other.c + other.a * self.c,
            self.b * other.c + other.b * self.c,
            self.c * other.c,
            d,
        )

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_fraction(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_fraction(other)
        d = self._join_d(other)
        return QuadraticSurd(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            self.c * other.c,
            d,
        )

    def inverse(self) -> "QuadraticSurd":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero surd")
        return QuadraticSurd(self.a * self.c, -self.b * self.c, norm, self.d)

    def scale(self, m) -> "QuadraticSurd":
        m = Fraction(m)
        return QuadraticSurd(self.a * m.numerator, self.b * m.numerator,
                             self.c * m.denominator, self.d)

    def pow(self, n: int) -> "QuadraticSurd":
        if n < 0:
            return self.pow(-n).inverse()
        result = QuadraticSurd(1, 0, 1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.c, self.d)

    # --- exact order operations ------------------------------------------

    def sign(self) -> int:
        return sign_linear_in_sqrt(self.a, self.b, self.d)

    def cmp_same_field(self, other: "QuadraticSurd") -> int:
        """Exact three-way comparison; requires compatible radicands."""
        d = self._join_d(other)
        return sign_linear_in_sqrt(
            self.a * other.c - other.a * self.c,
            self.b * other.c - other.b * self.c,
            d,
        )

    def floor_exact(self) -> int:
        """floor((a + b*sqrt(d))/c) using one integer square root."""
        a, b, c, d = self.a, self.b, self.c, self.d
        if b == 0:
            return a // c
        s = math.isqrt(b * b * d)
        # floor(b*sqrt(d)): s for b > 0, -s-1 for b < 0 (b^2 d never a square)
        t = a + (s if b > 0 else -s - 1)
        f = t // c
        # true value lies in [t, t+1); one boundary test settles the floor
        if sign_linear_in_sqrt((f + 1) * c - a, -b, d) <= 0:
            f += 1
        return f

    def frac_exact(self) -> "QuadraticSurd":
        """Exact fractional part, a surd in [0, 1)."""
        f = self.floor_exact()
        return QuadraticSurd(self.a - f * self.c, self.b, self.c, self.d)

    def abs_exact(self) -> "QuadraticSurd":
        return -self if self.sign() < 0 else self

    # --- certified evaluation --------------------------------------------

    def scaled_bounds(self, bits: int) -> tuple:
        """Integers (lo, hi) with lo <= value * 2^bits <= hi and
        hi - lo <= |b| / c + 2."""
        a, b, c, d = self.a, self.b, self.c, self.d
        if b == 0:
            num = a << bits
            lo = num // c
            return lo, lo + (1 if num % c else 0)
        s = sqrt_scaled(d, bits)
        if b > 0:
            n_lo, n_hi = (a << bits) + b * s, (a << bits) + b * s + b
        else:
            n_lo, n_hi = (a << bits) + b * s + b, (a << bits) + b * s
        return n_lo // c, -((-n_hi) // c)

    def evaluate(self, tol, max_bits: Optional[int] = None) -> "CertifiedValue":
        """Certified enclosure with radius < tol."""
        tol = Fraction(tol)
        if tol <= 0:
            raise InvalidSpec("tolerance must be positive")
        if self.b == 0:
            return CertifiedValue(Fraction(self.a, self.c), Fraction(0), 0, exact=self)
        last_bits = 0
        for bits in bit_ladder(max_bits):
            last_bits = bits
            lo, hi = self.scaled_bounds(bits)
            width = Fraction(hi - lo, 1 << bits)
            if width < 2 * tol:
                mid = Fraction(lo + hi, 2 << bits)
                return CertifiedValue(mid, width / 2, bits, exact=self)
        raise PrecisionExhausted("surd evaluation did not certify", last_bits)

    def __float__(self) -> float:
        lo, hi = self.scaled_bounds(96)
        return (lo + hi) / 2.0 / (1 << 96)

    def __str__(self) -> str:
        return "(%d%+d*sqrt(%d))/%d" % (self.a, self.b, self.d, self.c)


@dataclass(frozen=True)
class CertifiedValue:
    """A real value pinned to within `radius` of `midpoint`.

    `exact`, when present, is the exact object (Fraction or QuadraticSurd)
    the enclosure was derived from; comparisons fall back to it whenever
    intervals overlap.
    """

    midpoint: Fraction
    radius: Fraction
    prec_bits: int
    exact: Union[Fraction, QuadraticSurd, None] = None

    @property
    def lo(self) -> Fraction:
        return self.midpoint - self.radius

    @property
    def hi(self) -> Fraction:
        return self.midpoint + self.radius

    def __float__(self) -> float:
        return float(self.midpoint)

    def refined(self, tol, max_bits: Optional[int] = None) -> "CertifiedValue":
        tol = Fraction(tol)
        if self.radius < tol:
            return self
        if isinstance(self.exact, QuadraticSurd):
            return self.exact.evaluate(tol, max_bits)
        if isinstance(self.exact, Fraction):
            return CertifiedValue(self.exact, Fraction(0), self.prec_bits, exact=self.exact)
        raise PrecisionExhausted("enclosure has no exact handle to refine", self.prec_bits)


ExactValue = Union[Fraction, QuadraticSurd]


def as_exact(value) -> ExactValue:
    """Coerce ints, Fractions, floats (exact binary value), certified values
    with exact handles, and surds into an exact object."""
    if isinstance(value, QuadraticSurd):
        return value.to_fraction() if value.is_rational else value
    if isinstance(value, CertifiedValue):
        if value.exact is None:
            raise InvalidSpec("certified value carries no exact handle")
        return as_exact(value.exact)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise InvalidSpec("cannot interpret %r as an exact value" % (value,))


def exact_scaled_bounds(value: ExactValue, bits: int) -> tuple:
    """(lo, hi) integers with lo <= value*2^bits <= hi, for Fraction or surd."""
    if isinstance(value, QuadraticSurd):
        return value.scaled_bounds(bits)
    num = value.numerator << bits
    lo = num // value.denominator
    return lo, lo + (1 if num % value.denominator else 0)


def cmp_exact(x: ExactValue, y: ExactValue, max_bits: Optional[int] = None) -> int:
    """Exact three-way comparison of two exact values, including surds over
    distinct radicands (resolved by interval refinement; equality across
    distinct quadratic fields is impossible, so refinement terminates)."""
    xs = isinstance(x, QuadraticSurd)
    ys = isinstance(y, QuadraticSurd)
    if not xs and not ys:
        return (x > y) - (x < y)
    if xs and ys and (x.d == y.d or x.d == 0 or y.d == 0):
        return x.cmp_same_field(y)
    if xs and not ys:
        return (x - y).sign()
    if ys and not xs:
        return -((y - x).sign())
    if x == y:
        return 0
    last = 0
    for bits in bit_ladder(max_bits):
        last = bits
        xlo, xhi = exact_scaled_bounds(x, bits)
        ylo, yhi = exact_scaled_bounds(y, bits)
        if xhi < ylo:
            return -1
        if xlo > yhi:
            return 1
    raise PrecisionExhausted("comparison did not separate", last)


# ---------------------------------------------------------------------------
# RealSpec: the tagged union of exact real descriptors
# ---------------------------------------------------------------------------


class RealSpec:
    """Base class for exact real-number descriptors."""

    def is_irrational(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class RationalSpec(RealSpec):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def is_irrational(self) -> bool:
        return False


@dataclass(frozen=True)
class SurdSpec(RealSpec):
    surd: QuadraticSurd

    def is_irrational(self) -> bool:
        return not self.surd.is_rational


@dataclass(frozen=True)
class CFSpec(RealSpec):
    """Continued fraction [a0; a1, a2, ...] with an optional repeating tail.

    `period` empty means the expansion terminates (a rational number).
    Partial quotients a_i must be >= 1 for i >= 1.
    """

    preperiod: tuple
    period: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(a) for a in self.preperiod))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if not self.preperiod:
            raise InvalidSpec("continued fraction needs at least a0")
        for a in self.preperiod[1:]:
            if a < 1:
                raise InvalidSpec("partial quotients must be >= 1")
        for a in self.period:
            if a < 1:
                raise InvalidSpec("periodic partial quotients must be >= 1")

    def is_irrational(self) -> bool:
        return bool(self.period)


@dataclass(frozen=True)
class DigitStreamSpec(RealSpec):
    """Value sum_i digit_i * base^-i for a named digit generator."""

    base: int
    source: str
    seed: Optional[int] = None

    def __post_init__(self):
        if self.base < 2:
            raise InvalidSpec("digit stream base must be >= 2")

    def is_irrational(self) -> bool:
        from . import digitstreams

        return digitstreams.source_is_irrational(self.source)


def _mobius(num_coeffs: tuple, den_coeffs: tuple, y: QuadraticSurd) -> QuadraticSurd:
    """(p*y + q) / (r*y + s) evaluated exactly."""
    p, q = num_coeffs
    r, s = den_coeffs
    num = y.scale(p) + Fraction(q)
    den = y.scale(r) + Fraction(s)
    return num * den.inverse()


def _cf_matrix(quotients) -> tuple:
    """Left-to-right product of [[a,1],[1,0]] over the quotients: returns
    (m00, m01, m10, m11) with m00/m10 the last convergent p/q."""
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in quotients:
        m00, m01, m10, m11 = m00 * a + m01, m00, m10 * a + m11, m10
    return m00, m01, m10, m11


def cf_to_exact(spec: CFSpec) -> ExactValue:
    """Exact value of a continued fraction: Fraction when it terminates,
    QuadraticSurd when periodic."""
    if not spec.period:
        p, _, q, _ = _cf_matrix(spec.preperiod)
        return Fraction(p, q)  # m00/m10 is the full convergent
    # purely periodic tail y = [p1; p2, ..., pm, y]  =>  quadratic in y
    m00, m01, m10, m11 = _cf_matrix(spec.period)
    # y = (m00*y + m01) / (m10*y + m11)
    # m10 y^2 + (m11 - m00) y - m01 = 0, positive root (> 1)
    A, B, C = m10, m11 - m00, -m01
    disc = B * B - 4 * A * C
    y = QuadraticSurd(-B, 1, 2 * A, disc)
    if y.is_rational or y.sign() <= 0:
        raise InvalidSpec("degenerate periodic continued fraction")
    # [a0; a1, ..., a_{k-1}, y] = (f00*y + f01) / (f10*y + f11)
    f00, f01, f10, f11 = _cf_matrix(spec.preperiod)
    return _mobius((f00, f01), (f10, f11), y)


def real_to_exact(x: RealSpec) -> Optional[ExactValue]:
    """Exact closed form of a RealSpec, or None when only a digit stream
    (approximable but not finitely representable) is available."""
    if isinstance(x, RationalSpec):
        return x.value
    if isinstance(x, SurdSpec):
        return x.surd.to_fraction() if x.surd.is_rational else x.surd
    if isinstance(x, CFSpec):
        return cf_to_exact(x)
    if isinstance(x, DigitStreamSpec):
        return None
    raise InvalidSpec("unknown RealSpec variant %r" % (x,))


def _digit_stream_bounds(x: DigitStreamSpec, n_digits: int) -> tuple:
    """(S, base^n) with the stream value in [S, S+1] / base^n."""
    from . import digitstreams

    digs = digitstreams.make_stream(x.source, x.base, x.seed).prefix(n_digits)
    s = 0
    for dig in digs:
        s = s * x.base + dig
    return s, x.base ** n_digits


def frac_part(x, m: int, tol, max_bits: Optional[int] = None) -> CertifiedValue:
    """Certified fractional part {m*x} with radius < tol.

    For surd (and periodic continued fraction) inputs the integer part of
    m*x is computed exactly before any rounding; for rationals the result
    is exact with radius 0.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidSpec("tolerance must be positive")
    if isinstance(x, RealSpec):
        exact = real_to_exact(x)
    elif isinstance(x, (QuadraticSurd, Fraction, int)):
        exact = as_exact(x)
    else:
        raise InvalidSpec("frac_part expects a RealSpec or exact value")

    if isinstance(exact, Fraction):
        v = exact * m
        f = v - math.floor(v)
        return CertifiedValue(f, Fraction(0), 0, exact=f)

    if isinstance(exact, QuadraticSurd):
        scaled = exact.scale(m)
        frac = scaled.frac_exact()
        if frac.is_rational:  # m*x happened to be rational
            f = frac.to_fraction()
            return CertifiedValue(f, Fraction(0), 0, exact=f)
        cert = _certify_unit_interval(frac, tol, max_bits)
        return cert

    # digit stream: value in [S, S+1]/base^n, tail bound base^-n
    assert isinstance(x, DigitStreamSpec)
    base = x.base
    last = 0
    for bits in bit_ladder(max_bits):
        last = bits
        n_digits = max(1, math.ceil((bits + max(m, 1).bit_length()) / math.log2(base)))
        s, den = _digit_stream_bounds(x, n_digits)
        lo_num, hi_num = m * s, m * (s + 1)
        f_lo, f_hi = lo_num // den, hi_num // den
        if f_lo != f_hi:
            continue  # enclosure straddles an integer; need more digits
        r_lo, r_hi = lo_num - f_lo * den, hi_num - f_lo * den
        width = Fraction(r_hi - r_lo, den)
        if width >= 2 * tol:
            continue
        if x.is_irrational() and (r_lo == 0 or r_hi == den):
            continue  # keep the enclosure strictly inside [0, 1)
        return CertifiedValue(Fraction(r_lo + r_hi, 2 * den), width / 2, bits)
    raise PrecisionExhausted("digit stream did not certify {m*x}", last)


def _certify_unit_interval(frac: QuadraticSurd, tol: Fraction,
                           max_bits: Optional[int]) -> CertifiedValue:
    """Certify an exact surd already known to lie in [0, 1); the enclosure is
    kept strictly inside [0, 1)."""
    last = 0
    for bits in bit_ladder(max_bits):
        last = bits
        lo, hi = frac.scaled_bounds(bits)
        den = 1 << bits
        width = Fraction(hi - lo, den)
        if width >= 2 * tol or lo <= 0 or hi >= den:
            continue
        return CertifiedValue(Fraction(lo + hi, 2 * den), width / 2, bits, exact=frac)
    raise PrecisionExhausted("surd fractional part did not certify", last)


def nearest_int_dist(x, m: int, tol, max_bits: Optional[int] = None) -> CertifiedValue:
    """Certified distance ||m*x|| = min({m*x}, 1 - {m*x}) in [0, 1/2]."""
    tol = Fraction(tol)
    f = frac_part(x, m, tol, max_bits)
    if isinstance(f.exact, Fraction):
        v = min(f.exact, 1 - f.exact)
        return CertifiedValue(v, Fraction(0), 0, exact=v)
    if isinstance(f.exact, QuadraticSurd):
        half = Fraction(1, 2)
        if f.exact.cmp_same_field(QuadraticSurd.from_fraction(half)) <= 0:
            dist = f.exact
        else:
            dist = QuadraticSurd.from_fraction(1) - f.exact
        return dist.evaluate(tol, max_bits)
    # interval-only input: reflect the enclosure through min(f, 1-f)
    lo, hi = f.lo, f.hi
    half = Fraction(1, 2)
    if hi <= half:
        return f
    if lo >= half:
        return CertifiedValue(1 - f.midpoint, f.radius, f.prec_bits)
    new_lo = min(lo, 1 - hi)
    return CertifiedValue((new_lo + half) / 2, (half - new_lo) / 2, f.prec_bits)


# ---------------------------------------------------------------------------
# Text syntax:  rational:p/q | surd:(a,b,c,d) | cf:[a0;a1,(p1,p2)] |
#               digits:champernowne:BASE
# ---------------------------------------------------------------------------

_SURD_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(\d+)\s*\)$")
_CF_RE = re.compile(r"^\[\s*(-?\d+)\s*(?:;(.*))?\]$")


def parse_real(text: str) -> RealSpec:
    """Parse the RealSpec text syntax used by the CLI and config files."""
    text = text.strip()
    head, sep, rest = text.partition(":")
    if not sep:
        raise InvalidSpec("real spec %r lacks a 'kind:' prefix" % text)
    if head == "rational":
        m = re.match(r"^(-?\d+)\s*/\s*(\d+)$", rest.strip())
        if not m:
            raise InvalidSpec("bad rational syntax %r (want p/q)" % rest)
        return RationalSpec(Fraction(int(m.group(1)), int(m.group(2))))
    if head == "surd":
        m = _SURD_RE.match(rest.strip())
        if not m:
            raise InvalidSpec("bad surd syntax %r (want (a,b,c,d))" % rest)
        return SurdSpec(QuadraticSurd(*(int(g) for g in m.groups())))
    if head == "cf":
        m = _CF_RE.match(rest.strip())
        if not m:
            raise InvalidSpec("bad continued fraction syntax %r" % rest)
        a0 = int(m.group(1))
        tail = (m.group(2) or "").strip()
        pre, per = [a0], []
        if tail:
            pm = re.match(r"^([0-9,\s]*?)(?:\(\s*([0-9,\s]+)\s*\))?\s*$", tail)
            if not pm:
                raise InvalidSpec("bad continued fraction tail %r" % tail)
            body, period = pm.group(1), pm.group(2)
            if body.strip(", "):
                pre += [int(t) for t in body.strip(", ").split(",")]
            if period:
                per = [int(t) for t in period.split(",")]
        return CFSpec(tuple(pre), tuple(per))
    if head == "digits":
        parts = rest.split(":")
        if len(parts) == 2:
            source, base = parts[0], parts[1]
            seed = None
        elif len(parts) == 3:
            source, base, seed = parts[0], parts[1], int(parts[2])
        else:
            raise InvalidSpec("bad digit stream syntax %r" % rest)
        return DigitStreamSpec(int(base), source, seed)
    raise InvalidSpec("unknown real spec kind %r" % head)


def format_real(spec: RealSpec) -> str:
    """Round-trippable canonical text for a RealSpec."""
    if isinstance(spec, RationalSpec):
        return "rational:%d/%d" % (spec.value.numerator, spec.value.denominator)
    if isinstance(spec, SurdSpec):
        s = spec.surd
        return "surd:(%d,%d,%d,%d)" % (s.a, s.b, s.c, s.d)
    if isinstance(spec, CFSpec):
        body = ",".join(str(a) for a in spec.preperiod[1:])
        per = "(%s)" % ",".join(str(a) for a in spec.period) if spec.period else ""
        joiner = "," if body and per else ""
        return "cf:[%d;%s%s%s]" % (spec.preperiod[0], body, joiner, per)
    if isinstance(spec, DigitStreamSpec):
        tail = ":%d" % spec.seed if spec.seed is not None else ""
        return "digits:%s:%d%s" % (spec.source, spec.base, tail)
    raise InvalidSpec("unknown RealSpec variant %r" % (spec,))


# Frequently used exact constants.
GOLDEN_CONJUGATE = SurdSpec(QuadraticSurd(-1, 1, 2, 5))   # (sqrt(5)-1)/2
GOLDEN_RATIO = SurdSpec(QuadraticSurd(1, 1, 2, 5))        # (1+sqrt(5))/2
TWO_MINUS_SQRT2 = SurdSpec(QuadraticSurd(2, -1, 1, 2))    # 2-sqrt(2)
SQRT2 = SurdSpec(QuadraticSurd(0, 1, 1, 2))
SQRT3 = SurdSpec(QuadraticSurd(0, 1, 1, 3))
SQRT2_MINUS_1 = SurdSpec(QuadraticSurd(-1, 1, 1, 2))
