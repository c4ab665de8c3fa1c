"""Restartable digit streams for reals given positionally in an integer base.

A stream yields digits d_1, d_2, ... in {0, ..., base-1}; the real it
describes is sum_i d_i * base^-i in [0, 1).  Streams are cheap to clone
(every iteration restarts from scratch), which keeps concurrent scans and
repeated certifications deterministic.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import InvalidSpec


class DigitStream:
    base: int

    def __iter__(self) -> Iterator[int]:
        raise NotImplementedError

    def prefix(self, n: int) -> bytes:
        """First n digit values as bytes (requires base <= 256)."""
        out = bytearray()
        it = iter(self)
        while len(out) < n:
            out.append(next(it))
        return bytes(out)


class ChampernowneStream(DigitStream):
    """Concatenation of the base-b representations of 1, 2, 3, ...

    For b = 2 this is the binary Champernowne number
    0.1 10 11 100 101 ... = 0.110111001011101111000...; the base-10 analogue
    is the classical 0.123456789101112...  These numbers are irrational and
    contain every digit block, in particular arbitrarily long zero blocks.
    """

    def __init__(self, base: int = 2):
        if base < 2:
            raise InvalidSpec("base must be >= 2")
        self.base = base

    def __iter__(self) -> Iterator[int]:
        m = 1
        while True:
            digs = []
            t = m
            while t:
                digs.append(t % self.base)
                t //= self.base
            yield from reversed(digs)
            m += 1

    def prefix(self, n: int) -> bytes:
        out = bytearray()
        m = 1
        while len(out) < n:
            digs = []
            t = m
            while t:
                digs.append(t % self.base)
                t //= self.base
            out.extend(reversed(digs))
            m += 1
        return bytes(out[:n])


class ConstantStream(DigitStream):
    def __init__(self, digit: int, base: int = 2):
        if not 0 <= digit < base:
            raise InvalidSpec("digit outside base range")
        self.digit = digit
        self.base = base

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.digit

    def prefix(self, n: int) -> bytes:
        return bytes([self.digit]) * n


class RationalStream(DigitStream):
    """Base-b digits of p/q in [0, 1) by long division."""

    def __init__(self, p: int, q: int, base: int = 2):
        if q <= 0 or not 0 <= p < q:
            raise InvalidSpec("rational digit stream needs 0 <= p/q < 1")
        self.p, self.q, self.base = p, q, base

    def __iter__(self) -> Iterator[int]:
        r = self.p
        while True:
            r *= self.base
            yield r // self.q
            r %= self.q


class FileStream(DigitStream):
    """Digits read from a whitespace-free text file; the supply is finite,
    so consumers must treat the tail as unknown."""

    def __init__(self, path: str, base: int = 2):
        self.path = path
        self.base = base
        with open(path, "r") as fh:
            text = fh.read().strip()
        digs = []
        for ch in text:
            v = int(ch, base) if base <= 10 else int(ch, 36)
            if not 0 <= v < base:
                raise InvalidSpec("digit %r outside base %d" % (ch, base))
            digs.append(v)
        self._digits = bytes(digs)

    def __len__(self) -> int:
        return len(self._digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self._digits)

    def prefix(self, n: int) -> bytes:
        if n > len(self._digits):
            raise InvalidSpec("file stream has only %d digits" % len(self._digits))
        return self._digits[:n]


_SOURCES = {
    "champernowne": lambda base, seed: ChampernowneStream(base),
    "zeros": lambda base, seed: ConstantStream(0, base),
    "ones": lambda base, seed: ConstantStream(1, base),
}

_IRRATIONAL_SOURCES = {"champernowne"}


def make_stream(source: str, base: int, seed: Optional[int] = None) -> DigitStream:
    if source.startswith("file="):
        return FileStream(source[5:], base)
    try:
        factory = _SOURCES[source]
    except KeyError:
        raise InvalidSpec("unknown digit source %r" % source) from None
    return factory(base, seed)


def source_is_irrational(source: str) -> bool:
    return source in _IRRATIONAL_SOURCES


def find_zero_run(stream: DigitStream, run_len: int, scan_cap: int) -> Optional[int]:
    """1-based index of the first position where `run_len` consecutive zero
    digits begin, or None if no such run starts within scan_cap digits."""
    if run_len < 1:
        raise InvalidSpec("run length must be >= 1")
    if scan_cap < run_len:
        raise InvalidSpec("scan cap shorter than the requested run")
    buf = stream.prefix(scan_cap + run_len - 1)
    pos = buf.find(bytes(run_len))
    if pos == -1 or pos + 1 > scan_cap:
        return None
    return pos + 1
