"""
Exact rationals extended by a single point at infinity, written 1/0.

Only the operations the surgery calculus needs are provided: integer shifts
and reciprocals. Infinity absorbs integer shifts and its reciprocal is 0.

    >>> x = make(-6, -4)
    >>> x
    ExtRational(3, 2)
    >>> str(recip(make(0, 1)))
    '1/0'
"""
from __future__ import annotations

import re
from math import gcd

__all__ = [
    "ExtRational",
    "INF",
    "ZERO",
    "ONE",
    "ParseError",
    "PreconditionError",
    "make",
    "add_int",
    "recip",
    "pow_sign",
    "parse_rational",
]


class ParseError(ValueError):
    """Malformed textual input."""


class PreconditionError(ValueError):
    """Well-formed input outside an operation's domain."""


class ExtRational:
    """An element of Q u {1/0} in lowest terms.

    The denominator is never negative. Infinity is stored only as 1/0 and
    zero only as 0/1.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: int, denominator: int = 1):
        numerator = int(numerator)
        denominator = int(denominator)
        if denominator == 0:
            if numerator == 0:
                raise PreconditionError("0/0 is not an extended rational")
            numerator = 1
        else:
            if denominator < 0:
                numerator, denominator = -numerator, -denominator
            g = gcd(numerator, denominator)
            if g != 1:
                numerator //= g
                denominator //= g
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @classmethod
    def _raw(cls, numerator: int, denominator: int) -> ExtRational:
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "numerator", numerator)
        object.__setattr__(obj, "denominator", denominator)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExtRational is immutable")

    def __delattr__(self, name):
        raise AttributeError("ExtRational is immutable")

    def __reduce__(self):
        return (ExtRational, (self.numerator, self.denominator))

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    def __eq__(self, other):
        if isinstance(other, ExtRational):
            return (self.numerator == other.numerator
                    and self.denominator == other.denominator)
        if isinstance(other, int):
            return self.denominator == 1 and self.numerator == other
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"ExtRational({self.numerator}, {self.denominator})"

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def as_tuple(self) -> tuple[int, int]:
        return self.numerator, self.denominator


INF = ExtRational._raw(1, 0)
ZERO = ExtRational._raw(0, 1)
ONE = ExtRational._raw(1, 1)


def make(n: int, d: int = 1) -> ExtRational:
    """Canonical ExtRational for n/d; any k/0 with k != 0 becomes 1/0."""
    return ExtRational(n, d)


def add_int(r: ExtRational, m: int) -> ExtRational:
    if r.denominator == 0:
        return r
    # gcd(p + mq, q) == gcd(p, q) == 1, no reduction needed
    return ExtRational._raw(r.numerator + m * r.denominator, r.denominator)


def recip(r: ExtRational) -> ExtRational:
    p, q = r.numerator, r.denominator
    if p == 0:
        return INF
    if q == 0:
        return ZERO
    if p < 0:
        return ExtRational._raw(-q, -p)
    return ExtRational._raw(q, p)


def pow_sign(r: ExtRational, e: int) -> ExtRational:
    """r for e = +1, its reciprocal for e = -1."""
    if e == 1:
        return r
    if e == -1:
        return recip(r)
    raise PreconditionError(f"exponent must be +1 or -1, got {e!r}")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")
_INF_ALIASES = {"inf", "+inf", "infinity", "∞", "oo"}


def parse_rational(text: str) -> ExtRational:
    """Parse "p/q", a bare integer, "1/0", "inf" or "∞".

    Raises ParseError on malformed text and PreconditionError on 0/0.
    """
    s = text.strip()
    if s.lower() in _INF_ALIASES:
        return INF
    m = _RATIONAL_RE.match(s)
    if m is None:
        raise ParseError(f"cannot parse rational: {text!r}")
    n = int(m.group(1))
    d = int(m.group(2)) if m.group(2) is not None else 1
    return make(n, d)
