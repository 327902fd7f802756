"""Lens space labels L(a, b) and their normal form."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .arith import ExtRational, ParseError, PreconditionError

__all__ = [
    "LensSpace",
    "S3",
    "S2xS1",
    "from_fraction",
    "is_sphere",
    "homeomorphic",
    "parse_lens",
]


@dataclass(frozen=True, order=True)
class LensSpace:
    """Canonical label: L(1,0) is S^3, L(0,1) is S^2 x S^1, else 1 <= b < a."""

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if a == 0:
            ok = b == 1
        elif a == 1:
            ok = b == 0
        else:
            ok = a > 1 and 1 <= b < a and gcd(a, b) == 1
        if not ok:
            raise PreconditionError(f"L({a},{b}) is not a canonical lens space label")

    def __str__(self):
        return f"L({self.a},{self.b})"

    @property
    def pretty_name(self) -> str | None:
        if self.a == 1:
            return "S3"
        if self.a == 0:
            return "S2xS1"
        return None

    def describe(self) -> str:
        name = self.pretty_name
        return f"{self} ({name})" if name else str(self)


S3 = LensSpace(1, 0)
S2xS1 = LensSpace(0, 1)


def from_fraction(r: ExtRational) -> LensSpace:
    """Lens space of a/b surgery on the unknot, in canonical form.

    A negative a is absorbed into b, so -431/257 gives L(431, 174).
    """
    a, b = r.numerator, r.denominator
    if b == 0:
        return S3
    if a == 0:
        return S2xS1
    n = abs(a)
    if n == 1:
        return S3
    sign = 1 if a > 0 else -1
    return LensSpace(n, (sign * b) % n)


def is_sphere(L: LensSpace) -> bool:
    return L.a == 1


def _classical_orbit(a: int, b: int) -> set[int]:
    inv = pow(b, -1, a)
    return {b % a, (-b) % a, inv, (-inv) % a}


def homeomorphic(L1: LensSpace, L2: LensSpace, mode: str = "paper") -> bool:
    """Compare two labels as unoriented manifolds.

    mode="paper" compares canonical labels. mode="classical" also identifies
    L(a, b) with L(a, b') whenever b' = +-b^(+-1) mod a.
    """
    if mode == "paper":
        return L1 == L2
    if mode != "classical":
        raise PreconditionError(f"unknown mode {mode!r}")
    if L1.a != L2.a:
        return False
    if L1.a <= 1:
        return L1 == L2
    return L2.b in _classical_orbit(L1.a, L1.b)


_LENS_RE = re.compile(r"^\s*L\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_lens(text: str) -> LensSpace:
    s = text.strip()
    if s == "S3":
        return S3
    if s in ("S2xS1", "S1xS2"):
        return S2xS1
    m = _LENS_RE.match(s)
    if m is None:
        raise ParseError(f"cannot parse lens space label: {text!r}")
    return LensSpace(int(m.group(1)), int(m.group(2)))
