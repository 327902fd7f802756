"""
Finite continued fractions [a0; a1, ..., al] with integer entries.

Evaluation runs right to left over Q u {1/0}, so every integer word has a
value, including words that pass through 0 or 1/0 on the way.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import (
    INF,
    ExtRational,
    ParseError,
    PreconditionError,
    add_int,
    make,
    recip,
)

__all__ = [
    "ContinuedFraction",
    "Convergents",
    "evaluate",
    "fold",
    "expand_standard",
    "is_standard",
    "decrement_last",
    "reverse_negate",
    "leading_zeros",
    "collapse_zeros",
    "convergents",
    "eval_with_tail",
    "parse_cf",
]


@dataclass(frozen=True)
class ContinuedFraction:
    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(int(a) for a in coefficients)
        if not coeffs:
            raise PreconditionError("a continued fraction needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __str__(self):
        head, *tail = self.coefficients
        if not tail:
            return f"[{head}]"
        return f"[{head};{','.join(str(a) for a in tail)}]"

    def prefix(self, i: int) -> ContinuedFraction:
        """[a0; ..., ai]"""
        return ContinuedFraction(self.coefficients[: i + 1])


@dataclass(frozen=True)
class Convergents:
    ps: tuple[int, ...]
    qs: tuple[int, ...]

    def __len__(self):
        return len(self.ps)

    def __getitem__(self, i) -> ExtRational:
        return make(self.ps[i], self.qs[i])


def fold(coefficients: Sequence[int], seed: ExtRational) -> ExtRational:
    """Value of [a0; ..., al, seed], i.e. apply x -> a + 1/x from the right."""
    value = seed
    for a in reversed(coefficients):
        value = add_int(recip(value), a)
    return value


def evaluate(cf: ContinuedFraction | Sequence[int]) -> ExtRational:
    coeffs = cf.coefficients if isinstance(cf, ContinuedFraction) else tuple(cf)
    if not coeffs:
        raise PreconditionError("cannot evaluate an empty continued fraction")
    # trailing seed 1/0 contributes 1/(1/0) = 0 to the last coefficient
    return fold(coeffs, INF)


def eval_with_tail(cf: ContinuedFraction, x: ExtRational) -> ExtRational:
    """Value of [a0; ..., an, x] for an extended rational tail x."""
    return fold(cf.coefficients, x)


def expand_standard(r: ExtRational) -> ContinuedFraction:
    """Standard continued fraction of a finite rational via floor division.

    a1..an come out positive and an >= 2 whenever n >= 1.
    """
    if r.is_infinite:
        raise PreconditionError("1/0 has no standard continued fraction")
    p, q = r.numerator, r.denominator
    coeffs = []
    while q:
        a, rem = divmod(p, q)
        coeffs.append(a)
        p, q = q, rem
    return ContinuedFraction(coeffs)


def is_standard(cf: ContinuedFraction) -> bool:
    tail = cf.coefficients[1:]
    if not tail:
        return True
    return all(a >= 1 for a in tail) and tail[-1] > 1


def decrement_last(cf: ContinuedFraction) -> ContinuedFraction:
    *head, last = cf.coefficients
    return ContinuedFraction((*head, last - 1))


def reverse_negate(cf: ContinuedFraction | Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(tuple(cf)))


def leading_zeros(cf: ContinuedFraction) -> int:
    """Number of leading zero entries, capped so at least one entry survives."""
    coeffs = cf.coefficients
    i = 0
    while i < len(coeffs) - 1 and coeffs[i] == 0:
        i += 1
    return i


def collapse_zeros(cf: ContinuedFraction, zeros: int | None = None) -> ContinuedFraction:
    """Drop a run of leading zeros without changing the value.

    [0;0,...,0,ai,...,al] with i zeros equals [ai;...,al] for even i and
    [0;ai,...,al] for odd i. By default the whole leading run is collapsed.
    """
    if zeros is None:
        zeros = leading_zeros(cf)
    coeffs = cf.coefficients
    if zeros < 0 or zeros > len(coeffs) - 1:
        raise PreconditionError(f"cannot collapse {zeros} zeros from {cf}")
    if any(coeffs[:zeros]):
        raise PreconditionError(f"{cf} does not start with {zeros} zeros")
    rest = coeffs[zeros:]
    if zeros % 2 == 0:
        return ContinuedFraction(rest)
    return ContinuedFraction((0, *rest))


def convergents(cf: ContinuedFraction) -> Convergents:
    if not is_standard(cf):
        raise PreconditionError(f"convergents need a standard continued fraction, got {cf}")
    p_prev, q_prev = 1, 0
    p, q = cf.coefficients[0], 1
    ps, qs = [p], [q]
    for a in cf.coefficients[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        ps.append(p)
        qs.append(q)
    return Convergents(tuple(ps), tuple(qs))


_CF_RE = re.compile(r"^\s*\[(.*)\]\s*$", re.S)
_INT_RE = re.compile(r"^[+-]?\d+$")


def parse_cf(text: str) -> ContinuedFraction:
    """Parse "[a0;a1,...,al]"; "[a0]" is the single-term case.

    A semicolon is accepted wherever a comma is, after the first one.
    """
    m = _CF_RE.match(text)
    if m is None:
        raise ParseError(f"continued fraction must be bracketed: {text!r}")
    body = m.group(1).strip()
    if not body:
        raise ParseError("empty continued fraction")
    head, sep, rest = body.partition(";")
    parts = [head]
    if sep:
        parts += re.split(r"[,;]", rest)
    elif "," in head:
        raise ParseError(f"expected ';' after the first coefficient: {text!r}")
    parts = [s.strip() for s in parts]
    if any(not _INT_RE.match(s) for s in parts):
        raise ParseError(f"bad coefficient in {text!r}")
    return ContinuedFraction(int(s) for s in parts)
