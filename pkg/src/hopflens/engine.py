"""
Closed-form lens space of a rationally framed Hopf link.

For framings p/q = [a0; ..., an] and r/s = [b0; ..., bm + 1] the surgery is
L(a, b) with

    a/b = [-bm; ..., -b0, a0, ..., an] ** ((-1) ** (m + 1)) - 1.

compute_lens uses the standard expansions; compute_from_words accepts any
pair of representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import ExtRational, PreconditionError, add_int, make, pow_sign
from .contfrac import (
    ContinuedFraction,
    convergents,
    decrement_last,
    evaluate,
    expand_standard,
    reverse_negate,
)
from .lens import LensSpace, from_fraction

__all__ = [
    "SurgeryInput",
    "SurgeryResult",
    "compute_lens",
    "compute_from_words",
    "sphere_criterion",
    "homology_order",
    "solve_diophantine",
    "tail_parameter",
]


@dataclass(frozen=True)
class SurgeryInput:
    pq: ExtRational
    rs: ExtRational

    def __str__(self):
        return f"({self.pq}, {self.rs})"


@dataclass(frozen=True)
class SurgeryResult:
    raw: ExtRational
    lens: LensSpace
    word: tuple[int, ...]
    exponent: int


def compute_from_words(pq_word: ContinuedFraction, rs_word: ContinuedFraction) -> SurgeryResult:
    """Apply the closed form to explicit representations of both framings.

    rs_word is read as [b0; ..., bm + 1], i.e. its last entry is decremented
    to obtain the b-word.
    """
    bs = decrement_last(rs_word)
    word = reverse_negate(bs) + pq_word.coefficients
    exponent = -1 if len(bs) % 2 else 1
    raw = add_int(pow_sign(evaluate(word), exponent), -1)
    return SurgeryResult(raw=raw, lens=from_fraction(raw), word=word, exponent=exponent)


def compute_lens(inp: SurgeryInput) -> SurgeryResult:
    pq, rs = inp.pq, inp.rs
    # an infinitely framed component can simply be deleted
    if pq.is_infinite:
        return SurgeryResult(raw=rs, lens=from_fraction(rs), word=(), exponent=1)
    if rs.is_infinite:
        return SurgeryResult(raw=pq, lens=from_fraction(pq), word=(), exponent=1)
    return compute_from_words(expand_standard(pq), expand_standard(rs))


def _require_finite(inp: SurgeryInput) -> None:
    if inp.pq.is_infinite or inp.rs.is_infinite:
        raise PreconditionError(f"both framings must be finite, got {inp}")


def _cross(inp: SurgeryInput) -> int:
    p, q = inp.pq.as_tuple()
    r, s = inp.rs.as_tuple()
    return p * r - q * s


def sphere_criterion(inp: SurgeryInput) -> bool:
    """True when pr - qs = +-1, which forces the result to be S^3."""
    _require_finite(inp)
    return abs(_cross(inp)) == 1


def homology_order(inp: SurgeryInput) -> int:
    """|H1| = |pr - qs|, with 0 standing for infinite homology."""
    _require_finite(inp)
    return abs(_cross(inp))


def solve_diophantine(p: int, q: int, sign: int) -> tuple[int, int, int, int]:
    """Solve p*x - q*y = sign from the convergents of p/q.

    Returns (x0, y0, step_x, step_y); every solution is
    (x0 + l*step_x, y0 + l*step_y).
    """
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")
    if q == 0:
        raise PreconditionError("q must be nonzero")
    if gcd(p, q) != 1:
        raise PreconditionError(f"{p} and {q} are not coprime")
    if q < 0:
        p, q, sign = -p, -q, -sign
    conv = convergents(expand_standard(make(p, q)))
    n = len(conv) - 1
    p_prev, q_prev = (conv.ps[n - 1], conv.qs[n - 1]) if n > 0 else (1, 0)
    # p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1)
    eps = (-1) ** (n + 1) if sign == 1 else (-1) ** n
    return eps * q_prev, eps * p_prev, conv.qs[n], conv.ps[n]


def tail_parameter(inp: SurgeryInput) -> int:
    """The integer l with r/s = [0; a0, ..., an, l], where p/q = [a0; ..., an].

    Exists whenever pr - qs = +-1.
    """
    _require_finite(inp)
    if not sphere_criterion(inp):
        raise PreconditionError(f"no tail parameter: pr - qs = {_cross(inp)} is not +-1")
    cf = expand_standard(inp.pq)
    conv = convergents(cf)
    n = len(conv) - 1
    pn, qn = conv.ps[n], conv.qs[n]
    p_prev, q_prev = (conv.ps[n - 1], conv.qs[n - 1]) if n > 0 else (1, 0)
    r, s = inp.rs.as_tuple()
    # r/s = (qn*l + q_prev) / (pn*l + p_prev)
    coeff = s * qn - r * pn
    l, rem = divmod(r * p_prev - s * q_prev, coeff)
    if rem:
        raise PreconditionError(f"no integer tail parameter for {inp}")
    if evaluate((0, *cf.coefficients, l)) != inp.rs:
        raise PreconditionError(f"no integer tail parameter for {inp}")
    return l
