"""
Framed Hopf links and the Rolfsen moves acting on them.

Twisting m full times along component i sends its framing x to
1/(m + 1/x) and shifts the other framing by m (the linking number of the
Hopf link is +-1, so lk^2 = 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .arith import INF, ONE, ExtRational, PreconditionError, add_int, make, recip
from .contfrac import decrement_last, expand_standard

__all__ = [
    "FramedHopfLink",
    "TwistMove",
    "TraceStep",
    "MoveTrace",
    "r_pos",
    "r_neg",
    "apply_twist",
    "delete_infinity",
    "slam_dunk",
    "reduce_to_one_component",
]


@dataclass(frozen=True)
class FramedHopfLink:
    framing_1: ExtRational
    framing_2: ExtRational

    def __str__(self):
        return f"({self.framing_1}, {self.framing_2})"

    def framing(self, component: int) -> ExtRational:
        if component == 1:
            return self.framing_1
        if component == 2:
            return self.framing_2
        raise PreconditionError(f"Hopf link has components 1 and 2, not {component}")


@dataclass(frozen=True)
class TwistMove:
    component: int
    m: int

    def __post_init__(self):
        if self.component not in (1, 2):
            raise PreconditionError(f"Hopf link has components 1 and 2, not {self.component}")

    def __str__(self):
        return f"twist(component={self.component}, m={self.m})"


State = Union[FramedHopfLink, ExtRational]


@dataclass(frozen=True)
class TraceStep:
    move: str
    state: State

    def __str__(self):
        if isinstance(self.state, FramedHopfLink):
            return f"move: {self.move} | state: {self.state}"
        return f"{self.move} → {self.state}"


@dataclass
class MoveTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, move, state: State) -> None:
        self.steps.append(TraceStep(str(move), state))

    @property
    def final(self) -> State:
        return self.steps[-1].state

    def twists(self) -> list[TraceStep]:
        return [s for s in self.steps if s.move.startswith("twist(")]

    def to_text(self) -> str:
        return "\n".join(str(s) for s in self.steps)

    def to_records(self) -> list[dict]:
        out = []
        for s in self.steps:
            if isinstance(s.state, FramedHopfLink):
                state = [str(s.state.framing_1), str(s.state.framing_2)]
            else:
                state = str(s.state)
            out.append({"move": s.move, "state": state})
        return out


def r_pos(r: ExtRational, m: int) -> ExtRational:
    """(p + mq)/q; fixes 1/0."""
    return add_int(r, m)


def r_neg(r: ExtRational, m: int) -> ExtRational:
    """p/(q + mp); sends 1/0 to 1/m."""
    return make(r.numerator, r.denominator + m * r.numerator)


def apply_twist(link: FramedHopfLink, move: TwistMove) -> FramedHopfLink:
    if move.component == 1:
        return FramedHopfLink(r_neg(link.framing_1, move.m), r_pos(link.framing_2, move.m))
    return FramedHopfLink(r_pos(link.framing_1, move.m), r_neg(link.framing_2, move.m))


def delete_infinity(link: FramedHopfLink, component: int | None = None) -> ExtRational:
    """Drop the 1/0-framed component and return the surviving framing.

    Without ``component`` exactly one framing must be 1/0.
    """
    if component is not None:
        if not link.framing(component).is_infinite:
            raise PreconditionError(f"component {component} of {link} is not framed 1/0")
        return link.framing(3 - component)
    inf1 = link.framing_1.is_infinite
    inf2 = link.framing_2.is_infinite
    if inf1 == inf2:
        raise PreconditionError(f"exactly one framing must be 1/0, got {link}")
    return link.framing_2 if inf1 else link.framing_1


def slam_dunk(m: int, r: ExtRational) -> ExtRational:
    """Single framing m - q/p replacing an (m, p/q) Hopf pair."""
    if r.is_infinite or r.numerator == 0:
        raise PreconditionError(f"slam-dunk needs a finite nonzero framing, got {r}")
    return add_int(_neg(recip(r)), m)


def _neg(r: ExtRational) -> ExtRational:
    return ExtRational._raw(-r.numerator, r.denominator)


def reduce_to_one_component(link: FramedHopfLink) -> tuple[ExtRational, MoveTrace]:
    """Reduce a Hopf link to a single framed unknot by explicit moves.

    With framing_2 = [b0; ..., bm + 1] in standard form, twist by -b0, -b1,
    ... alternately along components 1, 2, 1, ... . This leaves framing_2
    equal to 1; one further twist by -1 along component 2 makes it 1/0, and
    that component is deleted.
    """
    if link.framing_1.is_infinite or link.framing_2.is_infinite:
        raise PreconditionError(f"both framings must be finite, got {link}")
    bs = decrement_last(expand_standard(link.framing_2)).coefficients

    trace = MoveTrace()
    trace.record("start", link)
    state = link
    for k, b in enumerate(bs):
        move = TwistMove(component=1 if k % 2 == 0 else 2, m=-b)
        state = apply_twist(state, move)
        trace.record(move, state)
    if state.framing_2 != ONE:
        raise AssertionError(f"second framing should be 1 after the b-twists, got {state}")

    move = TwistMove(component=2, m=-1)
    state = apply_twist(state, move)
    trace.record(move, state)
    assert state.framing_2 == INF

    result = delete_infinity(state, component=2)
    trace.record("delete ∞", result)
    return result, trace
