"""Command-line front end.

    hopflens compute 5/2 109/57
    hopflens trace 3/2 3/4
    hopflens eval "[1;1,10,2,2]"

Exit status: 0 on success, 1 on unparsable input, 2 when the input parses
but lies outside the operation's domain.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .arith import ExtRational, ParseError, PreconditionError, parse_rational
from .contfrac import ContinuedFraction, evaluate, expand_standard, parse_cf
from .engine import (
    SurgeryInput,
    SurgeryResult,
    compute_from_words,
    compute_lens,
    homology_order,
    solve_diophantine,
    sphere_criterion,
)
from .lens import S3, LensSpace, homeomorphic
from .rolfsen import FramedHopfLink, reduce_to_one_component

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2

# lets "-431/257" through as a positional argument
_NEGATIVE_LITERAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_LITERAL

    def error(self, message):
        raise ParseError(message)


def parse_framing(text: str) -> ExtRational | ContinuedFraction:
    """A rational literal, or a continued fraction in brackets."""
    if text.strip().startswith("["):
        return parse_cf(text)
    return parse_rational(text)


def _value(x: ExtRational | ContinuedFraction) -> ExtRational:
    return evaluate(x) if isinstance(x, ContinuedFraction) else x


def _surgery(pq_arg, rs_arg) -> SurgeryResult:
    if not isinstance(pq_arg, ContinuedFraction) and not isinstance(rs_arg, ContinuedFraction):
        return compute_lens(SurgeryInput(pq_arg, rs_arg))
    pq = pq_arg if isinstance(pq_arg, ContinuedFraction) else expand_standard(pq_arg)
    rs = rs_arg if isinstance(rs_arg, ContinuedFraction) else expand_standard(rs_arg)
    return compute_from_words(pq, rs)


def _lens_json(L: LensSpace) -> dict:
    return {"a": str(L.a), "b": str(L.b)}


def _homology_or_none(inp: SurgeryInput) -> int | None:
    if inp.pq.is_infinite or inp.rs.is_infinite:
        return None
    return homology_order(inp)


def _result_json(res: SurgeryResult, homology: int | None) -> dict:
    return {
        "raw": str(res.raw),
        "lens": _lens_json(res.lens),
        "homology": None if homology is None else str(homology),
        "word": [str(a) for a in res.word],
        "exponent": str(res.exponent),
    }


def cmd_compute(args, out):
    pq_arg, rs_arg = parse_framing(args.pq), parse_framing(args.rs)
    res = _surgery(pq_arg, rs_arg)
    h = _homology_or_none(SurgeryInput(_value(pq_arg), _value(rs_arg)))
    if args.json:
        return _result_json(res, h)
    line = f"raw = {res.raw}, lens = {res.lens.describe()}"
    if h is not None:
        line += f", |H1| = {h}"
    print(line, file=out)


def cmd_trace(args, out):
    link = FramedHopfLink(parse_rational(args.pq), parse_rational(args.rs))
    final, trace = reduce_to_one_component(link)
    res = compute_lens(SurgeryInput(link.framing_1, link.framing_2))
    if res.raw != final:
        raise AssertionError(f"move path ended at {final}, closed form gives {res.raw}")
    if args.json:
        obj = _result_json(res, homology_order(SurgeryInput(link.framing_1, link.framing_2)))
        obj["trace"] = trace.to_records()
        return obj
    if args.trace_format == "json":
        print(json.dumps(trace.to_records()), file=out)
    else:
        print(trace.to_text(), file=out)
    print(f"lens = {res.lens.describe()}", file=out)


def cmd_cf(args, out):
    r = parse_rational(args.value)
    cf = expand_standard(r)
    if args.json:
        return {"value": str(r), "cf": [str(a) for a in cf]}
    print(cf, file=out)


def cmd_eval(args, out):
    cf = parse_cf(args.cf)
    value = evaluate(cf)
    if args.json:
        return {"cf": [str(a) for a in cf], "value": str(value)}
    print(value, file=out)


def cmd_sphere(args, out):
    inp = SurgeryInput(parse_rational(args.pq), parse_rational(args.rs))
    crit = sphere_criterion(inp)
    lens = compute_lens(inp).lens
    is_s3 = homeomorphic(lens, S3, args.mode)
    if args.json:
        return {"criterion": crit, "lens": _lens_json(lens), "is_sphere": is_s3}
    print(f"criterion = {str(crit).lower()}, lens = {lens.describe()}, "
          f"sphere = {str(is_s3).lower()}", file=out)


def cmd_homology(args, out):
    inp = SurgeryInput(parse_rational(args.pq), parse_rational(args.rs))
    h = homology_order(inp)
    if args.json:
        return {"homology": str(h)}
    print(h, file=out)


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None


def cmd_solve(args, out):
    p, q = _parse_int(args.p), _parse_int(args.q)
    sign = _parse_int(args.sign)
    x0, y0, sx, sy = solve_diophantine(p, q, sign)
    if args.json:
        return {"x0": str(x0), "y0": str(y0), "step_x": str(sx), "step_y": str(sy)}
    print(f"x0 = {x0}, y0 = {y0}, step = ({sx}, {sy})", file=out)


def build_parser() -> argparse.ArgumentParser:
    def flags(suppress):
        # subcommands must not reset flags given before the subcommand name
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        f = _Parser(add_help=False)
        f.add_argument("--json", action="store_true", default=d(False),
                       help="emit one JSON object")
        f.add_argument("--mode", choices=("paper", "classical"), default=d("paper"),
                       help="lens space comparison used by 'sphere'")
        f.add_argument("--trace-format", choices=("text", "json"), default=d("text"))
        return f

    common = flags(suppress=True)
    parser = _Parser(prog="hopflens", parents=[flags(suppress=False)],
                     description="Lens spaces from rational surgery on the Hopf link.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("pq", help="framing of the first component")
        p.add_argument("rs", help="framing of the second component")
        p.set_defaults(func=func)

    pair("compute", cmd_compute, "lens space of the surgery (framings may be [..] words)")
    pair("trace", cmd_trace, "Rolfsen move sequence down to one component")
    pair("sphere", cmd_sphere, "check pr - qs = +-1 against the computed lens space")
    pair("homology", cmd_homology, "|pr - qs|")

    p = sub.add_parser("cf", parents=[common], help="standard continued fraction")
    p.add_argument("value")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("eval", parents=[common], help="value of a continued fraction")
    p.add_argument("cf")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("solve", parents=[common], help="solve p*x - q*y = +-1")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("sign")
    p.set_defaults(func=cmd_solve)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        obj = args.func(args, out)
    except ParseError as e:
        print(f"hopflens: parse error: {e}", file=err)
        return EXIT_PARSE
    except PreconditionError as e:
        print(f"hopflens: {e}", file=err)
        return EXIT_PRECONDITION
    if obj is not None:
        print(json.dumps(obj), file=out)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
