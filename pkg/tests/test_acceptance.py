"""Acceptance criteria. Arithmetic is exact, so every check is equality."""
import io
import time
from fractions import Fraction
from itertools import product
from math import gcd

from hopflens.arith import INF, make, pow_sign
from hopflens.cli import run
from hopflens.contfrac import (
    ContinuedFraction as CF,
    collapse_zeros,
    convergents,
    eval_with_tail,
    evaluate,
    expand_standard,
    fold,
)
from hopflens.engine import SurgeryInput as S, compute_from_words, compute_lens, solve_diophantine
from hopflens.lens import S3, LensSpace, from_fraction, homeomorphic
from hopflens.rolfsen import FramedHopfLink, r_neg, r_pos, reduce_to_one_component, slam_dunk

from conftest import record_acceptance
from oracles import standard_words


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def framing_grid(n):
    return [make(p, q) for p in range(-n, n + 1) for q in range(1, n + 1) if p and gcd(p, q) == 1]


def cli_line(*argv):
    out = io.StringIO()
    assert run(list(argv), out=out, err=io.StringIO()) == 0
    return out.getvalue().strip()


def test_c01_example_13():
    res, dt = timed(compute_lens, S(make(5, 2), make(109, 57)))
    ok = (res.raw == make(-431, 257) and res.lens == LensSpace(431, 174) and dt < 0.010
          and cli_line("compute", "5/2", "109/57") == "raw = -431/257, lens = L(431,174), |H1| = 431")
    record_acceptance("c01 Example 1.3 -> L(431,174)", ok, f"raw={res.raw} {dt * 1e3:.3f} ms")
    assert ok


def test_c02_example_14():
    res, dt = timed(compute_lens, S(make(3, 2), make(3, 4)))
    ok = (res.raw == INF and res.lens == S3 and dt < 0.010
          and cli_line("compute", "3/2", "3/4").startswith("raw = 1/0, lens = L(1,0) (S3)"))
    record_acceptance("c02 Example 1.4 -> S3", ok, f"raw={res.raw} {dt * 1e3:.3f} ms")
    assert ok


def test_c03_remark_12():
    t = time.perf_counter()
    a = compute_from_words(CF((2,)), CF((1, 2)))
    b = compute_from_words(CF((2,)), CF((2, -2)))
    dt = time.perf_counter() - t
    ok = (a.raw == make(-4) and b.raw == make(4, 3)
          and a.lens == b.lens == LensSpace(4, 3) and dt < 0.010)
    record_acceptance("c03 Remark 1.2 two representations", ok,
                      f"raws {a.raw}, {b.raw} -> {a.lens}, {b.lens} {dt * 1e3:.3f} ms")
    assert ok


GRID = framing_grid(20)


def test_c04_homology_invariant():
    t = time.perf_counter()
    bad = []
    for x in GRID:
        for y in GRID:
            h = abs(x.numerator * y.numerator - x.denominator * y.denominator)
            if compute_lens(S(x, y)).lens.a != h:
                bad.append((x, y))
    dt = time.perf_counter() - t
    ok = not bad and dt < 30
    record_acceptance("c04 canonical a == |pr - qs|", ok,
                      f"{len(GRID) ** 2} inputs, {len(bad)} exceptions, {dt:.1f} s")
    assert ok, bad[:5]


def test_c05_sphere_criterion():
    bad, hits = [], 0
    for x in GRID:
        for y in GRID:
            if abs(x.numerator * y.numerator - x.denominator * y.denominator) == 1:
                hits += 1
                if compute_lens(S(x, y)).lens != S3:
                    bad.append((x, y))
    ok = not bad and hits > 0
    record_acceptance("c05 pr - qs = +-1 implies L(1,0)", ok,
                      f"{hits} inputs with pr - qs = +-1, {len(bad)} exceptions")
    assert ok, bad[:5]


def test_c06_slam_dunk():
    bad, total = [], 0
    for m in range(-10, 11):
        for r in framing_grid(15):
            total += 1
            L = compute_lens(S(make(m), r)).lens
            expected = from_fraction(slam_dunk(m, r))
            if L != expected:
                bad.append((m, r, L, expected))
    classical = sum(homeomorphic(L, e, "classical") for _, _, L, e in bad)
    ok = not bad
    record_acceptance(
        "c06 compute_lens((m, p/q)) == from_fraction(m - q/p)", ok,
        f"{total} inputs, {len(bad)} label mismatches "
        f"({classical} of them classically homeomorphic)")
    assert ok, [(m, str(r), str(L), str(e)) for m, r, L, e in bad[:5]]


def test_c07_move_path_matches_closed_form():
    bad = []
    for x in GRID:
        for y in GRID:
            final, _ = reduce_to_one_component(FramedHopfLink(x, y))
            if final != compute_lens(S(x, y)).raw:
                bad.append((x, y))
    ok = not bad
    record_acceptance("c07 move path == closed form", ok,
                      f"{len(GRID) ** 2} inputs, {len(bad)} exceptions")
    assert ok, bad[:5]


def test_c08_continued_fraction_suite():
    t = time.perf_counter()
    bad = []

    n_round = 0
    for p in range(-200, 201):
        for q in range(1, 201):
            if gcd(p, q) != 1:
                continue
            n_round += 1
            r = make(p, q)
            if evaluate(expand_standard(r)) != r:
                bad.append(("round trip", r))

    n_zero = 0
    for i in range(4):
        for k in range(1, 7 - i):
            for tail in product(range(-4, 5), repeat=k):
                cf = CF((0,) * i + tail)
                n_zero += 1
                if evaluate(collapse_zeros(cf, zeros=i)) != evaluate(cf):
                    bad.append(("zeros", cf))

    tails = [Fraction(n, d) for n in range(-10, 11) for d in range(1, 11) if gcd(n, d) == 1]
    n_tail = 0
    for w in standard_words(5, 5, range(-5, 6)):
        cf = CF(w)
        conv = convergents(cf)
        pn, qn = conv.ps[-1], conv.qs[-1]
        pp, qp = (conv.ps[-2], conv.qs[-2]) if len(w) > 1 else (1, 0)
        for x in tails:
            den = qn * x + qp
            if den == 0:
                continue
            n_tail += 1
            rhs = (pn * x + pp) / den
            lhs = eval_with_tail(cf, make(x.numerator, x.denominator))
            if lhs.as_tuple() != (rhs.numerator, rhs.denominator):
                bad.append(("tail", w, x))

    dt = time.perf_counter() - t
    ok = not bad and dt < 60
    record_acceptance("c08 continued-fraction suite", ok,
                      f"{n_round} round trips, {n_zero} zero-collapses, {n_tail} tail identities, "
                      f"{len(bad)} exceptions, {dt:.1f} s")
    assert ok, bad[:5]


def _twist_composites(word, first):
    """Walk every m-sequence of length <= 4 over [-5, 5].

    first = -1 checks R_{(-1)^n,mn} o ... o R_{-1,m1}(p/q) = [mn;...,m1,a0,...]^((-1)^n);
    first = +1 checks R_{(-1)^(n+1),mn} o ... o R_{1,m1}(p/q) = [mn;...,m1+a0,...]^((-1)^(n+1)).
    Yields (ms, lhs, rhs).
    """
    x0 = evaluate(CF(word))
    ms_range = range(-5, 6)

    def walk(lhs, rhs_value, ms, sign):
        for m in ms_range:
            lhs2 = r_neg(lhs, m) if sign == -1 else r_pos(lhs, m)
            ms2 = (m,) + ms
            if not ms:
                if first == -1:
                    value = fold((m,), x0)
                else:
                    value = evaluate(CF((m + word[0],) + word[1:]))
            else:
                value = fold((m,), rhs_value)
            if len(ms2) <= 3:
                # from scratch on the full word
                if first == -1:
                    full = ms2 + word
                else:
                    full = ms2[:-1] + (ms2[-1] + word[0],) + word[1:]
                assert evaluate(CF(full)) == value
            yield ms2, lhs2, pow_sign(value, sign)
            if len(ms2) < 4:
                yield from walk(lhs2, value, ms2, -sign)

    yield from walk(x0, None, (), first)


def test_c09_operator_identities():
    bad = []
    checks = 0
    for w in standard_words(4, 5, range(-5, 6)):
        x = evaluate(CF(w))
        for first in (-1, 1):
            for ms, lhs, rhs in _twist_composites(w, first):
                checks += 1
                if lhs != rhs:
                    bad.append(("2.3", w, first, ms))
        # R_{(-1)^i,-ai} o ... o R_{1,-a0}(p/q) = [a_{i+1};...]^((-1)^(i+1))
        state = x
        for i in range(len(w) - 1):
            state = r_pos(state, -w[i]) if i % 2 == 0 else r_neg(state, -w[i])
            rest = evaluate(CF(w[i + 1:]))
            zeros = evaluate(CF((0,) * (i + 1) + w[i + 1:]))
            checks += 1
            if not (state == pow_sign(rest, (-1) ** (i + 1)) == zeros):
                bad.append(("2.4", w, i))
        # p/q = [a0;...,al + 1] is driven to exactly 1
        a = w[:-1] + (w[-1] - 1,)
        state = x
        for i, ai in enumerate(a):
            state = r_pos(state, -ai) if i % 2 == 0 else r_neg(state, -ai)
        checks += 1
        if state != make(1):
            bad.append(("2.5", w))
    ok = not bad
    record_acceptance("c09 operator identities", ok, f"{checks} checks, {len(bad)} exceptions")
    assert ok, bad[:5]


def test_c10_diophantine_family():
    bad = []
    pairs = 0
    for p in range(1, 51):
        for q in range(1, 51):
            if gcd(p, q) != 1:
                continue
            pairs += 1
            cf = expand_standard(make(p, q))
            tails = {eval_with_tail(cf, make(l)) for l in range(-10, 11)}
            for sign in (1, -1):
                x0, y0, sx, sy = solve_diophantine(p, q, sign)
                if make(y0, x0) not in tails:
                    bad.append(("tail", p, q, sign))
                for l in range(-10, 11):
                    x, y = x0 + l * sx, y0 + l * sy
                    if p * x - q * y != sign or make(y, x) not in tails:
                        bad.append((p, q, sign, l))
    ok = not bad
    record_acceptance("c10 p*x - q*y = +-1 family", ok,
                      f"{pairs} coprime pairs, {len(bad)} exceptions")
    assert ok, bad[:5]
