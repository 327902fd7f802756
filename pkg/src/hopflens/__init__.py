"""Lens spaces from rational surgery on the Hopf link, in exact arithmetic."""
from .arith import (
    INF,
    ONE,
    ZERO,
    ExtRational,
    ParseError,
    PreconditionError,
    add_int,
    make,
    parse_rational,
    pow_sign,
    recip,
)
from .contfrac import (
    ContinuedFraction,
    Convergents,
    collapse_zeros,
    convergents,
    decrement_last,
    eval_with_tail,
    evaluate,
    expand_standard,
    is_standard,
    parse_cf,
    reverse_negate,
)
from .engine import (
    SurgeryInput,
    SurgeryResult,
    compute_from_words,
    compute_lens,
    homology_order,
    solve_diophantine,
    sphere_criterion,
    tail_parameter,
)
from .lens import S3, LensSpace, S2xS1, from_fraction, homeomorphic, is_sphere
from .rolfsen import (
    FramedHopfLink,
    MoveTrace,
    TwistMove,
    apply_twist,
    delete_infinity,
    r_neg,
    r_pos,
    reduce_to_one_component,
    slam_dunk,
)

__version__ = "0.1.0"
