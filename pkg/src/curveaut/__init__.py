"""curveaut: exact verification of plane-curve automorphism groups in char 2.

Builds two families of smooth plane curves over GF(2^n), locates their
Galois points, computes automorphism groups by closure and by exhaustive
search, derives ramification data and p-ranks, and emits machine-readable
reports for each quantitative claim.
"""

from .gf2e import (
    BadSubfield,
    DivisionByZero,
    FieldCtx,
    FieldElem,
    FieldError,
    ReducibleModulus,
    default_ctx,
    field_create,
)
from .projgeom import (
    DegenerateFrame,
    ProjLine,
    ProjMap,
    ProjPoint,
    SamePoint,
    fixed_locus,
    frame_map,
    line_through,
    perspectivities_with_center,
)
from .curves import (
    BadLambda,
    PlaneCurve,
    SmallQ,
    build_doublestar,
    build_star,
    intersection_mult,
    is_smooth,
    rational_points,
    stabilizes,
    tangent_line,
    transform_curve,
)

__version__ = "0.1.0"
