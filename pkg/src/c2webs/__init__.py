"""Exact web calculus for the rank-two symplectic quantum group.

Objects are words in two letters for the 4- and 5-dimensional fundamental
modules; morphisms are sliced diagrams built from cups, caps and two
trivalent vertices.  Everything evaluates to exact sparse matrices over
A = Z[q, q^-1, [2]^-1] with optional specialisation to Q, Q(q) or a prime
field, and the light/double ladder machinery provides and verifies bases of
the intertwiner spaces.
"""

from ._backend import backend_name
from .ring import (
    FieldSpec,
    InvalidSpecialization,
    LaurentPoly,
    NonDivisible,
    PrimeField,
    Rationals,
    RatFunc,
    RingElem,
    SymbolicQq,
    qint,
)
from .weights import enumerate_E, hom_dim, tensor_summands
from .reps import LinMap, act_map, cap_map, check_intertwiner, cup_map
from .webs import (
    BoundaryMismatch,
    Diagram,
    WebExpr,
    eval_diagram,
    eval_expr,
    relation_suite,
)
from .ladders import (
    DoubleLadder,
    LadderContext,
    basis_check,
    cellularity_check,
    cellularity_sweep,
    double_ladders,
    express_in_basis,
    light_ladder,
    triangularity_check,
    upside_down_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryMismatch",
    "Diagram",
    "DoubleLadder",
    "FieldSpec",
    "InvalidSpecialization",
    "LadderContext",
    "LaurentPoly",
    "LinMap",
    "NonDivisible",
    "PrimeField",
    "RatFunc",
    "Rationals",
    "RingElem",
    "SymbolicQq",
    "WebExpr",
    "act_map",
    "backend_name",
    "basis_check",
    "cap_map",
    "cellularity_check",
    "cellularity_sweep",
    "check_intertwiner",
    "cup_map",
    "double_ladders",
    "enumerate_E",
    "eval_diagram",
    "eval_expr",
    "express_in_basis",
    "hom_dim",
    "light_ladder",
    "qint",
    "relation_suite",
    "tensor_summands",
    "triangularity_check",
    "upside_down_check",
]
