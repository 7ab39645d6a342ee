"""dimerq: exact analysis of domino-tiling generating functions.

The package counts domino tilings of k x n rectangles exactly, constructs
the explicit denominator of the width-k generating function from
trigonometric algebraic units with certified integer coefficients, decides
whether that denominator has repeated roots (by exact GCD or by certified
unit relations), and provides the Pell-number computations these questions
connect to.
"""

from .ball import Ball
from .denominator import (
    CertifiedPoly,
    PrecisionSchedule,
    SubsetProduct,
    TrigUnit,
    build_qk,
    recurrence_check,
    subset_product,
    trig_unit,
)
from .dimers import (
    TilingCount,
    TilingSeries,
    brute_force_count,
    count_tilings,
    tiling_series,
)
from .errors import (
    CertificationError,
    DimerqError,
    InternalInvariantError,
    ResourceLimitError,
)
from .identities import (
    Relation,
    certify_relation,
    classify,
    primitive_filter,
    relation_norm,
    scan_relations,
)
from .pell import (
    LagariasReport,
    PellPair,
    PrimitivePart,
    RnReport,
    compute_rn,
    lagarias_checks,
    ljunggren_scan,
    pell_numbers,
    primitive_part,
    robinson_scan,
)
from .polys import (
    IntPoly,
    SquarefreeDecomposition,
    poly_gcd,
    poly_mul,
    series_mul_truncate,
    squarefree_decompose,
)
from .roots import (
    ReducedFraction,
    RepeatedRootReport,
    compute_pk,
    repeated_roots_criterion,
    repeated_roots_exact,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "CertificationError",
    "CertifiedPoly",
    "DimerqError",
    "IntPoly",
    "InternalInvariantError",
    "LagariasReport",
    "PellPair",
    "PrecisionSchedule",
    "PrimitivePart",
    "ReducedFraction",
    "Relation",
    "RepeatedRootReport",
    "ResourceLimitError",
    "RnReport",
    "SquarefreeDecomposition",
    "SubsetProduct",
    "TilingCount",
    "TilingSeries",
    "TrigUnit",
    "brute_force_count",
    "build_qk",
    "certify_relation",
    "classify",
    "compute_pk",
    "compute_rn",
    "count_tilings",
    "lagarias_checks",
    "ljunggren_scan",
    "pell_numbers",
    "poly_gcd",
    "poly_mul",
    "primitive_filter",
    "primitive_part",
    "recurrence_check",
    "relation_norm",
    "repeated_roots_criterion",
    "repeated_roots_exact",
    "robinson_scan",
    "scan_relations",
    "series_mul_truncate",
    "squarefree_decompose",
    "subset_product",
    "tiling_series",
    "trig_unit",
]
