"""Exact toolkit for Roth-Lempel and generalized Roth-Lempel codes over GF(p^m)."""

from .code import (
    CodeClass,
    LinearCode,
    SingletonReport,
    WeightDistribution,
    classify,
    dual,
    enumerate_distribution,
    macwilliams_transform,
    weight_distribution,
)
from .errors import (
    NmdsError,
    NotPrime,
    NotIrreducible,
    OverflowGuard,
    DivisionByZero,
    MixedFields,
    NotSquare,
    BadDimension,
    DuplicatePoints,
    SingularTailBlock,
    DimensionOutOfRange,
    BudgetExceeded,
    NonIntegerResult,
    NegativeCount,
    ZeroCode,
)
from .formulas import (
    Prediction,
    SubsetSumQuery,
    a_min_weight_closed,
    nmds_full_distribution,
    predict,
    subset_sum_count_bruteforce,
    subset_sum_count_closed,
    unified_min_weight_count,
    v_of_b,
)
from .gf import Field, FieldElement, arith, canonical_orderings, make_field
from .grl import GrlSpec, grl_encode, grl_generator, rl_code, rs_generator
from .matrix import (
    Matrix,
    all_k_column_subsets_nonsingular,
    det,
    nullspace,
    parse_matrix,
    rank_rref,
    vandermonde_gap_closed,
    vandermonde_gap_det,
)
from .report import CodeReport, canonical_json

__version__ = "0.1.0"
