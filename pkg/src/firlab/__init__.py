"""firlab: factorization in skew polynomial rings and other 2-firs.

Skew polynomials K[t; S, D] over small finite fields (and over F_p(x) with
S(x) = x^2 where right-sided operations can fail), with similarity,
eigenrings, algebraic sets of atoms, fully reducible elements, and the
series ring Z + xQ[[x]].
"""
from .errors import (
    FieldMismatchError,
    FirlabError,
    InfiniteFieldError,
    InvariantViolation,
    NotAnAtom,
    NotComputable,
    NotFullyReducible,
    ParseError,
)
from .twisted_field import FiniteField, FunctionField, RationalField, parse_field
from .ore_poly import (
    Factorization,
    SkewPoly,
    conj,
    enumerate_atoms,
    factor_atomic,
    is_atom,
    left_divmod,
    length,
    lgcd_rlcm,
    llcm,
    mul,
    parse_poly,
    rgcd,
    right_divmod,
)
from .similarity import (
    dim_over_eigenring,
    eigenring,
    hom_space,
    is_similar,
    lambda_kernel,
    similar_linear,
)
from .algset import (
    AlgebraicSet,
    basis,
    class_decompose,
    closure,
    dependence_via_atoms,
    full_decompose,
    is_dependent,
    is_full,
    is_independent,
    is_right_algebraic,
    rank,
    rank_decomposition,
    rank_theorems_check,
    set_conj,
    set_llcm,
    v_set,
)
from .wedderburn import (
    i_a_set,
    idealizer,
    in_two_sided_sum,
    is_fully_reducible,
    minimal_decomposition,
    product_check,
    product_rank_check,
    right_decomposition,
    wedderburn_report,
)
from .bezout_series import (
    PrincipalIdeal,
    TruncatedSeries,
    ideal_intersection,
    ideal_sum,
    nonatomic_witness,
    normal_form,
    parse_series,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicSet",
    "Factorization",
    "FieldMismatchError",
    "FirlabError",
    "InfiniteFieldError",
    "InvariantViolation",
    "NotAnAtom",
    "NotComputable",
    "NotFullyReducible",
    "ParseError",
    "PrincipalIdeal",
    "SkewPoly",
    "TruncatedSeries",
    "basis",
    "class_decompose",
    "closure",
    "conj",
    "dependence_via_atoms",
    "dim_over_eigenring",
    "eigenring",
    "enumerate_atoms",
    "factor_atomic",
    "full_decompose",
    "hom_space",
    "i_a_set",
    "ideal_intersection",
    "ideal_sum",
    "idealizer",
    "in_two_sided_sum",
    "is_atom",
    "is_dependent",
    "is_full",
    "is_fully_reducible",
    "is_independent",
    "is_right_algebraic",
    "is_similar",
    "lambda_kernel",
    "left_divmod",
    "length",
    "lgcd_rlcm",
    "llcm",
    "minimal_decomposition",
    "mul",
    "nonatomic_witness",
    "normal_form",
    "parse_poly",
    "parse_series",
    "product_check",
    "product_rank_check",
    "rank",
    "rank_decomposition",
    "rank_theorems_check",
    "rgcd",
    "right_decomposition",
    "right_divmod",
    "set_conj",
    "set_llcm",
    "similar_linear",
    "v_set",
    "wedderburn_report",
]
