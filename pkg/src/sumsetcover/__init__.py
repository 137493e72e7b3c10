"""Exact witness-subset covers for sumsets in F_q^n.

For subsets S, T of F_q^n this package constructs S* within S and T* within
T such that (S* + T) union (S + T*) equals S + T, with |S*| + |T*| bounded
by an explicit monomial-counting budget, and certifies every inequality used
along the way.  Brute-force oracles and consequence checkers (progression-free
sets, matching-only sum-free families) provide independent ground truth at
desk scale.
"""

from .cover import (
    LineCover,
    PivotBasis,
    first_nonzero_position,
    line_cover,
    maximum_matching,
    pivot_basis,
)
from .decompose import (
    Decomposition,
    DecompositionCertificate,
    PipelineRun,
    choose_degree,
    decompose,
    degree_bound,
    run_pipeline,
    symmetric_subset,
    verify_decomposition,
)
from .errors import (
    BoundViolated,
    DegreeTooHigh,
    DependentInput,
    DimensionMismatch,
    EnumerationTooLarge,
    NotPrime,
    ParseError,
    PreconditionFailed,
    SearchTooLarge,
    SumsetCoverError,
    ValidationError,
    ZeroMatrix,
)
from .field import (
    DEFAULT_ENUM_CAP,
    FieldVector,
    PointSet,
    PrimeField,
    all_points,
    complement,
    is_prime,
    make_field,
    sumset,
    vec_add,
)
from .linalg import matrix_rank, null_space, rref
from .monomials import (
    CountTable,
    Monomial,
    capset_bound_M,
    count_m,
    degree_counts,
    enumerate_monomials,
    growth_estimate,
    monomial_key,
)
from .oracle import (
    DEFAULT_SEARCH_CAP,
    CapsetReport,
    OracleResult,
    OrderedPairFamily,
    SumfreeReport,
    check_capset_bound,
    check_sumfree_bound,
    greedy_decomposition,
    is_ap_free,
    is_matching_sumfree,
    oracle_min_decomposition,
)
from .polynomials import (
    Polynomial,
    eval_monomial,
    eval_poly,
    monomial_poly,
    poly_add,
    poly_const,
    poly_degree,
    poly_from_terms,
    poly_scale,
    poly_sub,
    poly_zero,
)
from .summatrix import (
    ClpCertificate,
    SumMatrix,
    clp_decompose,
    clp_reconstruct,
    sum_matrix,
)
from .vanishing import PolySubspace, build_vanishing_space

__version__ = "0.1.0"
