"""Partition combinatorics, Schur calculus and vanishing criteria for ample vector bundles."""

from .errors import DomainError, HypothesisError, TraceClosureError
from .partitions import (
    EMPTY,
    Cell,
    Partition,
    SquareDecomposition,
    add_rectangle,
    adjoin_k,
    conjugate,
    durfee_rank,
    hook_length,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    square_decompose,
)
from .schur import (
    ZERO,
    DecompositionMultiset,
    FactorKind,
    PowerFactor,
    dim_schur,
    hook_partition,
    pieri_sym,
    pieri_wedge,
    product_decompose,
    sym,
    tensor_multiplicity,
    wedge,
)
from .bundles import BundleExpression, format_bundle, parse_bundle
from .vanishing import (
    Positivity,
    PositivityContext,
    Theorem,
    VanishingVerdict,
    a_bound_dominates,
    aprime_to_a_witness,
    corollary_b,
    corollary_c,
    multi_bundle_threshold,
    q_statistic,
    theorem_a,
    theorem_a_prime,
)
from .borel_lepotier import (
    E1Descriptor,
    InductionTrace,
    forced_zero_bound,
    induction_trace_step1,
    induction_trace_step2,
    lemma_d_term,
    lemma_dprime_page,
)
from .loci import (
    LocusProblem,
    Shape,
    expected_dim,
    jpw_terms,
    lascoux_terms,
    q_hook_identity_check,
    theorem_e_verdict,
    theorem_f_verdict,
)

__version__ = "0.1.0"
