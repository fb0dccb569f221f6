"""Antimatroids through isotone operators, monotone linkages and antimatroid languages."""
from .chain import ChainStep, ChainTrace, OptResult, run_chain, verify_against_oracle
from .correspondence import (
    BridgedNesting,
    CorrespondenceReport,
    bridge_f_from_pi,
    shortest_critical_prefix,
    verify_correspondence,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    EmptyContinuationError,
    NotAntimatroidError,
    VerificationError,
)
from .kernels import BACKEND
from .language import (
    NestingFunction,
    SimpleLanguage,
    family_from_language,
    greedy_minimax,
    is_antimatroid_language,
    language_from_family,
    nesting_W,
)
from .linkage import (
    LinkageSpec,
    check_monotone,
    failure_linkage,
    linkage_value,
    objective_F,
    objective_F_psi,
    single_linkage,
    table_linkage,
    weight_minus_size,
)
from .operators import (
    GenerationTrace,
    IsotoneWitness,
    OperatorSpec,
    chain_operator,
    check_isotone,
    check_k_isotone,
    evaluate,
    full_operator,
    generate_family,
    max_order_operator,
    operator_from_family,
    poset_min_operator,
    table_operator,
    truncated_operator,
)
from .sets import (
    GroundSet,
    Poset,
    SetFamily,
    basis_of,
    close_under_union,
    elements,
    feasible_continuations,
    fmt_set,
    has_interval_property,
    is_accessible,
    is_antimatroid,
    is_union_closed,
    mask_of,
    max_feasible,
    rank,
    satisfies_exchange,
    truncate,
    verification,
)

__version__ = "0.1.0"
