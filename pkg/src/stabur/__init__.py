"""Stabilizer-basis entropic uncertainty relations.

Exact Pauli-group algebra, stabilizer/graph-state overlaps, entropic bound
evaluation with tightness verification, anticommuting-observable bounds, and
a dense linear-algebra oracle for cross-checking every fast path.
"""

from .entropy import (
    EntropySpec,
    MIN_ENTROPY,
    ProbabilityDistribution,
    SHANNON,
    boundary_curve,
    concavity_factor,
    concavity_factor_derivative,
    entropy,
    entropy_from_sq_expectation,
    flat_entropy,
    is_concave_in_sq_expectation,
    tsallis_concavity_class,
)
from .graphstate import (
    AmplitudeTable,
    Graph,
    ResourceLimitError,
    amplitude_recurrence,
    amplitude_transform,
    graph_generators,
    graph_group,
    graph_sum,
    mu_bound_graphs,
    read_graph_file,
)
from .oracle import (
    DenseState,
    MinimizeResult,
    dense_pauli,
    graph_state_dense,
    measure_distribution,
    minimize_entropy_sum,
    random_pure_state,
    stabilizer_state_dense,
)
from .pauli import (
    DimensionMismatch,
    PauliOperator,
    PauliParseError,
    commutes,
    identity,
    multiply,
    parse_pauli,
    random_pauli,
    trace_inner,
)
from .stabgroup import (
    IntersectionResult,
    InvalidGroupError,
    OverlapReport,
    StabilizerGroup,
    basis_state_group,
    enumerate_elements,
    intersect,
    intersect_by_enumeration,
    mu_bound_stabilizer,
    overlap_squared,
    random_group,
    read_generator_file,
    stabilizer_expectation,
    validate_group,
)
from .urelations import (
    MatchingResult,
    MetaCheckResult,
    ObservableSet,
    SymmetricDifference,
    URReport,
    anticommutation_count,
    anticommuting_bound,
    check_tightness,
    entropy_of_observable,
    group_ur_verify,
    meta_uncertainty_check,
    min_entropy_multibasis_bound,
    mu_bound_general,
    perfect_matching,
    state_from_expectations,
    symmetric_difference,
)

__version__ = "0.1.0"
