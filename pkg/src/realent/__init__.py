"""realent: entanglement detection and entanglement-measure lower bounds
via bordered realignment matrices.

The package detects entanglement in finite-dimensional density matrices
by comparing the trace norm of a bordered realignment matrix against the
ceiling it cannot exceed for separable states, and turns the excess into
lower bounds on concurrence, CREN, and GME concurrence.  Threshold
searches and parameter sweeps locate where detection kicks in along
one-parameter state families.
"""

from .criteria import (
    DECISION_TOLERANCE,
    BipartiteParams,
    CriterionVerdict,
    MultipartiteParams,
    Verdict,
    bipartition_average_norm,
    bordered_matrix,
    bordered_realignment_test,
    full_separability_bound,
    full_separability_test,
    gme_test,
    merge_bipartition,
    multipartite_bordered_matrix,
    ppt_test,
    realignment_test,
    repeated_vec,
    separability_bound,
)
from .estimators import EntanglementBoundTransformer, EntanglementDetector
from .linalg import (
    kron,
    partial_trace,
    partial_transpose,
    permute_systems,
    realign,
    schmidt_coefficients,
    singular_values,
    trace_norm,
    vectorize,
)
from .measures import (
    BoundResult,
    Measure,
    concurrence_lower_bound,
    concurrence_pure,
    cren_lower_bound,
    cren_pure,
    gme_concurrence_lower_bound,
    gme_concurrence_pure,
    realignment_concurrence_baseline,
)
from .search import (
    CriterionSpec,
    NoThresholdFound,
    Objective,
    SweepGrid,
    SweepOutcome,
    ThresholdResult,
    evaluate,
    find_threshold,
    margin,
    sweep,
    tabulate_curve,
)
from .states import (
    DensityMatrix,
    StateFamily,
    ValidationReport,
    example1_family,
    ghz3_family,
    ghz3_state,
    ghz_epsilon_family,
    ghz_epsilon_state,
    horodecki_2x4,
    horodecki_3x3,
    horodecki_3x3_family,
    load_state,
    mix_with_white_noise,
    random_mixed,
    random_pure,
    random_separable,
    save_state,
    tiles_family,
    tiles_upb_state,
    validate,
    w_bar_family,
    w_bar_state,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # linalg
    "vectorize",
    "kron",
    "realign",
    "singular_values",
    "trace_norm",
    "partial_trace",
    "partial_transpose",
    "permute_systems",
    "schmidt_coefficients",
    # states
    "DensityMatrix",
    "StateFamily",
    "ValidationReport",
    "validate",
    "mix_with_white_noise",
    "horodecki_2x4",
    "example1_family",
    "horodecki_3x3",
    "horodecki_3x3_family",
    "tiles_upb_state",
    "tiles_family",
    "w_bar_state",
    "w_bar_family",
    "ghz_epsilon_state",
    "ghz_epsilon_family",
    "ghz3_state",
    "ghz3_family",
    "random_pure",
    "random_mixed",
    "random_separable",
    "save_state",
    "load_state",
    # criteria
    "DECISION_TOLERANCE",
    "BipartiteParams",
    "MultipartiteParams",
    "Verdict",
    "CriterionVerdict",
    "repeated_vec",
    "bordered_matrix",
    "separability_bound",
    "bordered_realignment_test",
    "realignment_test",
    "ppt_test",
    "merge_bipartition",
    "bipartition_average_norm",
    "gme_test",
    "multipartite_bordered_matrix",
    "full_separability_bound",
    "full_separability_test",
    # measures
    "Measure",
    "BoundResult",
    "concurrence_pure",
    "cren_pure",
    "gme_concurrence_pure",
    "concurrence_lower_bound",
    "cren_lower_bound",
    "gme_concurrence_lower_bound",
    "realignment_concurrence_baseline",
    # search
    "CriterionSpec",
    "ThresholdResult",
    "Objective",
    "SweepGrid",
    "SweepOutcome",
    "NoThresholdFound",
    "evaluate",
    "margin",
    "find_threshold",
    "sweep",
    "tabulate_curve",
    # estimators
    "EntanglementDetector",
    "EntanglementBoundTransformer",
]
