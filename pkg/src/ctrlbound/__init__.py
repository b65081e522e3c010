"""Distance-based lower bounds on the controllability of leader-follower networks.

The rank of the controllability matrix of a diffusively coupled
leader-follower network is bounded below, for every strictly positive
weighting, by the length of the longest pseudo-monotonically increasing
sequence of distance-to-leaders vectors. This package computes that
bound, cross-validates it against an exact-arithmetic rank oracle, and
uses it to pick minimal leader sets that certify a target controllable
dimension whatever the coupling weights turn out to be.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    DLMatrix,
    PMISequence,
    brute_force_delta,
    delta_bound,
    dl_vectors,
    is_pmi,
    longest_pmi,
    mu_bound,
    pmi_level_sets,
    report_json,
    upsilon_count,
)
from .ctrb import (
    RankReport,
    Verdict,
    check_lemma1,
    check_theorem,
    ctrb_matrix,
    exact_rank,
    input_matrix,
    numerical_rank,
    rank,
    sample_weights,
    verdict_json,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DisconnectedGraphError,
    DomainError,
    EdgeListParseError,
    GenerationError,
    GraphValidationError,
)
from .experiments import ExperimentRow, ExperimentSpec, emit_csv, run_experiment
from .generators import GenSpec, generate, resample_until_connected
from .graph import (
    Graph,
    adjacency_matrix,
    bfs_distances,
    build_graph,
    format_edge_list,
    hops_to,
    is_connected,
    is_strongly_connected,
    laplacian,
    load_graph,
    parse_edge_list,
    save_graph,
)
from .select import (
    SelectionProblem,
    SelectionResult,
    prune_by_upsilon,
    select_exhaustive,
    select_greedy,
    select_leaders,
)

__all__ = [name for name in dir() if not name.startswith("_")]
