"""Identifying codes in graphs: constructions, exact solving, and bound
certification at desk scale."""

from .bounds import BoundEntry, BoundReport, evaluate_bounds
from .construct import (
    PreconditionError,
    ShiftTrace,
    corona2_optimal_code,
    parity_shift_code,
    seven_cycle_star_code,
    support_complement_code,
    twin_free_bipartite_code,
)
from .families import (
    FamilySpec,
    all_trees,
    corona,
    gen,
    is_2corona,
    is_isomorphic,
    random_tree,
    tree_canonical_form,
)
from .graph import (
    INFINITE_GIRTH,
    Graph,
    GraphError,
    GraphProfile,
    bfs_layers,
    closed_twins,
    format_edge_list,
    from_edge_list,
    girth,
    has_twin_deg_ge2,
    load_graph,
    open_twins,
    parse_edge_list,
    profile,
    save_graph,
)
from .identify import (
    CodeCertificate,
    NOT_TOTAL_DOMINATING,
    UNDOMINATED,
    UNSEPARATED,
    VALID,
    i_set,
    verify_identifying,
    verify_td_identifying,
)
from .solver import (
    DEFAULT_BUDGET,
    IsolatedVertexError,
    NotIdentifiableError,
    SolveResult,
    gamma_id,
    gamma_tid,
)
from .survey import BoundViolation, SurveySummary, survey_trees

__version__ = "0.1.0"

__all__ = [
    "BoundEntry",
    "BoundReport",
    "BoundViolation",
    "CodeCertificate",
    "DEFAULT_BUDGET",
    "FamilySpec",
    "Graph",
    "GraphError",
    "GraphProfile",
    "INFINITE_GIRTH",
    "IsolatedVertexError",
    "NOT_TOTAL_DOMINATING",
    "NotIdentifiableError",
    "PreconditionError",
    "ShiftTrace",
    "SolveResult",
    "SurveySummary",
    "UNDOMINATED",
    "UNSEPARATED",
    "VALID",
    "all_trees",
    "bfs_layers",
    "closed_twins",
    "corona",
    "corona2_optimal_code",
    "evaluate_bounds",
    "format_edge_list",
    "from_edge_list",
    "gamma_id",
    "gamma_tid",
    "gen",
    "girth",
    "has_twin_deg_ge2",
    "i_set",
    "is_2corona",
    "is_isomorphic",
    "load_graph",
    "open_twins",
    "parity_shift_code",
    "parse_edge_list",
    "profile",
    "random_tree",
    "save_graph",
    "seven_cycle_star_code",
    "support_complement_code",
    "survey_trees",
    "tree_canonical_form",
    "twin_free_bipartite_code",
    "verify_identifying",
    "verify_td_identifying",
]
