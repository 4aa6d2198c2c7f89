"""Audit-checked coloring toolkit for hereditary graph classes.

Exact solvers, induced-pattern detection, class colorers whose structural
case analysis is re-checked at runtime, extremal witness generators, and a
searcher for high-chromatic members.
"""

from .catalog import catalog_names, named_graph
from .colorers import (
    BINDINGS,
    COLORERS,
    ClassMembershipError,
    ClusterPreconditionError,
    DominationRule,
    cluster_color,
    color_c5_free,
    color_hammer_free,
    color_k4_free,
    color_kite_free,
    color_p2k3_free,
    domination_fixpoint,
    domination_reduce,
    evaluate_bound,
    lift_coloring,
)
from .exact import (
    BudgetExhausted,
    ChromaticResult,
    CliqueResult,
    ColorabilityResult,
    SolveBudget,
    chromatic_number,
    clique_number,
    greedy_coloring,
    k_colorable,
    require_chromatic,
    require_clique_number,
    verify_coloring,
)
from .generators import (
    HuntResult,
    SampleConfig,
    SampleExhausted,
    SplitMix64,
    extremal_family,
    gnp,
    hunt,
    mutate_within_class,
    sample_class,
)
from .graphs import (
    Coloring,
    Graph,
    closed_neighbor_set,
    complement,
    complete,
    cycle,
    disjoint_union,
    distances_from,
    empty,
    expansion,
    is_isomorphic,
    join,
    make_basic,
    min_degree,
    mycielskian,
    neighbor_set,
    neighborhood,
    non_neighbors,
    path,
)
from .io import (
    FORMATS,
    GraphParseError,
    dumps,
    loads,
    read_dimacs,
    read_graph,
    read_graph6,
    write_dimacs,
    write_graph,
    write_graph6,
)
from .patterns import (
    CLASSES,
    PATTERNS,
    ClassSpec,
    Embedding,
    Membership,
    Pattern,
    class_by_name,
    count_induced,
    embedding_is_induced,
    find_induced,
    is_member,
    pattern_by_name,
)
from .suite import SuiteRecord, SuiteReport, run_suite
from .trace import AuditViolation, ProofTrace, TraceStep, evaluate_step, replay

__version__ = "0.1.0"

__all__ = [
    "AuditViolation",
    "BINDINGS",
    "BudgetExhausted",
    "CLASSES",
    "COLORERS",
    "ChromaticResult",
    "ClassMembershipError",
    "ClassSpec",
    "CliqueResult",
    "ClusterPreconditionError",
    "ColorabilityResult",
    "Coloring",
    "Embedding",
    "FORMATS",
    "Graph",
    "GraphParseError",
    "HuntResult",
    "Membership",
    "PATTERNS",
    "Pattern",
    "ProofTrace",
    "SampleConfig",
    "SampleExhausted",
    "SolveBudget",
    "SplitMix64",
    "SuiteRecord",
    "SuiteReport",
    "TraceStep",
    "catalog_names",
    "chromatic_number",
    "class_by_name",
    "clique_number",
    "closed_neighbor_set",
    "cluster_color",
    "color_c5_free",
    "color_hammer_free",
    "color_k4_free",
    "color_kite_free",
    "color_p2k3_free",
    "complement",
    "complete",
    "count_induced",
    "cycle",
    "disjoint_union",
    "distances_from",
    "DominationRule",
    "domination_fixpoint",
    "domination_reduce",
    "dumps",
    "embedding_is_induced",
    "empty",
    "evaluate_bound",
    "evaluate_step",
    "expansion",
    "extremal_family",
    "find_induced",
    "gnp",
    "greedy_coloring",
    "hunt",
    "is_isomorphic",
    "is_member",
    "join",
    "k_colorable",
    "lift_coloring",
    "loads",
    "make_basic",
    "min_degree",
    "mutate_within_class",
    "mycielskian",
    "named_graph",
    "neighbor_set",
    "neighborhood",
    "non_neighbors",
    "path",
    "pattern_by_name",
    "read_dimacs",
    "read_graph",
    "read_graph6",
    "replay",
    "require_chromatic",
    "require_clique_number",
    "run_suite",
    "sample_class",
    "verify_coloring",
    "write_dimacs",
    "write_graph",
    "write_graph6",
]
