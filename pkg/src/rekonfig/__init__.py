"""Independent-set and vertex-cover reconfiguration under the k-token-
jumping and k-token-sliding rules: exact solvers, an XP vertex-cover
algorithm parameterized by the guaranteed value, and gadget reduction
compilers with brute-force oracles for cross-checking.
"""

from .bounds import LengthBound, find_simple_sequence, greedy_coloring, shortest_length_bound
from .errors import (
    FormatSemanticsError,
    FormatSyntaxError,
    GraphConstructionError,
    NonGoodCrossingError,
    PreconditionError,
    RekonfigError,
    ResourceBudgetError,
    SizeMismatchError,
)
from .exact import (
    Budget,
    SolveResult,
    TarResult,
    enumerate_feasible,
    max_independent_set,
    min_vertex_cover,
    reachability_classes,
    solve_exact,
    solve_tar_maxmin,
    solve_tar_minmax,
)
from .graph import (
    FeasibilityKind,
    Graph,
    ReconfigInstance,
    ReconfigSequence,
    Rule,
    RuleKind,
    Verdict,
    VertexSet,
    adjacent_ktj,
    adjacent_kts,
    closed_neighborhood,
    complement_set,
    is_independent_set,
    is_vertex_cover,
    line_graph,
    new_graph,
    open_neighborhood,
    verify_sequence,
)
from .matching import (
    Bipartition,
    Matching,
    bipartition_of,
    has_perfect_matching_between,
    konig_min_vertex_cover,
    maximum_matching,
)
from .oracles import (
    Assignment,
    CnfFormula,
    NclConfig,
    NclMachine,
    NclVertexKind,
    SatMode,
    config_is_valid,
    enumerate_perfect_matchings,
    is_perfect_matching,
    ncl_reachable,
    ncl_valid_configs,
    pmr_reachable,
    sat_decide,
)
from .xp import (
    CliqueCompressedGraph,
    build_clique_compressed_graph,
    clique_edge_oracle,
    xp_vcr_solve,
)

__version__ = "0.1.0"
