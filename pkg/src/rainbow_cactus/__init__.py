"""Strong rainbow connection numbers and optimal colorings for odd cacti."""

from .decomposition import (
    Block,
    BlockCutTree,
    BlockKind,
    Classification,
    Decomposition,
    GraphClass,
    RejectionReason,
    classify,
    decompose,
    leaf_blocks,
)
from .errors import RainbowCactusError
from .generator import GenSpec, generate
from .graph import (
    DistanceTable,
    Graph,
    Path,
    all_shortest_paths,
    bfs_distances,
    build_graph,
    format_edge_list,
    load_edge_list,
    parse_edge_list,
    unique_shortest_path,
)
from .oracle import (
    BruteForceResult,
    RainbowWitness,
    VerificationOutcome,
    brute_force_search,
    brute_force_src,
    check_distinct_black_colors,
    verify_pairs,
    verify_strong_rainbow,
)
from .partition import (
    BlackWhitePartition,
    PropertyCheck,
    ValidationReport,
    build_canonical_partition,
    graph_leaves,
    lower_bound,
    validate_partition,
)
from .pipeline import GraphAnalysis, analyze_graph
from .segments import (
    AntipodalIndex,
    CycleSegment,
    SegmentCatalog,
    SegmentClass,
    antipodal_edge,
    antipodal_vertex,
    build_antipodal_index,
    compute_e_ant,
    enumerate_segments,
)
from .solver import (
    EdgeColoring,
    Separation,
    SrcCase,
    SrcResult,
    SrcStats,
    assert_line18_choice,
    separate,
    src_formula,
    strong_rainbow_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "AntipodalIndex",
    "BlackWhitePartition",
    "Block",
    "BlockCutTree",
    "BlockKind",
    "BruteForceResult",
    "Classification",
    "CycleSegment",
    "Decomposition",
    "DistanceTable",
    "EdgeColoring",
    "GenSpec",
    "Graph",
    "GraphAnalysis",
    "GraphClass",
    "Path",
    "PropertyCheck",
    "RainbowCactusError",
    "RainbowWitness",
    "RejectionReason",
    "SegmentCatalog",
    "SegmentClass",
    "Separation",
    "SrcCase",
    "SrcResult",
    "SrcStats",
    "ValidationReport",
    "VerificationOutcome",
    "all_shortest_paths",
    "analyze_graph",
    "antipodal_edge",
    "antipodal_vertex",
    "assert_line18_choice",
    "bfs_distances",
    "brute_force_search",
    "brute_force_src",
    "build_antipodal_index",
    "build_canonical_partition",
    "build_graph",
    "check_distinct_black_colors",
    "classify",
    "compute_e_ant",
    "decompose",
    "enumerate_segments",
    "format_edge_list",
    "generate",
    "graph_leaves",
    "leaf_blocks",
    "load_edge_list",
    "lower_bound",
    "parse_edge_list",
    "separate",
    "src_formula",
    "strong_rainbow_coloring",
    "unique_shortest_path",
    "validate_partition",
    "verify_pairs",
    "verify_strong_rainbow",
]
