"""Edge coloring with (1+eps)*Delta and Delta + eps*alpha colors through degree splitting.

The pipeline splits a graph's edges into two halves of nearly half the
degree, recurses ``h`` times, colors each leaf with Vizing fans and stacks
the leaf palettes.  Undirected graphs split along Euler cycles; the
arboricity-sensitive variant orients the graph by min-degree peeling and
splits along alternating-directions paths instead.
"""

from .adsplit import (
    INCOMING,
    OUTGOING,
    ADDecomposition,
    ADPath,
    OrientedPartition,
    ad_paths_decomposition,
    oriented_degree_split,
)
from .euler import EdgePartition, degree_split, euler_cycle
from .generators import GenSpec, Generated, SplitMix64, generate, random_tree
from .graph import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    Orientation,
    SelfLoopError,
    Subgraph,
    VertexRangeError,
    build_graph,
    induce_subgraph,
    max_degree,
)
from .io import (
    FormatError,
    parse_coloring,
    parse_edge_list,
    parse_orientation,
    write_coloring,
    write_edge_list,
    write_orientation,
)
from .orient import PeelResult, arboricity_estimate, degeneracy, forests_decomposition_orientation
from .recursive import (
    ColoringRun,
    RecursionTrace,
    TraceNode,
    TradeoffParams,
    arboricity_edge_coloring,
    color_with_epsilon,
    compute_h,
    edge_coloring,
    oriented_edge_coloring,
    parse_epsilon,
)
from .verify import (
    CheckResult,
    check_ad_decomposition,
    check_discrepancy,
    check_orientation,
    check_palette,
    check_proper,
    check_trace,
)
from .vizing import Coloring, free_color, invert_cd_path, vizing_color

__version__ = "0.1.0"

__all__ = [
    "ADDecomposition",
    "ADPath",
    "CheckResult",
    "Coloring",
    "ColoringRun",
    "DuplicateEdgeError",
    "EdgePartition",
    "FormatError",
    "GenSpec",
    "Generated",
    "Graph",
    "GraphError",
    "INCOMING",
    "OUTGOING",
    "Orientation",
    "OrientedPartition",
    "PeelResult",
    "RecursionTrace",
    "SelfLoopError",
    "SplitMix64",
    "Subgraph",
    "TraceNode",
    "TradeoffParams",
    "VertexRangeError",
    "ad_paths_decomposition",
    "arboricity_edge_coloring",
    "arboricity_estimate",
    "build_graph",
    "check_ad_decomposition",
    "check_discrepancy",
    "check_orientation",
    "check_palette",
    "check_proper",
    "check_trace",
    "color_with_epsilon",
    "compute_h",
    "degeneracy",
    "degree_split",
    "edge_coloring",
    "euler_cycle",
    "forests_decomposition_orientation",
    "free_color",
    "generate",
    "induce_subgraph",
    "invert_cd_path",
    "max_degree",
    "oriented_degree_split",
    "oriented_edge_coloring",
    "parse_coloring",
    "parse_edge_list",
    "parse_epsilon",
    "parse_orientation",
    "random_tree",
    "vizing_color",
    "write_coloring",
    "write_edge_list",
    "write_orientation",
]
