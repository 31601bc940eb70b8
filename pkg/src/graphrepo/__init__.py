"""graphrepo: graph analytics, generation, sampling, and a dataset catalog
with an HTTP API — the backend for interactive network exploration."""

from .clustering import (
    NodeLabeling,
    detect_communities,
    discover_roles,
    extract_role_features,
    modularity,
)
from .generators import GeneratorConfig, PatternSpec, generate
from .graph import Graph, GraphParseError, build_graph, connected_components, parse_edge_list
from .layout import compute_layout
from .sampling import SampleConfig, SampleResult, sample
from .stats import (
    Distribution,
    GraphStats,
    NodeStatsTable,
    compute_all,
    count_triangles,
    distribution,
    kcore_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphParseError",
    "parse_edge_list",
    "build_graph",
    "connected_components",
    "GraphStats",
    "NodeStatsTable",
    "Distribution",
    "compute_all",
    "count_triangles",
    "kcore_decomposition",
    "distribution",
    "GeneratorConfig",
    "PatternSpec",
    "generate",
    "NodeLabeling",
    "detect_communities",
    "modularity",
    "extract_role_features",
    "discover_roles",
    "SampleConfig",
    "SampleResult",
    "sample",
    "compute_layout",
    "__version__",
]
