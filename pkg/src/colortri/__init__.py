"""Triangle counting by colorful vertex sampling.

Modules
-------
graph        immutable undirected graphs, SNAP edge-list parsing
exact        forward node-iterator counting, per-edge/per-vertex stats, brute-force oracle
sampler      colorful sampling and the independent edge-sampling baseline
control      sufficient sampling rates, median boosting, adaptive color count
mapreduce    simulated map/shuffle/reduce pipeline with load metrics
generators   synthetic graphs
experiments  repeated trials and reports
"""

from .control import (
    AdaptiveResult,
    EstimatorConfig,
    PBound,
    adaptive_estimate,
    median_boost,
    sufficient_p_chernoff,
    sufficient_p_second_moment,
)
from .errors import ContractError, GraphParseError, NoTrianglesError, OracleLimitError
from .exact import (
    ExactCount,
    TriangleStats,
    brute_force_count,
    count_triangles_exact,
    enumerate_triangles,
    triangle_stats,
)
from .experiments import ExperimentReport, UsageError, compare_samplers, run_report
from .generators import generate_disjoint_triangles, generate_gnp
from .graph import Graph, ParseOptions, neighbors, parse_edge_list, read_edge_list
from .mapreduce import KeyedEdge, ShuffleMetrics, map_phase, reduce_phase, run_pipeline, shuffle
from .sampler import (
    Coloring,
    Estimate,
    estimate_once,
    independent_edge_estimate,
    monochromatic_subgraph,
    random_coloring,
)

__version__ = "0.1.0"
