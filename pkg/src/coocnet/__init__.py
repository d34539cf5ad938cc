"""Word co-occurrence networks: build, measure, rank, compare.

The package turns raw text into a directed weighted network of adjacent
words, computes global and per-node structure measures on it, and exports
rank series so two text categories can be compared side by side.  See the
module docstrings of `pipeline`, `network`, `metrics`, and `ranking` for
the exact conventions, and `cli` for the command-line front end.
"""

from .metrics import (
    GlobalMetrics,
    NodeMetrics,
    all_node_metrics,
    average_clustering,
    average_degree,
    average_shortest_path,
    degree,
    density,
    diameter,
    global_summary,
    local_clustering,
    node_average_distance,
    selectivity,
    strength,
)
from .network import (
    ComponentLabeling,
    CooccurrenceNetwork,
    EdgeListFormatError,
    EdgeRecord,
    build_network,
    from_edge_list,
    largest_component_subgraph,
    read_edge_list,
    to_edge_list,
    undirected_projection,
    weak_components,
    write_edge_list,
)
from .pipeline import (
    DEFAULT_CONFIG,
    DEFAULT_TERMINATORS,
    IngestionError,
    PipelineConfig,
    RawDocument,
    extract_sentences,
    load_config,
    load_document,
    normalize,
    segment_sentences,
    tokenize,
)
from .ranking import (
    MEASURES,
    PairComparison,
    RankEntry,
    RankSeries,
    SizeMismatchWarning,
    all_rank_series,
    compare_pair,
    excluded_fraction,
    export_pair_csv,
    export_rank_csv,
    export_summary,
    format_value,
    network_rank_series,
    rank_sequence,
    render_rank_svg,
    write_node_metrics_csv,
    write_summary_csv,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentLabeling",
    "CooccurrenceNetwork",
    "DEFAULT_CONFIG",
    "DEFAULT_TERMINATORS",
    "EdgeListFormatError",
    "EdgeRecord",
    "GlobalMetrics",
    "IngestionError",
    "MEASURES",
    "NodeMetrics",
    "PairComparison",
    "PipelineConfig",
    "RankEntry",
    "RankSeries",
    "RawDocument",
    "SizeMismatchWarning",
    "all_node_metrics",
    "all_rank_series",
    "average_clustering",
    "average_degree",
    "average_shortest_path",
    "build_network",
    "compare_pair",
    "degree",
    "density",
    "diameter",
    "excluded_fraction",
    "export_pair_csv",
    "export_rank_csv",
    "export_summary",
    "extract_sentences",
    "format_value",
    "from_edge_list",
    "global_summary",
    "largest_component_subgraph",
    "load_config",
    "load_document",
    "local_clustering",
    "network_rank_series",
    "node_average_distance",
    "normalize",
    "rank_sequence",
    "read_edge_list",
    "render_rank_svg",
    "segment_sentences",
    "selectivity",
    "strength",
    "to_edge_list",
    "tokenize",
    "undirected_projection",
    "weak_components",
    "write_edge_list",
    "write_node_metrics_csv",
    "write_summary_csv",
]
