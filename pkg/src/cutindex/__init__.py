"""Wiener and Szeged indices of partial cubes via the cut method.

The package recognizes partial cubes through the Djokovic-Winkler relation,
decomposes the indices over edge-class cuts and coarser-partition quotient
graphs, generates C4C8 and benzenoid systems, and computes both indices of
weighted trees (and hence of C4C8 systems) in linear time.  Brute-force
evaluators straight from the definitions are kept alongside as oracles.
"""

from .chem import (
    BenzenoidSpec,
    C4C8Spec,
    build_benzenoid,
    build_c4c8,
    c4c8_indices,
    c4c8_report,
    c4c8_theta_partition,
    direction_partition,
    direction_tag,
    reference_quotient_trees,
)
from .core import (
    UNREACHABLE,
    Graph,
    GraphError,
    IndexOverflowError,
    bfs_distances,
    build_graph,
    components_after_removal,
    distance_matrix,
    is_bipartite,
    is_connected,
)
from .indices import (
    CutClassSummary,
    VertexEdgeWeightedGraph,
    VertexWeightedGraph,
    cut_class_summaries,
    szeged_brute,
    szeged_cut,
    szeged_via_partition,
    szeged_weighted,
    wiener_brute,
    wiener_cut,
    wiener_via_partition,
    wiener_weighted,
)
from .quotient import (
    CoarserPartition,
    QuotientClassSummary,
    WeightedQuotient,
    build_quotient,
    coarsest_partition,
    finest_partition,
    quotient_by_edge_classes,
    quotient_theta_classes,
    validate_coarser,
)
from .theta import (
    PartialCube,
    RecognitionWitness,
    ThetaPartition,
    class_sides,
    recognize_partial_cube,
    theta_related,
    theta_star_classes,
)
from .treedp import szeged_tree_linear, tree_cut_rows, wiener_tree_linear

__all__ = [
    "BenzenoidSpec",
    "C4C8Spec",
    "CoarserPartition",
    "CutClassSummary",
    "Graph",
    "GraphError",
    "IndexOverflowError",
    "PartialCube",
    "QuotientClassSummary",
    "RecognitionWitness",
    "ThetaPartition",
    "UNREACHABLE",
    "VertexEdgeWeightedGraph",
    "VertexWeightedGraph",
    "WeightedQuotient",
    "bfs_distances",
    "build_benzenoid",
    "build_c4c8",
    "build_graph",
    "build_quotient",
    "c4c8_indices",
    "c4c8_report",
    "c4c8_theta_partition",
    "class_sides",
    "coarsest_partition",
    "components_after_removal",
    "cut_class_summaries",
    "direction_partition",
    "direction_tag",
    "distance_matrix",
    "finest_partition",
    "is_bipartite",
    "is_connected",
    "quotient_by_edge_classes",
    "quotient_theta_classes",
    "recognize_partial_cube",
    "reference_quotient_trees",
    "szeged_brute",
    "szeged_cut",
    "szeged_tree_linear",
    "szeged_via_partition",
    "szeged_weighted",
    "theta_related",
    "theta_star_classes",
    "tree_cut_rows",
    "validate_coarser",
    "wiener_brute",
    "wiener_cut",
    "wiener_tree_linear",
    "wiener_via_partition",
    "wiener_weighted",
]

__version__ = "0.1.0"
