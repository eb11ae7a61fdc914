"""Exact analysis of planar resistor networks and their dual networks."""

from dualnet.duality import DualCorrespondence, SpanningTree, dual, psi_complement
from dualnet.errors import (
    BadRotation,
    BridgePresent,
    CapExceeded,
    Disconnected,
    GraphError,
    LoopEdge,
    NetworkFileError,
    NonPositiveResistance,
    NotPlanarEmbedding,
    UnknownEdge,
)
from dualnet.exact import RationalMatrix, det, format_rational, minor_matrix, rational_parse
from dualnet.graph import Dart, EmbeddedMultigraph, FaceSet, bridges, build_graph, faces
from dualnet.kirchhoff import (
    DualityRecord,
    LaplacianMatrix,
    WeightedGraph,
    cofactor,
    collapse_parallel,
    double_minor,
    duality_report,
    effective_resistance,
    laplacian,
)
from dualnet.oracle import SpanningTreeSet, enumerate_spanning_trees, oracle_report, subgraph_weight

__version__ = "0.1.0"

__all__ = [
    "BadRotation",
    "BridgePresent",
    "CapExceeded",
    "Dart",
    "Disconnected",
    "DualCorrespondence",
    "DualityRecord",
    "EmbeddedMultigraph",
    "FaceSet",
    "GraphError",
    "LaplacianMatrix",
    "LoopEdge",
    "NetworkFileError",
    "NonPositiveResistance",
    "NotPlanarEmbedding",
    "RationalMatrix",
    "SpanningTree",
    "SpanningTreeSet",
    "UnknownEdge",
    "WeightedGraph",
    "bridges",
    "build_graph",
    "cofactor",
    "collapse_parallel",
    "det",
    "double_minor",
    "dual",
    "duality_report",
    "effective_resistance",
    "enumerate_spanning_trees",
    "faces",
    "format_rational",
    "laplacian",
    "minor_matrix",
    "oracle_report",
    "psi_complement",
    "rational_parse",
    "subgraph_weight",
]
