"""Treewidth bounds for plane graphs from three-sided brambles (nets)."""

from .bt_alg import BTConfig, DecompositionTree, SearchNode, bt_alg, build_decomposition, recolor_child
from .decomposition import TreeDecomposition, validate_tree_decomposition
from .errors import (
    BadParameter,
    EmbeddingInvalid,
    EmptySubgraph,
    FormatError,
    IndexOutOfRange,
    NetwidthError,
    RecolorContradiction,
    TooLarge,
    ValidationFailure,
)
from .frame_net import Color, Frame3, crosses, default_frame, is_vine, make_frame, verify_cover
from .generators import cycle, five_vertex_net, hex_patch, path, random_plane_graph, random_triangulation, square_grid, triangular_grid
from .net_alg import NetCoverResult, net_alg, net_order
from .oracles import brute_net_order, brute_treewidth, check_min_cover_theorem
from .plane_graph import FaceGraph, PlaneGraph, build_face_graph, from_coordinates, induced_subgraph, trace_faces

__version__ = "0.1.0"

__all__ = [
    "BTConfig",
    "BadParameter",
    "Color",
    "DecompositionTree",
    "EmbeddingInvalid",
    "EmptySubgraph",
    "FaceGraph",
    "FormatError",
    "Frame3",
    "IndexOutOfRange",
    "NetCoverResult",
    "NetwidthError",
    "PlaneGraph",
    "RecolorContradiction",
    "SearchNode",
    "TooLarge",
    "TreeDecomposition",
    "ValidationFailure",
    "brute_net_order",
    "brute_treewidth",
    "bt_alg",
    "build_decomposition",
    "build_face_graph",
    "check_min_cover_theorem",
    "crosses",
    "cycle",
    "default_frame",
    "five_vertex_net",
    "from_coordinates",
    "hex_patch",
    "induced_subgraph",
    "is_vine",
    "make_frame",
    "net_alg",
    "net_order",
    "path",
    "random_plane_graph",
    "random_triangulation",
    "recolor_child",
    "square_grid",
    "trace_faces",
    "triangular_grid",
    "validate_tree_decomposition",
    "verify_cover",
]
