"""Berge saturation toolkit: build saturated hypergraphs, decide Berge
containment with checkable witnesses, verify saturation exhaustively, and
evaluate the closed-form edge bounds."""

__version__ = "0.1.0"

from .errors import (
    BergesatError,
    DuplicateEdgeError,
    EdgeWrongSizeError,
    FormatError,
    InvalidHypergraphError,
    OrderTooSmallError,
    ParameterRegimeError,
    SaturationTimeout,
    TooFewVerticesError,
    TooLargeError,
    UnderspecifiedConstructionError,
    UnsupportedUniformityError,
    VertexOutOfRangeError,
)
from .hypergraph import (
    Hypergraph,
    complement_count,
    complement_edges,
    is_linear_tree,
    leaf_edges,
    make,
)
from .canon import canonical_code
from . import patterns

__all__ = [
    "__version__",
    "BergesatError",
    "DuplicateEdgeError",
    "EdgeWrongSizeError",
    "FormatError",
    "InvalidHypergraphError",
    "OrderTooSmallError",
    "ParameterRegimeError",
    "SaturationTimeout",
    "TooFewVerticesError",
    "TooLargeError",
    "UnderspecifiedConstructionError",
    "UnsupportedUniformityError",
    "VertexOutOfRangeError",
    "Hypergraph",
    "make",
    "complement_edges",
    "complement_count",
    "is_linear_tree",
    "leaf_edges",
    "canonical_code",
    "patterns",
]
