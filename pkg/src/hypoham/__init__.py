"""Plane-graph toolkit and exhaustive search engine for hypohamiltonian graphs."""

from .plane import (
    PlaneGraph,
    SimpleGraph,
    GraphError,
    build_plane_graph,
    canonical_code,
    connectivity,
    degree_sequence,
    dual,
    face_sequence,
    faces,
    format_multiset,
    girth,
)

__version__ = "0.1.0"

__all__ = [
    "PlaneGraph",
    "SimpleGraph",
    "GraphError",
    "build_plane_graph",
    "canonical_code",
    "connectivity",
    "degree_sequence",
    "dual",
    "face_sequence",
    "faces",
    "format_multiset",
    "girth",
    "__version__",
]
