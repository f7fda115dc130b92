"""Graph core: bitset graphs, constructive algebra, and edge-list/graph6 I/O."""

from spectral_parity.graphs.graph import (
    MAX_ORDER,
    Graph,
    VertexSet,
    complete,
    component_count,
    copies,
    cycle,
    degrees,
    delete_edges,
    delete_vertices,
    disjoint_union,
    empty,
    is_connected,
    join,
    members,
    min_degree,
    path,
    star,
    vertex_set,
)
from spectral_parity.graphs.io import (
    GraphFormat,
    detect_format,
    parse_graph,
    read_graph6_stream,
    serialize_graph,
)

__all__ = [
    "MAX_ORDER",
    "Graph",
    "GraphFormat",
    "VertexSet",
    "complete",
    "component_count",
    "copies",
    "cycle",
    "degrees",
    "delete_edges",
    "delete_vertices",
    "detect_format",
    "disjoint_union",
    "empty",
    "is_connected",
    "join",
    "members",
    "min_degree",
    "parse_graph",
    "path",
    "read_graph6_stream",
    "serialize_graph",
    "star",
    "vertex_set",
]
