"""Communication graphs and connectivity primitives."""
from .graph import CommGraph, add_edge, quotient_graph, remove_edge
from .connectivity import (
    ComponentPartition,
    component_masks,
    components,
    connects,
    essential_intermediaries,
    intermediaries,
    is_connected_in,
    minimal_connecting_sets,
)

__all__ = [
    "CommGraph",
    "add_edge",
    "quotient_graph",
    "remove_edge",
    "ComponentPartition",
    "component_masks",
    "components",
    "connects",
    "essential_intermediaries",
    "intermediaries",
    "is_connected_in",
    "minimal_connecting_sets",
]
