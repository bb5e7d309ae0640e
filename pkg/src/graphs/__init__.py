"""Small-graph value type, constructions, canonical forms, enumeration and graph6."""

from .core import (
    Graph,
    OrderOverflowError,
    build_extremal,
    complete,
    complete_bipartite,
    construct,
    cycle,
    disjoint_union,
    empty,
    join,
    path,
    random_graph,
    star,
    star_of_cliques,
    tait_extremal,
)
from .canonical import CanonicalCapError, canonical_code, canonical_form
from .enumeration import EnumerationCapError, count_graphs, enumerate_graphs
from .graph6 import Graph6Error, decode as from_graph6, encode as to_graph6

__all__ = [
    "Graph",
    "OrderOverflowError",
    "build_extremal",
    "complete",
    "complete_bipartite",
    "construct",
    "cycle",
    "disjoint_union",
    "empty",
    "join",
    "path",
    "random_graph",
    "star",
    "star_of_cliques",
    "tait_extremal",
    "CanonicalCapError",
    "canonical_code",
    "canonical_form",
    "EnumerationCapError",
    "count_graphs",
    "enumerate_graphs",
    "Graph6Error",
    "from_graph6",
    "to_graph6",
]
