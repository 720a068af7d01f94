"""Graph core: representation, constructions and structural certificates."""

from .generators import (
    all_graphs,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    random_graph,
    star_graph,
)
from .graph import ColoredGraph, Edge, EdgeSubgraph, Graph
from .io import format_graph, load_graph, parse_graph, save_graph
from .operations import (
    complement,
    disjoint_union,
    edge_subgraph,
    forward_revolution,
    induced_subgraph,
    inhabited_graph,
    join,
    lexicographic_product,
    relabel,
)
from .structure import (
    are_isomorphic,
    contains_biclique,
    find_biclique,
    regular_degree,
    treewidth_exact,
)

__all__ = [
    "ColoredGraph",
    "Edge",
    "EdgeSubgraph",
    "Graph",
    "all_graphs",
    "are_isomorphic",
    "complement",
    "complete_bipartite_graph",
    "complete_graph",
    "contains_biclique",
    "cycle_graph",
    "disjoint_union",
    "edge_subgraph",
    "empty_graph",
    "find_biclique",
    "format_graph",
    "forward_revolution",
    "induced_subgraph",
    "inhabited_graph",
    "join",
    "lexicographic_product",
    "load_graph",
    "parse_graph",
    "path_graph",
    "petersen_graph",
    "random_graph",
    "regular_degree",
    "relabel",
    "save_graph",
    "star_graph",
    "treewidth_exact",
]
