"""
Unit tests for the graph core: representation, constructions, invariants and I/O.
"""

import networkx as nx
import pytest

from src.core.errors import CapacityError, DomainError, InputError
from src.graphs.generators import (
    all_graphs,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from src.graphs.graph import ColoredGraph, EdgeSubgraph, Graph
from src.graphs.invariants import (
    components,
    diameter,
    independence_number,
    is_bipartite,
    is_connected,
)
from src.graphs.io import format_graph, load_graph, parse_graph, save_graph
from src.graphs.operations import (
    complement,
    disjoint_union,
    edge_subgraph,
    forward_revolution,
    graph_union,
    induced_subgraph,
    inhabited_graph,
    join,
    lexicographic_product,
    relabel,
)
from src.graphs.structure import (
    are_isomorphic,
    biclique_sides_hold,
    contains_biclique,
    find_biclique,
    regular_degree,
    treewidth_exact,
)


class TestGraph:
    """Test suite for the Graph value type."""

    def test_edges_are_canonical(self):
        """from_edges sorts pairs and orients them u < v."""
        g = Graph.from_edges(3, [(2, 0), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))
        assert g.index_of(2, 0) == 1

    def test_rejects_loops_and_parallel_edges(self):
        """Loops and repeated pairs are input errors."""
        with pytest.raises(InputError):
            Graph.from_edges(2, [(1, 1)])
        with pytest.raises(InputError):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range_edges(self):
        """Edges must stay inside the vertex set."""
        with pytest.raises(InputError):
            Graph(2, ((0, 2),))

    def test_vertex_cap(self):
        """Graphs above 64 vertices exceed the capacity."""
        with pytest.raises(CapacityError):
            Graph(65)

    def test_index_of_missing_edge(self, p3):
        """Asking for the index of a non-edge is an input error."""
        with pytest.raises(InputError):
            p3.index_of(0, 2)

    def test_edge_masks(self, k4):
        """Edge masks round through edge lists."""
        mask = k4.edge_mask_of([(0, 1), (2, 3)])
        assert k4.edges_of_mask(mask) == [(0, 1), (2, 3)]
        with pytest.raises(InputError):
            k4.edges_of_mask(1 << 6)

    def test_networkx_interop(self, petersen):
        """Conversion to networkx keeps the graph intact."""
        assert Graph.from_networkx(petersen.to_networkx()) == petersen
        assert nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph())

    def test_equality_and_hash(self):
        """Equal vertex counts and edge lists mean equal graphs."""
        triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert {complete_graph(3), triangle} == {complete_graph(3)}
        assert empty_graph(3) != empty_graph(4)


class TestEdgeSubgraph:
    """Test suite for edge subgraphs H[S]."""

    def test_graph_keeps_vertices(self, k4):
        """H[S] keeps every vertex of the parent."""
        sub = EdgeSubgraph(k4, 0b1)
        assert sub.graph.n == 4
        assert sub.graph.edges == ((0, 1),)

    def test_mask_beyond_parent(self, k3):
        """Masks with bits beyond the parent's edges are rejected."""
        with pytest.raises(InputError):
            EdgeSubgraph(k3, 1 << 3)

    def test_subgraph_order(self, k4):
        """Sub-masks are subgraphs."""
        assert EdgeSubgraph(k4, 0b001).is_subgraph_of(EdgeSubgraph(k4, 0b011))
        assert not EdgeSubgraph(k4, 0b100).is_subgraph_of(EdgeSubgraph(k4, 0b011))


class TestColoredGraph:
    """Test suite for colored graphs."""

    def test_coloring_must_be_homomorphism(self):
        """Edges between colors that are not adjacent in the pattern are rejected."""
        pattern = complete_graph(2)
        with pytest.raises(InputError):
            ColoredGraph(complete_graph(2), pattern, (0, 0))

    def test_color_classes(self):
        """Classes list vertices by color, and the transversal count multiplies their sizes."""
        g = Graph.from_edges(3, [(0, 2), (1, 2)])
        cg = ColoredGraph(g, complete_graph(2), (0, 0, 1))
        assert cg.color_classes == ((0, 1), (2,))
        assert cg.class_masks == (0b011, 0b100)
        assert cg.transversal_count() == 2


class TestOperations:
    """Test suite for graph constructions."""

    def test_induced_subgraph_relabels(self, c5):
        """Induced subgraphs are relabeled in ascending vertex order."""
        assert induced_subgraph(c5, [0, 1, 2]) == path_graph(3)
        assert induced_subgraph(c5, [0, 2]) == empty_graph(2)

    def test_complement(self, c5):
        """The complement of C_5 is C_5 up to isomorphism."""
        assert nx.is_isomorphic(complement(c5).to_networkx(), c5.to_networkx())

    def test_union_and_join(self, k3):
        """Disjoint union and join are inhabited graphs on IS and K patterns."""
        union = disjoint_union(k3, empty_graph(1))
        assert union.n == 4 and union.m == 3
        expected = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        assert join(empty_graph(2), empty_graph(2)) == expected

    def test_union_law(self, random_graph_factory):
        """Inhabited graphs of one shape commute with edge-set union."""
        c1, c2 = path_graph(3), Graph.from_edges(3, [(0, 2)])
        parts1 = [random_graph_factory(2) for _ in range(3)]
        parts2 = [random_graph_factory(2) for _ in range(3)]
        merged = [graph_union(a, b) for a, b in zip(parts1, parts2)]
        assert graph_union(inhabited_graph(c1, parts1), inhabited_graph(c2, parts2)) == (
            inhabited_graph(graph_union(c1, c2), merged)
        )
        with pytest.raises(InputError):
            graph_union(c1, empty_graph(2))

    def test_inhabited_graph_part_count(self, k3):
        """One part per vertex of the connection graph."""
        with pytest.raises(InputError):
            inhabited_graph(k3, [empty_graph(1)])

    def test_lexicographic_product_degrees(self):
        """K_2 o IS_2 is K_{2,2}; IS_2 o K_2 is two disjoint edges."""
        assert nx.is_isomorphic(
            lexicographic_product([complete_graph(2), empty_graph(2)]).to_networkx(),
            nx.complete_bipartite_graph(2, 2),
        )
        assert lexicographic_product([empty_graph(2), complete_graph(2)]).m == 2

    def test_lexicographic_product_matches_networkx(self):
        """Matches networkx's lexicographic product up to isomorphism."""
        factors = [cycle_graph(3), path_graph(2)]
        expected = nx.lexicographic_product(factors[0].to_networkx(), factors[1].to_networkx())
        assert nx.is_isomorphic(lexicographic_product(factors).to_networkx(), expected)

    def test_forward_revolution(self):
        """(a_1, a_2) goes to (a_2, a_1) on [0, 2)^2."""
        assert forward_revolution(2, 2) == (0, 2, 1, 3)
        assert forward_revolution(3, 1) == (0, 1, 2)

    @pytest.mark.parametrize("p", [1, 4, 6])
    def test_forward_revolution_needs_a_prime(self, p):
        with pytest.raises(DomainError):
            forward_revolution(p, 2)

    def test_relabel(self, p3):
        """Relabeling maps vertex v to permutation[v]."""
        assert relabel(p3, [1, 0, 2]).edges == ((0, 1), (0, 2))
        with pytest.raises(InputError):
            relabel(p3, [0, 0, 1])

    def test_edge_subgraph(self, k3):
        assert edge_subgraph(k3, 0b101).edges == ((0, 1), (1, 2))

    def test_edge_subgraph_matches_constructor(self, random_graph_factory):
        """The fast path builds the same graph, adjacency included, as Graph(n, edges)."""
        g = random_graph_factory(7, 0.5)
        for mask in (0, g.full_edge_mask, 0b1011 & g.full_edge_mask):
            built = Graph(g.n, tuple(g.edges_of_mask(mask)))
            fast = g.edge_subgraph(mask)
            assert fast == built
            assert fast.adjacency == built.adjacency
            assert hash(fast) == hash(built)
        with pytest.raises(InputError):
            g.edge_subgraph(-1)


class TestInvariants:
    """Bitmask invariants against networkx."""

    def test_against_networkx(self, random_graph_factory):
        """Connectivity, bipartiteness, diameter and independence number agree with networkx."""
        for n in range(1, 8):
            for _ in range(6):
                g = random_graph_factory(n, 0.4)
                reference = g.to_networkx()
                assert is_connected(g) == nx.is_connected(reference)
                assert is_bipartite(g) == nx.is_bipartite(reference)
                assert len(components(g)) == nx.number_connected_components(reference)
                if nx.is_connected(reference):
                    assert diameter(g) == nx.diameter(reference)
                else:
                    assert diameter(g) is None
                complement_graph = nx.complement(reference)
                largest = max(len(c) for c in nx.find_cliques(complement_graph))
                assert independence_number(g) == largest

    def test_all_graphs_counts(self):
        """There are 2^binom(n, 2) labeled graphs on n vertices."""
        assert sum(1 for _ in all_graphs(3)) == 8
        assert sum(1 for _ in all_graphs(4)) == 64


class TestGraphIO:
    """Test suite for the graph text format."""

    def test_parse_with_comments(self):
        """Comments and blank lines are ignored."""
        g = parse_graph("# triangle\n3 3\n0 1\n\n1 2 # last two\n0 2\n")
        assert g == complete_graph(3)

    def test_format_is_sorted(self):
        assert format_graph(Graph.from_edges(3, [(1, 2), (0, 1)])) == "3 2\n0 1\n1 2\n"

    @pytest.mark.parametrize(
        "text",
        ["", "3\n", "3 1\n1 0\n", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 5\n"],
    )
    def test_malformed(self, text):
        """Malformed headers, endpoints and counts are input errors."""
        with pytest.raises(InputError):
            parse_graph(text)

    @pytest.mark.parametrize("text", ["0 0\n", "# nothing here\n0 0\n"])
    def test_rejects_zero_vertices(self, text):
        """Graph files need at least one vertex even though Graph(0) exists internally."""
        with pytest.raises(InputError, match="at least one vertex"):
            parse_graph(text)
        assert Graph(0).m == 0

    def test_save_and_load(self, tmp_path, petersen):
        path = tmp_path / "petersen.txt"
        save_graph(petersen, path)
        assert load_graph(path) == petersen

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            load_graph(tmp_path / "missing.txt")


class TestStructure:
    """Test suite for isomorphism, biclique, treewidth and regularity certificates."""

    def test_isomorphism(self, c5, petersen):
        """C_5 is self-complementary; the Petersen graph is not C_10."""
        assert are_isomorphic(c5, complement(c5))
        assert not are_isomorphic(petersen, cycle_graph(10))
        assert not are_isomorphic(path_graph(4), star_graph(3))

    def test_isomorphism_cap(self):
        with pytest.raises(CapacityError):
            are_isomorphic(empty_graph(13), empty_graph(13))

    def test_find_biclique(self, k22, c5):
        """The first K_{2,2} of C_4 uses sides {0, 2} and {1, 3}."""
        assert find_biclique(cycle_graph(4), 2) == ([0, 2], [1, 3])
        assert find_biclique(c5, 2) is None
        assert find_biclique(k22, 0) == ([], [])

    def test_contains_biclique_with_sides(self, k22):
        """Supplied sides certify directly; wrong sides fall back to the search."""
        assert contains_biclique(k22, 2, sides=([0, 1], [2, 3]))
        assert contains_biclique(k22, 2, sides=([0, 2], [1, 3]))
        assert not contains_biclique(k22, 3)
        assert not biclique_sides_hold(k22, 2, ([0, 1], [1, 2]))

    def test_treewidth(self, petersen, k4):
        """Known treewidths: trees 1, cycles 2, K_4 3, Petersen 4."""
        assert treewidth_exact(path_graph(5)) == 1
        assert treewidth_exact(cycle_graph(6)) == 2
        assert treewidth_exact(k4) == 3
        assert treewidth_exact(petersen) == 4
        assert treewidth_exact(empty_graph(3)) == 0

    def test_treewidth_matches_networkx_bound(self, random_graph_factory):
        """networkx's heuristic is an upper bound on the exact value."""
        from networkx.algorithms.approximation import treewidth_min_degree

        for _ in range(10):
            g = random_graph_factory(8, 0.45)
            bound, _ = treewidth_min_degree(g.to_networkx())
            assert treewidth_exact(g) <= bound

    def test_regular_degree(self, petersen, p3):
        assert regular_degree(petersen) == 3
        assert regular_degree(p3) is None
