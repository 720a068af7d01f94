"""
Unit tests for the reference counters, the shifted-count reduction, the
cp-IndSub identity and the clique gadget.
"""

from itertools import combinations

import pytest

from src.config.settings import settings
from src.core.errors import CapacityError, InputError
from src.enumerators.naive import alt_enum_naive
from src.graphs.generators import complete_bipartite_graph, complete_graph, empty_graph, path_graph
from src.graphs.graph import ColoredGraph, Graph
from src.models.reports import CountMethod
from src.properties.builtins import builtin_handle, builtin_property
from src.properties.spec import shift_property
from src.reductions import (
    clique_gadget,
    count_cliques,
    count_cp_hom,
    count_cp_indsub,
    count_hom,
    count_indsub,
    count_indsub_shifted,
    cp_hom_coefficients,
    direct_oracle,
    top_coefficient,
    verify_cpindsub_identity,
)


def random_colored_graph(pattern: Graph, per_class: int, rng) -> ColoredGraph:
    """per_class vertices of each color, edges only between adjacent colors."""
    coloring = tuple(color for color in range(pattern.n) for _ in range(per_class))
    edges = tuple(
        (u, v)
        for u, v in combinations(range(len(coloring)), 2)
        if pattern.has_edge(coloring[u], coloring[v]) and rng.random() < 0.6
    )
    return ColoredGraph(Graph(len(coloring), edges), pattern, coloring)


class TestCountIndSub:
    """Test suite for the direct counter."""

    def test_small_counts(self, k4, c5, bipartite, independent):
        assert count_indsub(builtin_handle("clique"), 3, k4).value == 4
        assert count_indsub(independent, 2, k4).value == 0
        assert count_indsub(bipartite, 3, c5).value == 10

    def test_edge_cases(self, k4, independent):
        """k = 0 counts the empty set; k > n counts nothing."""
        assert count_indsub(independent, 0, k4).value == 1
        assert count_indsub(independent, 5, k4).value == 0
        with pytest.raises(InputError):
            count_indsub(independent, -1, k4)

    def test_subset_cap(self, mocker, k4, bipartite):
        mocker.patch.object(settings, "max_subsets", 5)
        with pytest.raises(CapacityError):
            count_indsub(bipartite, 2, k4)

    def test_json_form(self, k4, independent):
        result = count_indsub(independent, 1, k4)
        assert result.to_json_dict() == {"count": "4", "method": "direct"}


class TestShiftedCount:
    """Test suite for the inclusion-exclusion reduction."""

    def test_single_isolated_vertex(self, k3, independent):
        """Each vertex of K_3 next to an isolated vertex is independent."""
        result = count_indsub_shifted(independent, empty_graph(1), 1, k3)
        assert result.value == 3
        assert result.method is CountMethod.REDUCTION

    @pytest.mark.parametrize("name", ["bipartite", "phi2_3", "indset3"])
    @pytest.mark.parametrize("hgraph", [empty_graph(1), complete_graph(2), path_graph(3)])
    def test_matches_shifted_property(self, name, hgraph, random_graph_factory):
        """The reduction equals counting the shifted property directly."""
        spec = builtin_property(name)
        shifted = shift_property(spec, hgraph)
        for k in (1, 2):
            g = random_graph_factory(5)
            expected = count_indsub(shifted, k, g).value
            assert count_indsub_shifted(spec, hgraph, k, g).value == expected

    def test_oracle_parameter(self, k3, bipartite):
        """Every oracle call asks for k + |V(H)| vertices."""
        calls = []

        def recording_oracle(handle, k, g):
            calls.append((k, g.n))
            return direct_oracle(handle, k, g)

        count_indsub_shifted(bipartite, path_graph(3), 2, k3, oracle=recording_oracle)
        assert len(calls) == 8
        assert {k for k, _ in calls} == {5}
        assert sorted(n for _, n in calls) == [3, 4, 4, 4, 5, 5, 5, 6]

    def test_integer_oracle(self, k3, independent):
        """Plain integers are accepted as oracle answers."""
        result = count_indsub_shifted(
            independent, empty_graph(1), 1, k3, oracle=lambda h, k, g: direct_oracle(h, k, g).value
        )
        assert result.value == 3

    def test_negative_answers_rejected(self, k3, independent):
        """An oracle answering -1 on the unreduced instance drives the sum negative."""

        def lying_oracle(handle, k, g):
            return -1 if g.n == 4 else 0

        with pytest.raises(InputError):
            count_indsub_shifted(independent, empty_graph(1), 1, k3, oracle=lying_oracle)

    def test_shift_cap(self, k3, independent):
        with pytest.raises(CapacityError):
            count_indsub_shifted(independent, empty_graph(5), 1, k3)


class TestHomomorphisms:
    """Test suite for #Hom, #cpHom and clique counting."""

    def test_hom_counts(self, k3, k4, c5):
        """Homomorphisms from K_3 into K_4 are its 24 injective maps."""
        assert count_hom(k3, k4).value == 24
        assert count_hom(complete_graph(2), c5).value == 10
        assert count_hom(k3, c5).value == 0
        assert count_hom(Graph(0), c5).value == 1

    def test_hom_caps(self, k3):
        with pytest.raises(CapacityError):
            count_hom(complete_graph(6), k3)
        with pytest.raises(CapacityError):
            count_hom(k3, complete_graph(13))

    def test_cliques(self, k4, c5, petersen):
        assert count_cliques(k4, 3).value == 4
        assert count_cliques(c5, 2).value == 5
        assert count_cliques(petersen, 3).value == 0
        assert count_cliques(c5, 0).value == 1
        with pytest.raises(InputError):
            count_cliques(c5, -1)

    def test_cp_hom_on_a_blow_up(self, rng):
        """The colored K_2 pattern counts edges between the two classes."""
        cg = random_colored_graph(complete_graph(2), 3, rng)
        assert count_cp_hom(cg).value == cg.g.m

    def test_cp_indsub(self, rng, bipartite):
        """Every transversal of a triangle blow-up is bipartite unless it is a triangle."""
        pattern = complete_graph(3)
        cg = random_colored_graph(pattern, 2, rng)
        triangles = count_cp_hom(cg).value
        assert count_cp_indsub(bipartite, cg).value == 8 - triangles


class TestIdentity:
    """Test suite for the cp-IndSub identity and its coefficients."""

    @pytest.mark.parametrize("name", ["bipartite", "phi2_3", "connected", "even_edges"])
    @pytest.mark.parametrize(
        "pattern", [path_graph(3), complete_graph(3), complete_bipartite_graph(2, 2)]
    )
    def test_identity_holds(self, name, pattern, rng):
        cg = random_colored_graph(pattern, 2, rng)
        assert verify_cpindsub_identity(builtin_handle(name), pattern, cg)

    def test_identity_on_a_gadget(self, k22, k3, bipartite):
        cg = clique_gadget(k22, 2, k3)
        assert verify_cpindsub_identity(bipartite, k22, cg)

    def test_pattern_mismatch(self, rng, k3, bipartite):
        cg = random_colored_graph(path_graph(3), 1, rng)
        with pytest.raises(InputError):
            verify_cpindsub_identity(bipartite, k3, cg)

    @pytest.mark.parametrize("name", ["bipartite", "independent", "phi1_half", "even_edges"])
    @pytest.mark.parametrize(
        "pattern", [complete_graph(3), complete_bipartite_graph(2, 2), path_graph(4)]
    )
    def test_top_coefficient_is_the_alternating_sum(self, name, pattern):
        """The top coefficient is (-1)^|E(H)| times the alternating enumerator."""
        handle = builtin_handle(name)
        expected = (-1) ** pattern.m * alt_enum_naive(handle, pattern)
        assert top_coefficient(handle, pattern) == expected

    def test_triangle_coefficients(self, k3, bipartite):
        """Only the full triangle is non-bipartite, so every nonzero coefficient sits on top."""
        coefficients = cp_hom_coefficients(bipartite, k3)
        assert len(coefficients) == 8
        assert coefficients[0] == 1
        assert coefficients[0b111] == -1
        assert all(value == 0 for mask, value in coefficients.items() if mask not in (0, 0b111))

    def test_coefficient_cap(self, bipartite):
        seven_edges = Graph(5, tuple(combinations(range(5), 2))[:7])
        with pytest.raises(CapacityError):
            cp_hom_coefficients(bipartite, seven_edges)


class TestCliqueGadget:
    """Test suite for the clique gadget."""

    def test_counts_edges(self, k22, k3, is3, c5):
        """With ell = 2, #cpHom(F -> G') counts the edges of G."""
        assert count_cp_hom(clique_gadget(k22, 2, k3)).value == 3
        assert count_cp_hom(clique_gadget(k22, 2, is3)).value == 0
        assert count_cp_hom(clique_gadget(complete_graph(4), 2, c5)).value == 5

    def test_matches_clique_count(self, k22, random_graph_factory):
        for _ in range(4):
            g = random_graph_factory(6)
            assert count_cp_hom(clique_gadget(k22, 2, g)).value == count_cliques(g, 2).value

    def test_triangles(self, k4):
        """K_{3,3} with ell = 3 counts the four triangles of K_4."""
        cg = clique_gadget(complete_bipartite_graph(3, 3), 3, k4)
        assert cg.g.n == 24
        assert count_cp_hom(cg).value == 4

    def test_coloring_is_a_homomorphism(self, k22, c5):
        cg = clique_gadget(k22, 2, c5)
        assert len(cg.coloring) == cg.g.n == 20
        assert all(len(members) == 5 for members in cg.color_classes)

    def test_bad_arguments(self, k22, k3):
        with pytest.raises(InputError):
            clique_gadget(k22, 1, k3)
        with pytest.raises(InputError):
            clique_gadget(k3, 2, k3)
        with pytest.raises(CapacityError):
            clique_gadget(complete_graph(7), 2, k3)
        with pytest.raises(CapacityError):
            clique_gadget(k22, 2, complete_graph(9))
