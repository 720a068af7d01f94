"""
Unit tests for the property DSL, memoized handles, built-ins and meta-checks.
"""

import pytest

from src.core.errors import (
    CapacityError,
    HypothesisError,
    InputError,
    PropertySemanticError,
    PropertySyntaxError,
)
from src.graphs.generators import complete_graph, cycle_graph, empty_graph, path_graph
from src.graphs.graph import Graph
from src.properties.ast import And, Not, Or, Polarity, SimpleAtom, SimpleKind
from src.properties.builtins import (
    BUILTIN_PROPERTIES,
    builtin_handle,
    builtin_property,
    resolve_property,
)
from src.properties.checks import is_edge_monotone_upto, is_nontrivial_on, is_trivial_on
from src.properties.grammar import parse_property
from src.properties.handle import PropertyHandle
from src.properties.spec import PropertySpec, complement, negate, shift_property


class TestPropertyParser:
    """Test suite for the property grammar."""

    def test_precedence(self):
        """not binds tighter than and, and tighter than or."""
        spec = parse_property("not bipartite and clique or independent")
        assert spec.ast == Or(
            (
                And((Not(SimpleAtom(SimpleKind.BIPARTITE)), SimpleAtom(SimpleKind.CLIQUE))),
                SimpleAtom(SimpleKind.INDEPENDENT),
            )
        )

    def test_groups_override_precedence(self):
        spec = parse_property("clique and (connected or independent)")
        assert isinstance(spec.ast, And)
        assert isinstance(spec.ast.operands[1], Or)

    @pytest.mark.parametrize(
        "text",
        [
            "disconnected or diam >= 1/2 n",
            "max_degree <= 3/4 n and num_edges >= 2",
            "not (edge_parity(odd) or vertex_count_in(2, 5))",
            "has_independent_set(3) or false",
        ],
    )
    def test_printed_form_reparses(self, text):
        """str() of a parsed tree parses back to the same tree."""
        ast = parse_property(text).ast
        assert parse_property(str(ast)).ast == ast

    def test_comments_and_annotation(self):
        """Comments are skipped; @monotone sets the declaration."""
        spec = parse_property("@monotone\n# parity is not monotone\nedge_parity(even)\n")
        assert spec.declared_edge_monotone
        assert spec.polarity is Polarity.NONE

    @pytest.mark.parametrize(
        "text,monotone",
        [
            ("bipartite or has_independent_set(3)", True),
            ("connected", False),
            ("not connected", True),
            ("num_edges <= 4", True),
            ("num_edges == 4", False),
            ("true", True),
            ("bipartite and clique", False),
            ("vertex_count_in(3) and independent", True),
        ],
    )
    def test_inferred_polarity(self, text, monotone):
        """Declared edge-monotonicity follows the inferred polarity."""
        assert parse_property(text).declared_edge_monotone is monotone

    def test_syntax_error_location(self):
        """Errors report the line and column of the offending input."""
        with pytest.raises(PropertySyntaxError) as excinfo:
            parse_property("bipartite or\nand clique")
        assert excinfo.value.line == 2
        assert excinfo.value.column is not None

    @pytest.mark.parametrize(
        "text", ["", "planar", "bipartite and", "max_degree <= n", "edge_parity(3)"]
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(PropertySyntaxError):
            parse_property(text)

    def test_zero_denominator(self):
        """A zero denominator parses but is meaningless."""
        with pytest.raises(PropertySemanticError):
            parse_property("max_degree <= 1/0 n")


class TestAtoms:
    """Atom semantics on small graphs."""

    def test_fractional_thresholds(self):
        """max_degree <= 3/4 n holds on K_4 but not on K_5."""
        spec = builtin_property("phi3_three_quarters")
        assert spec.holds(complete_graph(4))
        assert not spec.holds(complete_graph(5))

    def test_diameter_threshold(self, p3, k3):
        """Disconnected graphs have infinite diameter."""
        spec = builtin_property("phi1_half")
        assert spec.holds(p3)
        assert not spec.holds(k3)
        assert spec.holds(empty_graph(2))

    def test_phi2_3(self, phi2_3, c4, c5):
        """C_4 is bipartite; C_5 is neither bipartite nor has three independent vertices."""
        assert phi2_3(c4)
        assert not phi2_3(c5)
        assert phi2_3(path_graph(5))

    def test_vertex_count_and_constants(self):
        spec = parse_property("vertex_count_in(2, 4)")
        assert spec.holds(empty_graph(4))
        assert not spec.holds(empty_graph(3))
        assert not parse_property("false").holds(empty_graph(1))


class TestTransforms:
    """Test suite for negate, complement and shift."""

    def test_negate(self):
        spec = negate(builtin_property("bipartite"))
        assert spec.polarity is Polarity.INCREASING
        assert not spec.declared_edge_monotone
        assert spec.holds(cycle_graph(5))

    def test_complement(self, k3):
        """The complement of independent is clique."""
        spec = complement(builtin_property("independent"))
        assert spec.holds(k3)
        assert not spec.holds(path_graph(3))

    def test_shift(self):
        """(Φ - H)(G) = Φ(G ⊎ H), and shifting by the empty graph is the identity."""
        independent = builtin_property("independent")
        shifted = shift_property(independent, complete_graph(2))
        assert not shifted.holds(empty_graph(2))
        assert shifted.declared_edge_monotone
        assert shift_property(independent, Graph(0)) is independent


class TestPropertyHandle:
    """Test suite for memoized evaluation."""

    def test_memo_avoids_reevaluation(self, mocker, c5):
        """Repeated queries on the same labeled graph evaluate once."""
        spy = mocker.spy(PropertySpec, "holds")
        handle = PropertyHandle(parse_property("bipartite"))
        assert not handle(c5)
        assert not handle.evaluate(cycle_graph(5))
        assert spy.call_count == 1
        assert handle.memo_size == 1

    def test_memo_is_bounded(self):
        handle = PropertyHandle(parse_property("independent"), memo_size=2)
        for n in range(5):
            handle(empty_graph(n))
        assert handle.memo_size == 2

    def test_require_edge_monotone(self):
        """A false @monotone claim is caught by exhaustive verification."""
        handle = PropertyHandle(parse_property("@monotone edge_parity(even)"))
        with pytest.raises(HypothesisError):
            handle.require_edge_monotone()
        with pytest.raises(HypothesisError):
            PropertyHandle(parse_property("connected")).require_edge_monotone()

    def test_verification_is_remembered(self, mocker):
        handle = PropertyHandle(parse_property("bipartite"))
        check = mocker.patch(
            "src.properties.checks.is_edge_monotone_upto", wraps=is_edge_monotone_upto
        )
        handle.require_edge_monotone(4)
        handle.require_edge_monotone(3)
        assert check.call_count == 1


class TestBuiltins:
    """Test suite for the built-in registry and argument resolution."""

    def test_every_builtin_parses(self):
        for name in BUILTIN_PROPERTIES:
            assert isinstance(builtin_property(name), PropertySpec)

    def test_unknown_builtin(self):
        with pytest.raises(InputError):
            builtin_property("planar")

    def test_resolve_order(self, tmp_path):
        """Built-in names, then files, then inline text."""
        assert resolve_property("bipartite") is builtin_handle("bipartite")
        path = tmp_path / "sparse.prop"
        path.write_text("# sparse graphs\nnum_edges <= 2\n", encoding="utf-8")
        from_file = resolve_property(str(path))
        assert from_file(path_graph(3))
        assert not from_file(complete_graph(3))
        inline = resolve_property("connected and bipartite")
        assert inline(path_graph(4))

    def test_resolve_bad_text(self):
        with pytest.raises(PropertySyntaxError):
            resolve_property("no such property")


class TestMonotoneCheck:
    """Test suite for exhaustive edge-monotonicity verification."""

    @pytest.mark.parametrize("name", ["bipartite", "independent", "phi1_half", "phi2_3", "indset3"])
    def test_builtins_pass(self, name):
        assert is_edge_monotone_upto(builtin_property(name), 5).passed

    def test_first_violation(self):
        """Edge parity first fails on the two-edge star: deleting (0, 1) leaves one edge."""
        result = is_edge_monotone_upto(parse_property("edge_parity(even)"), 4)
        assert not result.passed
        assert result.graph == Graph(3, ((0, 1), (0, 2)))
        assert result.edge == (0, 1)
        assert "breaks the property" in result.describe()

    def test_cap(self):
        with pytest.raises(CapacityError):
            is_edge_monotone_upto(builtin_property("bipartite"), 8)


class TestTriviality:
    """Test suite for triviality on k vertices."""

    def test_fast_path(self, bipartite):
        """Bipartiteness is trivial on two vertices only."""
        assert is_trivial_on(bipartite, 2)
        assert is_nontrivial_on(bipartite, 3)
        assert is_nontrivial_on(bipartite, 9, method="fast")

    def test_general_path_agrees(self, bipartite, phi2_3):
        for k in range(1, 6):
            assert is_trivial_on(bipartite, k, "general") == is_trivial_on(bipartite, k, "fast")
            assert is_trivial_on(phi2_3, k, "general") == is_trivial_on(phi2_3, k, "fast")

    def test_non_monotone(self):
        """Non-monotone properties take the general path, and refuse the fast one."""
        parity = parse_property("edge_parity(even)")
        assert is_trivial_on(parity, 1)
        assert is_nontrivial_on(parity, 2)
        with pytest.raises(HypothesisError):
            is_trivial_on(parity, 3, method="fast")
        with pytest.raises(CapacityError):
            is_trivial_on(parity, 8)

    def test_bad_arguments(self, bipartite):
        with pytest.raises(InputError):
            is_trivial_on(bipartite, -1)
        with pytest.raises(InputError):
            is_trivial_on(bipartite, 3, method="fastest")
