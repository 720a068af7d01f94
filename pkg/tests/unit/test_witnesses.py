"""
Unit tests for witness searches: prime-power, Sylow biclique, avalanche closure,
classification by vertex count and the scattered probe.
"""

import pytest

from src.core.errors import CapacityError, HypothesisError, InputError
from src.fields.gf import field_make, plus_set
from src.graphs.generators import complete_graph, empty_graph, path_graph
from src.groups.families import difference_graph, subsets_of
from src.models.witness import CertificateKind, Verdict, WitnessKind
from src.properties.builtins import builtin_handle
from src.witnesses.arithmetic import (
    prime_power_bound_holds,
    prime_power_parts,
    q_largest_prime_power,
)
from src.witnesses.avalanche import avalanche_closure
from src.witnesses.classification import classify_k, scattered_property_probe
from src.witnesses.prime_power import prime_power_witness
from src.witnesses.sylow import sylow_biclique_witness


class TestArithmetic:
    """Test suite for q(n)."""

    @pytest.mark.parametrize(
        "n,q", [(1, 1), (2, 2), (6, 3), (12, 4), (30, 5), (72, 9), (64, 64)]
    )
    def test_largest_prime_power(self, n, q):
        assert q_largest_prime_power(n) == q

    def test_parts(self):
        assert prime_power_parts(8) == (2, 3)
        assert prime_power_parts(11) == (11, 1)
        with pytest.raises(InputError):
            prime_power_parts(12)

    def test_bound(self):
        """n <= q(n)^q(n) for every n."""
        assert all(prime_power_bound_holds(n) for n in range(1, 2000))

    def test_rejects_zero(self):
        with pytest.raises(InputError):
            q_largest_prime_power(0)


class TestPrimePowerWitness:
    """Test suite for nonvanishing difference graphs of Rot_{p^m}."""

    def test_independent_on_five(self, independent):
        """Only the empty point is independent, so the duality search supplies the witness."""
        report = prime_power_witness(independent, 5)
        assert report.kind is WitnessKind.DUALITY
        assert report.level >= report.parameters["d"]
        assert report.residue % 5 != 0
        assert report.certificate.kind is CertificateKind.REGULAR_DEGREE
        assert report.certificate.value == 2 * report.level

    def test_phi2_3_on_seven(self, phi2_3):
        report = prime_power_witness(phi2_3, 7)
        assert report.level >= 1
        assert report.p == 7
        assert report.group == "Rot_7"

    def test_high_point_uses_minimal_failing(self):
        """max_degree <= 3/4 n holds on every C^A with |A| <= 4 over F_11, failing first at K_11."""
        report = prime_power_witness(builtin_handle("phi3_three_quarters"), 11)
        assert report.kind is WitnessKind.AVALANCHE_MINIMAL
        assert report.level == 5
        assert report.residue == 1
        assert report.claimed_treewidth_lower_bound == 10

    def test_characteristic_two(self, independent):
        """Over F_4 the difference graph C^A is |A|-regular."""
        report = prime_power_witness(independent, 2, 2)
        assert report.certificate.value == report.level

    def test_verify_cross_checks(self, independent):
        """verify re-derives the residue naively and computes exact treewidth."""
        report = prime_power_witness(independent, 5, verify=True)
        assert int(report.naive_value) % 5 == report.residue
        assert report.exact_treewidth >= report.claimed_treewidth_lower_bound

    def test_hypotheses(self):
        with pytest.raises(HypothesisError):
            prime_power_witness(builtin_handle("always_true"), 5)
        with pytest.raises(HypothesisError):
            prime_power_witness(builtin_handle("connected"), 5)

    def test_json_dump(self, independent):
        data = prime_power_witness(independent, 5).model_dump(mode="json")
        assert data["kind"] == "duality"
        assert data["certificate"]["kind"] == "regular-degree"


class TestSylowWitness:
    """Test suite for the Sylow biclique witness."""

    def test_bipartite_on_four(self, bipartite):
        """K_4 is the only failing Sylow point of K_4; it contains K_{2,2}."""
        report = sylow_biclique_witness(bipartite, 2, 2, check_pushdown=True)
        assert report.kind is WitnessKind.SYLOW_BICLIQUE
        assert report.level == 2
        assert report.residue == 1
        assert report.certificate.value == 2
        assert report.parameters["empty_prefix"] == 0

    @pytest.mark.parametrize("name", ["bipartite", "phi2_3", "independent"])
    def test_biclique_size(self, name):
        report = sylow_biclique_witness(builtin_handle(name), 2, 3)
        assert report.certificate.value == 4
        assert report.parameters["empty_prefix"] == 0

    def test_verify_cross_checks(self, independent):
        """Independent first fails on K_{4,4}, small enough for both cross-checks."""
        report = sylow_biclique_witness(independent, 2, 3, verify=True)
        assert report.level == 1
        assert int(report.naive_value) % 2 == report.residue
        assert report.exact_treewidth == 4

    def test_requires_m_at_least_two(self, bipartite):
        with pytest.raises(InputError):
            sylow_biclique_witness(bipartite, 5, 1)

    def test_trivial_property(self):
        with pytest.raises(HypothesisError):
            sylow_biclique_witness(builtin_handle("always_true"), 2, 2)


class TestAvalanche:
    """Test suite for the avalanche closure."""

    def test_three_quarters(self, f11):
        """|A| = 3 over F_11 gives the bound 5/2, so every B of size at most 2 is checked."""
        report = avalanche_closure(builtin_handle("phi3_three_quarters"), f11, [1, 2, 3])
        assert report.passed
        assert report.bound == "5/2"
        assert report.checked_sets == 16
        assert len(report.embeddings) == 16
        assert report.embeddings[0].b == []

    def test_phi2_3_satisfying_sets(self, phi2_3, f11):
        """Every satisfying A passes; the search runs over all proper subsets of F^+."""
        plus = plus_set(f11)
        passed = 0
        for a in subsets_of(plus):
            if len(a) == len(plus) or not phi2_3(difference_graph(f11, a)):
                continue
            assert avalanche_closure(phi2_3, f11, a).passed
            passed += 1
        assert passed >= 1

    def test_hypotheses(self, independent, f11):
        with pytest.raises(HypothesisError):
            avalanche_closure(independent, f11, [1])
        with pytest.raises(HypothesisError):
            avalanche_closure(builtin_handle("always_true"), f11, plus_set(f11))
        with pytest.raises(InputError):
            avalanche_closure(independent, f11, [7])

    def test_extension_field(self):
        spec = field_make(3, 2)
        three_quarters = builtin_handle("phi3_three_quarters")
        report = avalanche_closure(three_quarters, spec, plus_set(spec)[:2])
        assert report.passed and report.finite_field == "F_9"


class TestClassification:
    """Test suite for classify_k."""

    def test_trivial(self, bipartite):
        assert classify_k(bipartite, 2).verdict is Verdict.TRIVIAL

    def test_scattered(self, bipartite, k3, p3):
        """Bipartiteness first fails on a triangle inside one block of K_6."""
        result = classify_k(bipartite, 6)
        assert (result.q, result.d) == (3, 2)
        assert result.verdict is Verdict.SCATTERED
        assert result.failing_level == 1
        assert result.h == empty_graph(3)
        assert result.shifted_nontrivial
        assert not result.shifted.holds(k3)
        assert result.shifted.holds(p3)

    def test_concentrated(self):
        """phi1_half first fails on K_{3,3}, the cross orbit of Rot^2_3."""
        result = classify_k(builtin_handle("phi1_half"), 6)
        assert result.verdict is Verdict.CONCENTRATED
        assert result.report.kind is WitnessKind.CONCENTRATED
        assert result.report.certificate.value == 3
        assert result.report.parameters["connection_edges"] == [[0, 1]]

    def test_single_block(self, independent):
        """With one block H is empty and the shift is Φ itself."""
        result = classify_k(independent, 5)
        assert result.verdict is Verdict.SCATTERED
        assert result.h_vertices == 0

    def test_capacity(self, bipartite):
        with pytest.raises(CapacityError):
            classify_k(bipartite, 13)
        with pytest.raises(CapacityError):
            classify_k(bipartite, 7)

    def test_requires_monotone(self):
        with pytest.raises(HypothesisError):
            classify_k(builtin_handle("connected"), 4)


class TestScatteredProbe:
    """Test suite for the per-k scattered property."""

    def test_probe(self, bipartite, k3):
        probe = scattered_property_probe(bipartite, 6)
        assert probe.m == 3
        assert probe.h == empty_graph(3)
        assert probe.evaluate(path_graph(3))
        assert not probe.evaluate(k3)
        assert not probe.evaluate(empty_graph(4))
        assert probe.to_report().h_edges == []

    def test_not_scattered(self):
        assert scattered_property_probe(builtin_handle("phi1_half"), 6) is None
        assert scattered_property_probe(builtin_handle("bipartite"), 2) is None

    def test_large_h(self, bipartite):
        """k = 10 would need H on five vertices."""
        with pytest.raises(CapacityError):
            scattered_property_probe(bipartite, 10)

    def test_probe_on_complete_graph(self, bipartite):
        probe = scattered_property_probe(bipartite, 6)
        assert not probe.evaluate(complete_graph(3))
