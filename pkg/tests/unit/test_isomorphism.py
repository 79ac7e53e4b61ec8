"""Unit Tests for Induced Containment, Freeness and Canonical Forms."""

import networkx as nx
import pytest

from ramseytype.config.settings import SearchLimits
from ramseytype.errors import ErrorCode, SearchLimitError
from ramseytype.generators import cycle_graph, path_graph, theorem_family
from ramseytype.graph import build_graph, relabel, to_networkx
from ramseytype.harness.enumeration import graph_from_form
from ramseytype.harness.random_graphs import random_graph
from ramseytype.isomorphism import (
    Embedding,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    family_le,
    find_induced,
    is_family_free,
    verify_embedding,
)


class TestEmbedding:
    """Tests for Embedding and verify_embedding."""

    def test_image_and_dict(self):
        e = Embedding((3, 1))
        assert e.image.to_list() == [1, 3]
        assert e.as_dict() == {0: 3, 1: 1}

    def test_compose(self):
        assert Embedding((0, 2)).compose([5, 6, 7]) == Embedding((5, 7))

    def test_verify(self, named):
        P5 = named("P5")
        P3 = named("P3")
        assert verify_embedding(P5, P3, Embedding((1, 2, 3)))
        assert not verify_embedding(P5, P3, Embedding((0, 1, 3)))
        assert not verify_embedding(P5, P3, Embedding((0, 1, 1)))
        assert not verify_embedding(P5, P3, Embedding((0, 1, 5)))
        assert not verify_embedding(P5, P3, Embedding((0, 1)))

    def test_induced_condition_both_ways(self, named):
        # a path on three vertices of a triangle is a subgraph but not an induced one
        assert not verify_embedding(named("K3"), named("P3"), Embedding((0, 1, 2)))


class TestFindInduced:
    """Tests for the induced subgraph search."""

    def test_least_embedding(self, named):
        assert find_induced(named("P5"), named("P3")) == Embedding((0, 1, 2))
        assert find_induced(named("C5"), named("P4")) == Embedding((0, 1, 2, 3))

    def test_absent(self, named):
        assert find_induced(named("K4"), named("P3")) is None
        assert find_induced(named("P3"), named("P4")) is None

    def test_petersen_cycles(self, petersen):
        assert find_induced(petersen, cycle_graph(4)) is None
        found = find_induced(petersen, cycle_graph(6))
        assert found is not None
        assert verify_embedding(petersen, cycle_graph(6), found)

    def test_empty_pattern(self, named):
        assert find_induced(named("K3"), build_graph(0, [])) == Embedding(())

    def test_against_networkx(self, rng):
        matcher = nx.algorithms.isomorphism.GraphMatcher
        pattern = path_graph(4)
        for _ in range(40):
            G = random_graph(rng.randint(4, 9), 0.4, rng)
            found = find_induced(G, pattern)
            expected = matcher(to_networkx(G), to_networkx(pattern)).subgraph_is_isomorphic()
            assert (found is not None) == expected
            if found is not None:
                assert verify_embedding(G, pattern, found)

    def test_node_budget(self, petersen):
        with pytest.raises(SearchLimitError) as exc:
            find_induced(petersen, cycle_graph(4), SearchLimits(node_budget=1))
        assert exc.value.code == ErrorCode.E202


class TestFreeness:
    """Tests for is_family_free and family_le."""

    def test_first_violation(self, named):
        verdict = is_family_free(named("P4"), theorem_family("deg", 3))
        assert not verdict.free
        assert verdict.member == "P3"
        assert verdict.member_index == 1
        assert verdict.embedding == Embedding((0, 1, 2))

    def test_free(self, named):
        assert is_family_free(named("K2"), theorem_family("deg", 3)).free

    def test_plain_graph_list(self, named):
        verdict = is_family_free(named("C5"), [named("K3"), named("P4")])
        assert verdict.member == "H1"

    def test_family_grows_with_n(self):
        assert family_le(theorem_family("deg", 3), theorem_family("deg", 4)).holds

    def test_certificates_list_escapes(self):
        verdict = family_le(theorem_family("deg", 4), theorem_family("deg", 3))
        assert not verdict.holds
        assert len(verdict.certificates) == 6
        escaped = [c.right for c in verdict.certificates if c.embedding is None]
        assert "P3" in escaped

    def test_certificates_verify(self):
        left = theorem_family("adh", 3)
        right = theorem_family("alpha", 3)
        verdict = family_le(left, right)
        members = {str(m.name): m.graph for m in left.members + right.members}
        for c in verdict.certificates:
            if c.embedding is not None:
                assert verify_embedding(members[c.right], members[c.left], c.embedding)


class TestCanonicalForm:
    """Tests for canonical labelling and isomorphism."""

    def test_relabelling_invariance(self, named, rng):
        for text in ("P5", "K1,3*", "CK3", "T2", "K2,3"):
            G = named(text)
            order = list(range(G.order))
            rng.shuffle(order)
            assert canonical_form(relabel(G, order)) == canonical_form(G)

    def test_canonical_graph_round_trip(self, rng):
        for _ in range(20):
            G = random_graph(rng.randint(0, 8), 0.5, rng)
            assert graph_from_form(canonical_form(G)) == canonical_graph(G)

    def test_same_degrees_not_isomorphic(self, named):
        assert not are_isomorphic(named("C6"), named("2K3"))

    def test_against_networkx(self, rng):
        for _ in range(40):
            n = rng.randint(1, 7)
            G = random_graph(n, 0.5, rng)
            H = random_graph(n, 0.5, rng)
            expected = nx.is_isomorphic(to_networkx(G), to_networkx(H))
            assert are_isomorphic(G, H) == expected

    def test_exact_cap(self, named):
        with pytest.raises(SearchLimitError) as exc:
            canonical_form(named("K5"), SearchLimits(exact_cap=4))
        assert exc.value.code == ErrorCode.E201
