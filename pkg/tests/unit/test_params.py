"""Unit Tests for Vertex and Graph Parameters."""

import networkx as nx
import pytest

from ramseytype.config.settings import SearchLimits
from ramseytype.errors import ErrorCode, GraphError, SearchLimitError
from ramseytype.graph import to_networkx
from ramseytype.harness.random_graphs import random_connected_graph, random_graph
from ramseytype.params import (
    CHAIN,
    ParamKind,
    adhesion,
    cut_vertices,
    domination,
    h_index,
    h_index_of,
    independence_number,
    induced_matching_number,
    is_dominating,
    is_induced_matching,
    max_clique,
    nontrivial_count,
    nontrivial_vertices,
    parameter_table,
    vertex_param,
)


def _table(G):
    return [parameter_table(G, kind) for kind in CHAIN]


class TestParamKind:
    """Tests for parameter kind parsing."""

    def test_short_names(self):
        assert [ParamKind.parse(k) for k in ("deg", "alpha", "c", "adh")] == list(CHAIN)

    def test_long_names_and_case(self):
        assert ParamKind.parse("Degree") is ParamKind.DEGREE
        assert ParamKind.parse(" ADHESION ") is ParamKind.ADHESION

    def test_unknown(self):
        with pytest.raises(GraphError) as exc:
            ParamKind.parse("girth")
        assert exc.value.code == ErrorCode.E004


class TestVertexParameters:
    """Known values of the four vertex parameters."""

    def test_star_center(self, named):
        assert _table(named("K1,3")) == [[3, 1, 1, 1], [3, 1, 1, 1], [3, 1, 1, 1], [3, 1, 1, 1]]

    def test_apex_over_matching(self, named):
        G = named("K1+3K2")
        assert [vertex_param(G, 0, kind) for kind in CHAIN] == [6, 3, 3, 3]
        assert [vertex_param(G, 1, kind) for kind in CHAIN] == [2, 1, 1, 1]

    def test_clique(self, named):
        assert _table(named("K5")) == [[4] * 5, [1] * 5, [1] * 5, [1] * 5]

    def test_cycle(self, named):
        assert _table(named("C5")) == [[2] * 5, [2] * 5, [2] * 5, [1] * 5]

    def test_petersen(self, petersen):
        assert _table(petersen) == [[3] * 10, [3] * 10, [3] * 10, [1] * 10]

    def test_path_adhesion(self, named):
        assert parameter_table(named("P4"), ParamKind.ADHESION) == [1, 2, 2, 1]

    def test_isolated_vertex_has_adhesion_zero(self, named):
        assert adhesion(named("K1"), 0) == 0
        assert parameter_table(named("E2"), ParamKind.ADHESION) == [0, 0]

    def test_vertex_out_of_range(self, named):
        with pytest.raises(GraphError) as exc:
            vertex_param(named("K3"), 3, ParamKind.DEGREE)
        assert exc.value.code == ErrorCode.E003

    def test_chain_on_random_graphs(self, rng):
        for _ in range(40):
            G = random_graph(rng.randint(1, 9), rng.random(), rng)
            deg, alpha, c, adh = _table(G)
            for v in range(G.order):
                assert deg[v] >= alpha[v] >= c[v] >= adh[v] >= 0

    def test_adhesion_matches_articulation_points(self, rng):
        for _ in range(30):
            G = random_connected_graph(rng.randint(2, 10), 0.2, rng)
            adh = parameter_table(G, ParamKind.ADHESION)
            high = {v for v, value in enumerate(adh) if value >= 2}
            assert high == set(nx.articulation_points(to_networkx(G)))
            assert cut_vertices(G).to_list() == sorted(high)


class TestThresholds:
    """Tests for nontrivial vertex counts and h-indices."""

    @pytest.mark.parametrize("values, expected", [
        ([], 0),
        ([0, 0], 0),
        ([1], 1),
        ([3, 3, 3], 3),
        ([5, 4, 1], 2),
        ([9, 9, 9, 9, 0], 4),
    ])
    def test_h_index_of(self, values, expected):
        assert h_index_of(values) == expected

    def test_nontrivial(self, named):
        G = named("K1,3*")
        assert nontrivial_count(G, ParamKind.DEGREE, 2) == 4
        assert nontrivial_vertices(G, ParamKind.DEGREE, 3).to_list() == [0]

    def test_h_index_of_graph(self, named):
        assert h_index(named("K1,3"), ParamKind.DEGREE) == 1
        assert h_index(named("K4"), ParamKind.DEGREE) == 3
        assert h_index(named("K4"), ParamKind.LOCAL_INDEPENDENCE) == 1

    def test_h_index_brute_force(self, rng):
        for _ in range(20):
            G = random_graph(rng.randint(1, 9), 0.4, rng)
            for kind in CHAIN:
                values = parameter_table(G, kind)
                brute = max(k for k in range(G.order + 1)
                            if sum(1 for x in values if x >= k) >= k)
                assert h_index(G, kind) == brute


class TestIndependenceAndCliques:
    """Tests for the exact stable set and clique searches."""

    def test_petersen_independence(self, petersen):
        alpha, witness = independence_number(petersen)
        assert alpha == 4
        assert petersen.is_stable(witness)

    def test_lexicographically_least(self, named):
        assert independence_number(named("P4"))[1].to_list() == [0, 2]

    def test_max_clique(self, named):
        assert max_clique(named("K2+3K1")).to_list() == [0, 1, 2]

    def test_against_networkx(self, rng):
        for _ in range(30):
            G = random_graph(rng.randint(1, 11), 0.5, rng)
            H = nx.complement(to_networkx(G))
            expected = max(len(c) for c in nx.find_cliques(H))
            assert independence_number(G)[0] == expected

    def test_exact_cap(self, named):
        with pytest.raises(SearchLimitError) as exc:
            independence_number(named("K5"), SearchLimits(exact_cap=3))
        assert exc.value.code == ErrorCode.E201

    def test_node_budget(self, petersen):
        with pytest.raises(SearchLimitError) as exc:
            independence_number(petersen, SearchLimits(node_budget=1))
        assert exc.value.code == ErrorCode.E202


class TestDomination:
    """Tests for plain and connected domination."""

    def test_petersen(self, petersen):
        gamma, witness = domination(petersen)
        assert gamma == 3
        assert nx.is_dominating_set(to_networkx(petersen), set(witness))

    def test_connected_certificate_is_least(self, named):
        gamma_c, witness = domination(named("P4"), connected=True)
        assert gamma_c == 2
        assert witness.to_list() == [1, 2]

    def test_connected_path(self, named):
        assert domination(named("P5"), connected=True)[0] == 3
        assert domination(named("P5"))[0] == 2

    def test_null_graph(self, named):
        assert domination(named("E1"))[0] == 1
        assert domination(named("K1"), connected=True)[0] == 1

    def test_connected_needs_connected_graph(self, named):
        with pytest.raises(SearchLimitError) as exc:
            domination(named("E2"), connected=True)
        assert exc.value.code == ErrorCode.E203

    def test_random_certificates(self, rng):
        for _ in range(20):
            G = random_connected_graph(rng.randint(1, 9), 0.3, rng)
            gamma, witness = domination(G)
            gamma_c, connected_witness = domination(G, connected=True)
            assert is_dominating(G, witness)
            assert is_dominating(G, connected_witness)
            assert gamma <= gamma_c


class TestInducedMatching:
    """Tests for the induced matching number."""

    def test_two_disjoint_edges(self, edges):
        size, witness = induced_matching_number(edges(4, [(0, 1), (2, 3)]))
        assert size == 2
        assert witness == [(0, 1), (2, 3)]

    def test_path(self, named):
        assert induced_matching_number(named("P5"))[0] == 2

    def test_complete_bipartite(self, named):
        assert induced_matching_number(named("K3,3"))[0] == 1

    def test_edgeless(self, named):
        assert induced_matching_number(named("E4")) == (0, [])

    def test_is_induced_matching(self, named):
        P4 = named("P4")
        assert is_induced_matching(P4, [(0, 1)])
        assert not is_induced_matching(P4, [(0, 1), (2, 3)])
        assert not is_induced_matching(P4, [(0, 2)])
        assert not is_induced_matching(P4, [(0, 1), (1, 2)])
