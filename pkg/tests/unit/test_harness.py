"""Unit Tests for the Verification Harness.

Tests for enumeration, the check registry, corpus scans, extremal
tables, the small Ramsey certificate and the worker pool.
"""

import networkx as nx
import pytest

from ramseytype.codec import CorpusStream, encode_graph6
from ramseytype.config.settings import SearchLimits, Settings
from ramseytype.errors import ErrorCode, GraphError, ProofStepError, SearchLimitError
from ramseytype.generators import parse_family, theorem_family
from ramseytype.graph import from_networkx, is_connected
from ramseytype.harness import (
    CHECK_IDS,
    CHECKS,
    certify_small_ramsey,
    class_count,
    enumerate_graphs,
    estimate_n0,
    extremal_search,
    resolve_checks,
    run_check,
    scan_corpus,
)
from ramseytype.harness.certify import coloring_from_bits
from ramseytype.harness.enumeration import enumerate_up_to
from ramseytype.harness.random_graphs import random_graph
from ramseytype.harness.workers import apply_pool
from ramseytype.isomorphism import canonical_form, canonical_graph
from ramseytype.params import ParamKind


class TestEnumeration:
    """Tests for isomorphism class enumeration."""

    @pytest.mark.parametrize("n, total, connected", [
        (0, 1, 1),
        (1, 1, 1),
        (2, 2, 1),
        (3, 4, 2),
        (4, 11, 6),
        (5, 34, 21),
        (6, 156, 112),
    ])
    def test_class_counts(self, n, total, connected):
        assert class_count(n) == total
        assert class_count(n, connected_only=True) == connected

    def test_matches_the_atlas(self):
        for n in range(1, 7):
            expected = {canonical_form(from_networkx(H))
                        for H in nx.graph_atlas_g() if H.number_of_nodes() == n}
            assert {canonical_form(G) for G in enumerate_graphs(n)} == expected

    def test_stream_is_canonical_and_sorted(self):
        graphs = list(enumerate_graphs(4))
        assert all(canonical_graph(G) == G for G in graphs)
        forms = [canonical_form(G) for G in graphs]
        assert forms == sorted(forms)

    def test_connected_filter(self):
        assert all(is_connected(G) for G in enumerate_graphs(5, connected_only=True))

    def test_up_to(self):
        graphs = enumerate_up_to(4)
        assert len(graphs) == 1 + 2 + 4 + 11
        assert [G.order for G in graphs] == sorted(G.order for G in graphs)

    def test_cap(self):
        with pytest.raises(SearchLimitError) as exc:
            list(enumerate_graphs(5, limits=SearchLimits(enumeration_cap=4)))
        assert exc.value.code == ErrorCode.E201


class TestChecks:
    """Tests for the invariant check registry."""

    def test_registry_entries(self):
        for check_id, entry in CHECKS.items():
            assert callable(entry["function"])
            assert entry["summary"]
        assert CHECK_IDS[0] == "chain"

    def test_resolve_all(self):
        assert resolve_checks(["all"]) == list(CHECK_IDS)
        assert resolve_checks(["cut-adh", "all"])[0] == "cut-adh"
        assert len(resolve_checks(["cut-adh", "all"])) == len(CHECK_IDS)

    def test_resolve_drops_repeats(self):
        assert resolve_checks(["chain", "chain"]) == ["chain"]

    def test_unknown_check(self, named):
        with pytest.raises(ProofStepError) as exc:
            resolve_checks(["chain", "girth"])
        assert exc.value.code == ErrorCode.E303
        with pytest.raises(ProofStepError):
            run_check("girth", named("K2"))

    @pytest.mark.parametrize("check_id", list(CHECK_IDS))
    def test_every_check_passes_on_small_graphs(self, check_id):
        for G in enumerate_up_to(5):
            assert run_check(check_id, G) == [], encode_graph6(G)

    @pytest.mark.parametrize("check_id", ["chain", "cut-adh", "cds-cut", "trichotomy",
                                          "prune-confluence", "h-index"])
    def test_checks_pass_on_random_graphs(self, check_id, rng):
        for _ in range(10):
            G = random_graph(rng.randint(6, 12), 0.3, rng)
            assert run_check(check_id, G) == []

    def test_named_graphs(self, named, petersen):
        for G in (petersen, named("K1,3*"), named("CK3"), named("T3")):
            for check_id in CHECK_IDS:
                assert run_check(check_id, G) == []

    def test_subset_sweep_cap(self, named):
        with pytest.raises(SearchLimitError):
            run_check("cds-subsets", named("P17"))


class TestScan:
    """Tests for corpus scans."""

    def test_clean_scan(self):
        report = scan_corpus(enumerate_up_to(4), ["chain", "cut-adh"])
        assert report.passed
        assert len(report.records) == 18
        assert [r.index for r in report.records] == list(range(18))
        data = report.to_dict()
        assert data == {
            "checks": ["chain", "cut-adh"],
            "graphs": 18,
            "skipped": 0,
            "passed": True,
            "violations": [],
        }

    def test_violations_are_reported(self, monkeypatch):
        def fails_on_edges(G, limits):
            return ["has an edge"] if G.edge_count() else []

        monkeypatch.setitem(CHECKS, "chain", {"function": fails_on_edges, "summary": "test"})
        report = scan_corpus(enumerate_graphs(3), ["chain"])
        assert not report.passed
        assert [v.index for v in report.violations] == [1, 2, 3]
        assert report.violations[0].check == "chain"
        assert report.violations[0].message == "has an edge"

    def test_family_freeness(self):
        report = scan_corpus(enumerate_graphs(4), [], family=parse_family("K3;P3"))
        # edgeless, one edge plus two isolated vertices, two disjoint edges
        assert report.free_count == 3
        data = report.to_dict(include_records=True)
        assert data["family"] == "custom:0 {K3, P3}"
        assert data["free_graphs"] == 3
        assert len(data["records"]) == 11
        assert all("member" in record for record in data["records"])

    def test_lenient_stream_counts_skips(self):
        stream = CorpusStream(["A_", "A!", "Bw"], lenient=True)
        report = scan_corpus(stream, ["chain"])
        assert report.skipped == 1
        assert [r.graph6 for r in report.records] == ["A_", "Bw"]

    def test_workers_do_not_change_the_report(self):
        graphs = list(enumerate_graphs(5))
        one = scan_corpus(graphs, ["chain", "trichotomy"]).to_dict(include_records=True)
        settings = Settings.default()
        settings.harness.jobs = 2
        two = scan_corpus(graphs, ["chain", "trichotomy"], settings).to_dict(include_records=True)
        assert one == two


class TestExtremal:
    """Tests for extremal tables."""

    def test_max_degree_two_without_triangles(self):
        table = extremal_search(theorem_family("maxdeg", 3), ParamKind.DEGREE, 2, 5)
        assert [row.free_graphs for row in table.rows][:4] == [1, 2, 3, 6]
        assert [row.count for row in table.rows] == [0, 0, 1, 4, 5]
        assert table.maximum == 5
        expected = encode_graph6(canonical_graph(from_networkx(nx.cycle_graph(4))))
        assert table.rows[3].witness == expected

    def test_connected_only(self):
        table = extremal_search(theorem_family("maxdeg", 3), ParamKind.DEGREE, 2, 4,
                                connected_only=True)
        assert [row.free_graphs for row in table.rows] == [1, 1, 1, 2]

    def test_degree_family_count_stays_bounded(self):
        # deg:3-free graphs are matchings plus isolated vertices
        table = extremal_search(theorem_family("deg", 3), ParamKind.DEGREE, 2, 6)
        assert [row.free_graphs for row in table.rows] == [1, 2, 2, 3, 3, 4]
        assert [row.count for row in table.rows] == [0] * 6
        assert table.maximum == 0

    def test_degree_family_connected(self):
        table = extremal_search(theorem_family("deg", 3), ParamKind.DEGREE, 2, 5,
                                connected_only=True)
        assert [row.free_graphs for row in table.rows] == [1, 1, 0, 0, 0]

    def test_workers_do_not_change_the_table(self):
        family = theorem_family("maxdeg", 3)
        one = extremal_search(family, ParamKind.DEGREE, 2, 5).to_dict()
        settings = Settings.default()
        settings.harness.jobs = 2
        two = extremal_search(family, ParamKind.DEGREE, 2, 5, settings=settings).to_dict()
        assert one == two

    def test_no_free_graph(self):
        table = extremal_search(parse_family("K1"), ParamKind.DEGREE, 1, 3)
        assert all(row.empty for row in table.rows)
        assert table.maximum is None
        assert table.to_dict()["rows"][0] == {
            "order": 1, "graphs": 1, "free_graphs": 0, "max_count": None, "witness": None,
        }

    def test_order_cap(self):
        with pytest.raises(SearchLimitError) as exc:
            extremal_search(theorem_family("deg", 3), ParamKind.DEGREE, 2, 9)
        assert exc.value.code == ErrorCode.E201

    @pytest.mark.parametrize("max_n, threshold", [(0, 2), (3, -1)])
    def test_bad_arguments(self, max_n, threshold):
        with pytest.raises(GraphError):
            extremal_search(theorem_family("deg", 3), ParamKind.DEGREE, threshold, max_n)


class TestCertificates:
    """Tests for the small Ramsey certificate and the shape threshold estimate."""

    def test_coloring_from_bits(self):
        cc = coloring_from_bits(3, 0b101)
        assert (cc.color(0, 1), cc.color(0, 2), cc.color(1, 2)) == (1, 0, 1)

    def test_small_ramsey(self):
        certificate = certify_small_ramsey()
        assert certificate.holds
        assert certificate.value == 6
        data = certificate.to_dict()
        assert data["k6_colorings"] == 32768
        assert data["k6_passed"] == 32768
        assert data["pentagon_triangles"] == 0
        assert data["pentagon_mono_clique"] is None

    def test_shape_threshold(self):
        estimate = estimate_n0(3, 5)
        assert estimate.estimate == 3
        first = estimate.rows[0]
        assert (first.order, first.graphs, first.covered, first.worst) == (1, 1, 0, 1)
        assert [row.graphs for row in estimate.rows] == [1, 1, 2, 6, 21]

    def test_shape_threshold_not_reached(self):
        assert estimate_n0(4, 3).estimate is None

    def test_bad_n(self):
        with pytest.raises(GraphError):
            estimate_n0(0, 3)


def _square(x):
    return x * x


class TestWorkers:
    """Tests for the ordered worker pool."""

    def test_sequential(self):
        assert apply_pool(_square, [3, 1, 2]) == [9, 1, 4]

    def test_pool_keeps_order(self):
        assert apply_pool(_square, list(range(40)), jobs=3) == [x * x for x in range(40)]
