"""Unit Tests for the Witness Pipelines.

Every Found outcome must carry an embedding that verifies against the
named member; the concrete members below follow the pipelines' case
order on small hand-built graphs.
"""

import pytest

from ramseytype.config.settings import Settings, WitnessSettings
from ramseytype.errors import ErrorCode, GraphError, ProofStepError, SearchLimitError
from ramseytype.generators import graph_from_text, named_graph
from ramseytype.graph import build_graph
from ramseytype.harness.random_graphs import random_connected_graph, random_graph
from ramseytype.isomorphism import verify_embedding
from ramseytype.witnesses import (
    Found,
    NotTriggered,
    RamseyTable,
    StepFailed,
    WITNESS_IDS,
    only_if_certify,
    plan_thresholds,
    run_witness,
)
from ramseytype.witnesses.hindex import HDegreePipeline
from ramseytype.witnesses.necessity import SINGLE_BOUND, TWO_BOUNDS
from ramseytype.witnesses.report import VIA_CONSTRUCTION, VIA_FALLBACK


def paper_settings(threshold=None):
    settings = Settings.default()
    settings.witness = WitnessSettings(mode="paper", threshold=threshold)
    return settings


def assert_verified(G, report):
    found = report.found
    assert found is not None
    assert verify_embedding(G, named_graph(found.member), found.embedding)
    return found


class TestRamseyTable:
    """Tests for the Ramsey value lookup."""

    def test_trivial_values(self):
        table = RamseyTable()
        assert table.value(7, 1) == 1
        assert table.value(7, 2) == 2
        assert table.value(1, 9) == 9

    def test_certified_value(self):
        assert RamseyTable().value(2, 3) == 6

    def test_unknown_value(self):
        with pytest.raises(ProofStepError) as exc:
            RamseyTable().value(2, 4)
        assert exc.value.code == ErrorCode.E304
        assert not RamseyTable().known(2, 4)

    def test_external_values_are_reported(self):
        table = RamseyTable({(2, 4): 18})
        assert table.value(2, 4) == 18
        assert table.external_names() == ["R_2(4)"]

    def test_bad_lookup(self):
        with pytest.raises(GraphError):
            RamseyTable().value(0, 3)


class TestThresholdPlans:
    """Tests for plan_thresholds."""

    def test_best_effort_connected(self):
        plan = plan_thresholds("deg", 4, WitnessSettings())
        assert (plan.mode, plan.param_threshold, plan.count_threshold) == ("best-effort", 2, 1)

    def test_best_effort_hindex(self):
        plan = plan_thresholds("h-alpha", 3, WitnessSettings(threshold=5))
        assert (plan.param_threshold, plan.count_threshold) == (3, 5)

    def test_paper_degree(self):
        plan = plan_thresholds("deg", 2, WitnessSettings(mode="paper"))
        assert plan.missing is None
        assert plan.constants == {"N1": 6, "c": 6}
        assert plan.count_threshold == 7

    def test_paper_needs_unknown_constant(self):
        plan = plan_thresholds("deg", 3, WitnessSettings(mode="paper"))
        assert plan.missing == "Ramsey constant R_2(5) is not known."

    def test_paper_constant_without_formula(self):
        plan = plan_thresholds("c", 3, WitnessSettings(mode="paper"))
        assert plan.constants == {"N2": 6, "N1": 18}
        assert "no closed form" in plan.missing

    def test_paper_hindex(self):
        plan = plan_thresholds("h-adh", 2, WitnessSettings(mode="paper"))
        assert plan.constants == {"N2": 2, "N3": 3, "N1": 8, "c1": 8, "c2": 2}
        assert (plan.param_threshold, plan.count_threshold) == (8, 2)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            WitnessSettings(mode="fast")


class TestConnectedPipelines:
    """Tests for deg, alpha, c and adh."""

    def test_path_by_construction(self, named):
        G = named("P5")
        report = run_witness(G, "deg", 4)
        found = assert_verified(G, report)
        assert str(found.member) == "P4"
        assert found.embedding.mapping == (0, 1, 2, 3)
        assert found.via == VIA_CONSTRUCTION
        assert [step.step for step in report.trace][:3] == ["count", "prune", "widen"]

    def test_biclique_hub(self, named):
        G = named("K2,6")
        found = assert_verified(G, run_witness(G, "deg", 4))
        assert str(found.member) == "K2,4"

    def test_apex_over_matching(self, named):
        G = named("K1+4K2")
        found = assert_verified(G, run_witness(G, "deg", 4))
        assert str(found.member) == "K1+4K2"
        assert found.embedding.mapping == tuple(range(9))

    def test_not_triggered(self, named):
        settings = Settings.default()
        settings.witness = WitnessSettings(threshold=10)
        report = run_witness(named("P5"), "deg", 3, settings=settings)
        assert report.outcome == NotTriggered(3, 10)

    def test_paper_mode_not_triggered(self, named):
        report = run_witness(named("P5"), "deg", 2, settings=paper_settings())
        assert report.outcome == NotTriggered(3, 7)
        assert report.mode == "paper"
        assert report.constants == {"N1": 6, "c": 6}

    def test_paper_mode_missing_constant(self, named):
        report = run_witness(named("P9"), "deg", 3, settings=paper_settings())
        assert isinstance(report.outcome, StepFailed)
        assert report.outcome.step == "threshold"

    def test_paper_mode_external_constant(self, named):
        table = RamseyTable({(2, 5): 43})
        report = run_witness(named("P5"), "deg", 3, settings=paper_settings(), table=table)
        assert report.outcome == NotTriggered(3, 87)
        assert report.external == ["R_2(5)"]

    @pytest.mark.parametrize("theorem_id", ["deg", "alpha", "c", "adh"])
    def test_random_outcomes_verify(self, theorem_id, rng):
        for _ in range(20):
            G = random_connected_graph(rng.randint(4, 11), 0.25, rng)
            report = run_witness(G, theorem_id, 3)
            assert isinstance(report.outcome, (Found, NotTriggered, StepFailed))
            if report.found is not None:
                assert_verified(G, report)

    def test_disconnected_input(self, named):
        with pytest.raises(SearchLimitError) as exc:
            run_witness(named("2K3"), "deg", 3)
        assert exc.value.code == ErrorCode.E203

    def test_n_must_be_two(self, named):
        with pytest.raises(GraphError) as exc:
            run_witness(named("P5"), "deg", 1)
        assert exc.value.code == ErrorCode.E004

    def test_unknown_theorem(self, named):
        with pytest.raises(ProofStepError) as exc:
            run_witness(named("P5"), "dom", 3)
        assert exc.value.code == ErrorCode.E302

    @pytest.mark.parametrize("theorem_id", ["cor-deg", "h-deg", "h-adh"])
    def test_other_theorems_accept_disconnected_input(self, named, theorem_id):
        report = run_witness(named("2K3"), theorem_id, 3, connected=True)
        assert not report.connected


class TestCorollaryPipelines:
    """Tests for the component-splitting variants."""

    def test_copies_across_components(self, named):
        G = named("4P3")
        report = run_witness(G, "cor-deg", 4)
        found = assert_verified(G, report)
        assert str(found.member) == "4P3"
        assert not report.connected

    @pytest.mark.parametrize("theorem_id", ["cor-deg", "cor-alpha", "cor-c"])
    def test_long_path_by_construction(self, named, theorem_id):
        G = named("P12")
        report = run_witness(G, theorem_id, 3)
        found = assert_verified(G, report)
        assert str(found.member) == "3P3"
        assert found.via == VIA_CONSTRUCTION
        assert "recurse" in [step.step for step in report.trace]

    def test_adhesion_path_by_construction(self, named):
        G = named("P14")
        found = assert_verified(G, run_witness(G, "cor-adh", 3))
        assert str(found.member) == "3P3"
        assert found.via == VIA_CONSTRUCTION

    @pytest.mark.parametrize("theorem_id", ["cor-deg", "cor-alpha", "cor-c", "cor-adh"])
    def test_random_outcomes_verify(self, theorem_id, rng):
        found = 0
        for _ in range(20):
            G = random_graph(rng.randint(8, 13), 0.25, rng)
            report = run_witness(G, theorem_id, 3)
            assert isinstance(report.outcome, (Found, NotTriggered, StepFailed))
            if report.found is not None:
                assert_verified(G, report)
                found += 1
        assert found > 0


class TestHIndexPipelines:
    """Tests for the h-index variants."""

    def test_stars_by_construction(self):
        G = graph_from_text("4K1,4")
        found = assert_verified(G, run_witness(G, "h-adh", 3))
        assert str(found.member) == "3K1,3"
        assert found.via == VIA_CONSTRUCTION

    def test_corona_by_construction(self):
        G = graph_from_text("K3^3")
        found = assert_verified(G, run_witness(G, "h-alpha", 3))
        assert str(found.member) == "K3^3"
        assert found.embedding.mapping == tuple(range(12))

    def test_biclique_by_construction(self):
        G = graph_from_text("K5,5")
        report = run_witness(G, "h-deg", 3)
        found = assert_verified(G, report)
        assert str(found.member) == "K3,3"
        assert found.via == VIA_CONSTRUCTION
        assert "shared-fan" in [step.step for step in report.trace]

    def test_fans_may_use_unselected_high_vertices(self):
        # a star whose leaves carry pendants: the leaves are high but the fan needs them
        G = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
        pipeline = HDegreePipeline(G, "h-deg", 2)
        high = pipeline.high_vertices()
        assert high == [0, 1, 2, 3]
        assert pipeline.gather_fans(high) == [(0, [1, 2])]

    def test_triangle_by_fallback(self):
        G = graph_from_text("K3*")
        found = assert_verified(G, run_witness(G, "h-deg", 3))
        assert str(found.member) == "K3"
        assert found.via == VIA_FALLBACK

    def test_no_fallback(self):
        settings = Settings.default()
        settings.witness = WitnessSettings(exhaustive_fallback=False)
        report = run_witness(graph_from_text("K3*"), "h-deg", 3, settings=settings)
        assert isinstance(report.outcome, StepFailed)
        assert "fallback" not in [step.step for step in report.trace]

    def test_report_dict(self):
        report = run_witness(graph_from_text("K3^3"), "h-alpha", 3)
        data = report.to_dict()
        assert data["theorem"] == "h-alpha"
        assert data["outcome"]["kind"] == "found"
        assert data["outcome"]["member"] == "K3^3"
        assert data["trace"][0]["step"] == "count"

    def test_registry_covers_hindex(self):
        assert {"h-deg", "h-alpha", "h-c", "h-adh"} <= set(WITNESS_IDS)


class TestNecessity:
    """Tests for the measured necessity tables."""

    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    @pytest.mark.parametrize("theorem_id", [*SINGLE_BOUND, "maxdeg"])
    def test_single_bound_holds(self, theorem_id, c):
        report = only_if_certify(theorem_id, c=c)
        assert report.holds
        assert all(count > c for count in report.counts)

    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    @pytest.mark.parametrize("theorem_id", list(TWO_BOUNDS))
    def test_two_bounds_with_equal_constants(self, theorem_id, c):
        report = only_if_certify(theorem_id, c1=c, c2=c)
        assert report.n == 2 * c
        # K_n+E_n has connected neighbourhoods only
        assert report.holds == (theorem_id != "h-c" or c == 1)

    def test_corollary_degree_at_one(self):
        report = only_if_certify("cor-deg", c=1)
        assert report.n == 3
        assert report.counts == [3, 3, 9, 4, 5, 5, 7]
        assert report.holds

    def test_degree(self):
        report = only_if_certify("deg", c=2)
        assert report.n == 5
        assert report.counts == [5, 3, 6, 7, 7, 11]
        assert report.holds

    def test_adhesion(self):
        report = only_if_certify("adh", c=1)
        assert report.n == 4
        assert report.counts == [4, 5, 2]
        assert report.holds

    def test_hindex(self):
        report = only_if_certify("h-adh", c1=2, c2=2)
        assert report.n == 4
        assert report.counts == [4, 4]
        assert report.bound == "#{adh >= 2} < 2"
        assert report.holds

    def test_max_degree(self):
        report = only_if_certify("maxdeg", c=3)
        assert report.counts == [4, 5]
        assert report.holds

    def test_missing_bound(self):
        with pytest.raises(GraphError) as exc:
            only_if_certify("deg")
        assert exc.value.code == ErrorCode.E004

    def test_unknown_theorem(self):
        with pytest.raises(ProofStepError):
            only_if_certify("dom", c=2)
