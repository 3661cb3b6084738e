"""Tests for the individual verification suites"""

import pytest

from positroid.core.exceptions import PreconditionError, TheoremViolationError
from positroid.diagram.fixtures import get_fixture
from positroid.models.reports import VerificationReport
from positroid.services import coline
from positroid.services.suites import (
    CATALOG_SCOPE,
    DiagramContext,
    SuiteRegistry,
    describe,
)


@pytest.fixture
def registry(settings):
    return SuiteRegistry(settings.model_dump())


def run_suite(registry, name, diagram):
    report = VerificationReport()
    registry.get(name).check(DiagramContext(diagram), report)
    return report


def test_registry_lists_every_suite(registry):
    assert registry.list_suites() == [
        "theorem",
        "corollary",
        "lemma",
        "rank-oracle",
        "axioms",
        "duality",
    ]
    assert registry.get("duality").metadata.scope == CATALOG_SCOPE
    assert registry.get("missing") is None


def test_get_suites(registry):
    assert len(registry.get_suites(None)) == 6
    assert len(registry.get_suites(["all"])) == 6
    assert [s.metadata.name for s in registry.get_suites(["lemma", "axioms"])] == [
        "lemma",
        "axioms",
    ]


def test_unknown_suite(registry):
    with pytest.raises(PreconditionError) as exc_info:
        registry.get_suites(["theorem", "bogus"])
    assert "bogus" in str(exc_info.value)


def test_describe():
    assert describe(get_fixture("FIG7")) == "VVHVHVH:(1,3)(1,5)(1,7)(2,3)(4,5)(6,7)"


def test_context_simplicity_filter():
    assert DiagramContext(get_fixture("FIG7")).simple_rank3plus
    assert not DiagramContext(get_fixture("FIG4")).simple_rank3plus
    # FIG3 has an isolated source
    assert not DiagramContext(get_fixture("FIG3")).may_be_simple


def test_theorem_suite_on_fig5(registry):
    report = run_suite(registry, "theorem", get_fixture("FIG5"))

    assert report.simple_rank3plus_count == 1
    assert report.suite_counts == {"theorem": 1}
    assert report.ok


def test_theorem_suite_skips_non_simple(registry):
    report = run_suite(registry, "theorem", get_fixture("FIG4"))
    assert report.suite_counts == {}
    assert report.simple_rank3plus_count == 0


def test_corollary_suite_branch_stats(registry):
    report = VerificationReport()
    suite = registry.get("corollary")
    for name in ("FIG5", "FIG7"):
        suite.check(DiagramContext(get_fixture(name)), report)

    assert report.corollary_branch_stats == {"A": 1, "B": 1}
    assert report.corollary_b_by_n == {8: 1}
    assert report.ok


def test_corollary_suite_records_inputs_without_a_positive_candidate(
    registry, no_candidate
):
    report = run_suite(registry, "corollary", no_candidate)

    assert report.corollary_branch_stats == {"A": 0, "B": 0}
    assert report.corollary_counterexamples == [
        f"{describe(no_candidate)} candidate A 2/2, candidate B 2/2"
    ]
    assert report.corollary_failures == []
    assert report.ok


def test_theorem_suite_searches_when_candidates_fail(registry, no_candidate):
    report = run_suite(registry, "theorem", no_candidate)

    assert report.suite_counts == {"theorem": 1}
    assert report.theorem_failures == []
    assert report.witness_failures == []


def test_theorem_suite_stops_when_no_coline_is_positive(
    registry, no_candidate, monkeypatch
):
    monkeypatch.setattr(coline, "search_positive_coline", lambda m: None)
    with pytest.raises(TheoremViolationError):
        run_suite(registry, "theorem", no_candidate)


def test_counterexamples_merge_sorted():
    left = VerificationReport(corollary_counterexamples=["b"])
    right = VerificationReport(corollary_counterexamples=["a"])

    merged = left.merge(right)
    assert merged.corollary_counterexamples == ["a", "b"]
    assert merged.ok


def test_corollary_suite_skips_disconnected(registry):
    report = run_suite(registry, "corollary", get_fixture("BLOCKS1"))
    assert report.suite_counts == {}


@pytest.mark.parametrize("name", ["FIG2", "FIG3", "FIG7", "BLOCKS2"])
def test_lemma_suite(registry, name):
    report = run_suite(registry, "lemma", get_fixture(name))
    assert report.lemma_mismatches == []


@pytest.mark.parametrize("name", ["FIG2", "FIG4", "FIG7"])
def test_rank_oracle_suite(registry, name):
    report = run_suite(registry, "rank-oracle", get_fixture(name))
    assert report.rank_oracle_mismatches == []
    assert report.suite_counts == {"rank-oracle": 1}


@pytest.mark.parametrize("name", ["FIG2", "FIG3", "POSSIBILITY3"])
def test_axioms_suite(registry, name):
    report = run_suite(registry, "axioms", get_fixture(name))
    assert report.axiom_violations == []


def test_duality_suite(registry):
    report = VerificationReport()
    registry.get("duality").run_catalogs(4, report)

    assert report.duality_misses == []
    assert report.suite_counts == {"duality": 2 + 5 + 16 + 65}
