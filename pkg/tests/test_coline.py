"""Tests for the positive-coline construction and the cocircuit witness"""

import pytest

from conftest import matroid_of
from positroid.core.exceptions import PreconditionError, TheoremViolationError
from positroid.diagram.fixtures import get_fixture
from positroid.diagram.parser import build_diagram
from positroid.matroid.kernel import copoints_on
from positroid.models.reports import SinkPair
from positroid.models.subset import GroundSubset
from positroid.services import coline
from positroid.services.coline import (
    CANDIDATE_A,
    CANDIDATE_B,
    FREE,
    LIFTED,
    SEARCH,
    candidate_colines,
    cocircuit_pair_witness,
    evaluate_candidates,
    last_consecutive_sink_pair,
    lift_coline,
    positive_coline,
    search_positive_coline,
)


def labels(flats):
    return [flat.elements.labels() for flat in flats]


def test_last_consecutive_sink_pair(fig2, fig5, fig7):
    assert last_consecutive_sink_pair(fig2) == SinkPair(2, 3, 5)
    assert last_consecutive_sink_pair(fig5) == SinkPair(1, 2, 4)
    assert last_consecutive_sink_pair(fig7) == SinkPair(1, 2, 4)
    assert last_consecutive_sink_pair(build_diagram(3, 3, "VVV", [])) == SinkPair(2, 3)


def test_last_consecutive_sink_pair_needs_adjacent_sinks():
    with pytest.raises(PreconditionError):
        last_consecutive_sink_pair(build_diagram(4, 2, "VHVH", []))


def test_candidate_colines_fig5(fig5):
    m = matroid_of(fig5)
    a, b = candidate_colines(m, SinkPair(1, 2, 4), GroundSubset(fig5.sink_mask()))

    assert a.elements == GroundSubset.of(4, 7)
    assert b is not None
    assert b.elements == GroundSubset.of(2, 7)
    assert a.rank == b.rank == m.r - 2


def test_candidate_colines_without_later_sink():
    d = build_diagram(3, 3, "VVV", [])
    a, b = candidate_colines(matroid_of(d), SinkPair(2, 3), GroundSubset(d.sink_mask()))
    assert a.elements == GroundSubset.of(1)
    assert b is None


def test_candidate_colines_need_rank_three():
    d = get_fixture("U12")
    with pytest.raises(PreconditionError):
        candidate_colines(matroid_of(d), SinkPair(1, 2), GroundSubset.of(1))


def test_fig5_falls_back_to_candidate_b(fig5):
    outcome = evaluate_candidates(matroid_of(fig5), fig5)

    assert not outcome.a.positive
    assert outcome.a.census() == (1, 2)
    assert outcome.b is not None
    assert outcome.chosen is outcome.b

    report = positive_coline(matroid_of(fig5), fig5)
    assert report.coline.elements == GroundSubset.of(2, 7)
    assert report.candidate == CANDIDATE_B
    assert labels(report.simple_copoints) == [[2, 4, 7], [2, 5, 7], [2, 6, 7]]
    assert report.positive


def test_fig7_takes_candidate_a(fig7):
    outcome = evaluate_candidates(matroid_of(fig7), fig7)
    assert outcome.a.positive
    assert outcome.b is None

    report = positive_coline(matroid_of(fig7), fig7)
    assert report.coline.elements == GroundSubset.of(4, 6)
    assert report.candidate == CANDIDATE_A
    assert report.census() == (2, 1)


def test_neither_candidate_positive_falls_back_to_search(no_candidate):
    m = matroid_of(no_candidate)
    outcome = evaluate_candidates(m, no_candidate)

    assert outcome.pair == SinkPair(1, 2, 4)
    assert outcome.a.census() == (2, 2)
    assert outcome.b is not None
    assert outcome.b.census() == (2, 2)
    assert outcome.chosen is None

    report = positive_coline(m, no_candidate)
    assert report.candidate == SEARCH
    assert report.positive
    assert report.coline.rank == m.r - 2
    assert report == search_positive_coline(m)
    assert len(cocircuit_pair_witness(m, report).symdiff) == 2


def test_no_positive_coline_at_all_raises(no_candidate, monkeypatch):
    monkeypatch.setattr(coline, "search_positive_coline", lambda m: None)

    with pytest.raises(TheoremViolationError) as exc_info:
        positive_coline(matroid_of(no_candidate), no_candidate)
    diagnostics = exc_info.value.diagnostics
    assert diagnostics["sink_pair"] == [1, 2, 4]
    assert set(diagnostics) >= {"diagram", "A", "B"}


def test_search_on_rank_two_uniform_matroid():
    m = matroid_of(build_diagram(4, 2, "VVHH", [(1, 3), (1, 4), (2, 3), (2, 4)]))
    report = search_positive_coline(m)

    # the only coline is the empty flat and all four points are simple copoints
    assert report.coline.elements == GroundSubset()
    assert report.census() == (4, 0)
    assert report.candidate == SEARCH


def test_disconnected_coline_is_lifted_from_a_summand(blocks1):
    m = matroid_of(blocks1)
    report = positive_coline(m, blocks1)

    assert report.candidate == LIFTED
    assert report.coline.elements == GroundSubset.of(4, 5, 6, 7, 8)
    assert report.coline.rank == m.r - 2
    assert labels(report.simple_copoints) == [[1, 4, 5, 6, 7, 8], [2, 4, 5, 6, 7, 8]]
    assert labels(report.multiple_copoints) == [[3, 4, 5, 6, 7, 8, 9]]
    assert report.positive
    # same copoints as computing them directly on the whole matroid
    assert copoints_on(m, report.coline).copoints == report.copoints


def test_free_matroid_coline():
    d = build_diagram(3, 3, "VVV", [])
    report = positive_coline(matroid_of(d), d)

    assert report.candidate == FREE
    assert report.coline.elements == GroundSubset.of(1)
    assert labels(report.simple_copoints) == [[1, 2], [1, 3]]


def test_positive_coline_preconditions(fig4):
    with pytest.raises(PreconditionError):
        positive_coline(matroid_of(fig4), fig4)
    u12 = get_fixture("U12")
    with pytest.raises(PreconditionError):
        positive_coline(matroid_of(u12), u12)


def test_cocircuit_pair_witness(fig7):
    m = matroid_of(fig7)
    witness = cocircuit_pair_witness(m, positive_coline(m, fig7))

    assert witness.c1 == GroundSubset.of(1, 3, 5, 7)
    assert witness.c2 == GroundSubset.of(1, 2, 5, 7)
    assert witness.symdiff == GroundSubset.of(2, 3)
    assert witness.to_json()["cocircuits"] == [[1, 3, 5, 7], [1, 2, 5, 7]]


def test_cocircuit_pair_witness_needs_two_simple_copoints(fig5):
    m = matroid_of(fig5)
    report = copoints_on(m, GroundSubset.of(4, 7))
    with pytest.raises(PreconditionError):
        cocircuit_pair_witness(m, report)


def test_lift_coline(fig7):
    report = copoints_on(matroid_of(fig7), GroundSubset.of(4, 6))

    assert lift_coline(report, GroundSubset(), 0) is report
    with pytest.raises(PreconditionError):
        lift_coline(report, GroundSubset.of(1), 1)

    lifted = lift_coline(report, GroundSubset.of(8, 9), 1)
    assert lifted.coline.elements == GroundSubset.of(4, 6, 8, 9)
    assert lifted.coline.rank == report.coline.rank + 1
    assert lifted.census() == report.census()


def test_lift_coline_shifts_every_flat_rank(fig7):
    report = copoints_on(matroid_of(fig7), GroundSubset.of(4, 6))
    lifted = lift_coline(report, GroundSubset.of(8, 9), 2)

    assert lifted.coline.rank == report.coline.rank + 2
    assert len(lifted.copoints) == len(report.copoints)
    assert all(entry.flat.rank == lifted.coline.rank + 1 for entry in lifted.copoints)


def test_lift_coline_rejects_impossible_rest_rank(fig7):
    report = copoints_on(matroid_of(fig7), GroundSubset.of(4, 6))
    with pytest.raises(PreconditionError):
        lift_coline(report, GroundSubset.of(8, 9), 3)
    with pytest.raises(TypeError):
        lift_coline(report, GroundSubset.of(8, 9))
