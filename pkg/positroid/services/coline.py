# positroid/services/coline.py
"""
Constructing a positive coline of a simple positroid of rank at least three.

On a connected positroid take the last two consecutive sinks v_i, v_i+1 and
the sink v_after following them, and try cl(V - {v_i, v_i+1}) and then
cl(V - {v_i, v_after}). When neither is positive every coline is searched in
ascending mask order. A disconnected positroid gets a positive coline of one
summand, padded with every other summand.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from positroid.core.exceptions import PreconditionError, TheoremViolationError
from positroid.diagram.parser import le_to_dict
from positroid.matroid.kernel import closure, colines, copoints_on, is_simple
from positroid.models.diagram import SINK, LeDiagram
from positroid.models.matroid import BasisMatroid, ColineReport, CopointEntry, Flat
from positroid.models.reports import CocircuitPairWitness, SinkPair
from positroid.models.subset import GroundSubset, lex_key, mask_of
from positroid.structure.blocks import (
    Component,
    decompose_components,
    isolated_blocks,
)

logger = logging.getLogger(__name__)

CANDIDATE_A = "A"
CANDIDATE_B = "B"
LIFTED = "lifted"
RANK2 = "rank2"
FREE = "free"
SEARCH = "search"


@dataclass(frozen=True)
class CandidateOutcome:
    """Both candidate evaluations for one connected positroid; ``b`` is only computed when ``a`` fails."""

    pair: SinkPair
    a: ColineReport
    b: Optional[ColineReport] = None

    @property
    def chosen(self) -> Optional[ColineReport]:
        if self.a.positive:
            return self.a
        if self.b is not None and self.b.positive:
            return self.b
        return None


def last_consecutive_sink_pair(d: LeDiagram) -> SinkPair:
    """
    The two highest labels of the last run of two or more sinks, and the sink after them.

    Raises:
        PreconditionError: no two sinks are adjacent on the path
    """
    found: Optional[Tuple[int, int]] = None
    for label in range(1, d.n):
        if d.path[label - 1] == SINK and d.path[label] == SINK:
            found = (label, label + 1)
    if found is None:
        raise PreconditionError(f"path {d.path} has no two consecutive sinks")
    v_i, v_next = found
    v_after = next((s for s in d.sinks() if s > v_next), None)
    return SinkPair(v_i, v_next, v_after)


def candidate_colines(
    m: BasisMatroid, p: SinkPair, V: GroundSubset
) -> Tuple[Flat, Optional[Flat]]:
    """
    A = cl(V - {v_i, v_next}) and, when a later sink exists, B = cl(V - {v_i, v_after}).

    Raises:
        PreconditionError: rank below three
    """
    if m.r < 3:
        raise PreconditionError(f"candidate colines need rank >= 3, got {m.r}")
    a = closure(m, V - GroundSubset.of(p.v_i, p.v_next))
    b = None
    if p.v_after is not None:
        b = closure(m, V - GroundSubset.of(p.v_i, p.v_after))
    return a, b


def evaluate_candidates(m: BasisMatroid, d: LeDiagram) -> CandidateOutcome:
    pair = last_consecutive_sink_pair(d)
    a_flat, b_flat = candidate_colines(m, pair, GroundSubset(d.sink_mask()))
    a = _tagged(copoints_on(m, a_flat), CANDIDATE_A)
    if a.positive or b_flat is None:
        return CandidateOutcome(pair, a)
    return CandidateOutcome(pair, a, _tagged(copoints_on(m, b_flat), CANDIDATE_B))


def _tagged(report: ColineReport, candidate: str) -> ColineReport:
    return ColineReport(report.coline, report.copoints, candidate)


def _diagnostics(d: LeDiagram, outcome: CandidateOutcome) -> Dict[str, Any]:
    dump: Dict[str, Any] = {
        "diagram": le_to_dict(d),
        "sink_pair": [outcome.pair.v_i, outcome.pair.v_next, outcome.pair.v_after],
        "A": outcome.a.to_json(),
    }
    if outcome.b is not None:
        dump["B"] = outcome.b.to_json()
    return dump


def search_positive_coline(m: BasisMatroid) -> Optional[ColineReport]:
    """First positive coline in ascending mask order, or None."""
    found = next((report for report in colines(m) if report.positive), None)
    return None if found is None else _tagged(found, SEARCH)


def _connected_rule(m: BasisMatroid, d: LeDiagram) -> ColineReport:
    outcome = evaluate_candidates(m, d)
    chosen = outcome.chosen
    if chosen is not None:
        return chosen
    # neither sink candidate is positive on a handful of rank-4 inputs at n=8
    found = search_positive_coline(m)
    if found is not None:
        logger.warning(
            f"Neither candidate coline is positive on {d.path}; "
            f"using {found.coline.elements} from the full search"
        )
        return found
    diagnostics = _diagnostics(d, outcome)
    logger.error(f"No positive coline exists: {diagnostics}")
    raise TheoremViolationError(f"no coline of {d.path} is positive", diagnostics)


def _relabel(report: ColineReport, labels: GroundSubset) -> ColineReport:
    original = labels.labels()

    def back(flat: Flat) -> Flat:
        return Flat(
            GroundSubset(mask_of(original[i - 1] for i in flat.elements)), flat.rank
        )

    return ColineReport(
        back(report.coline),
        tuple(
            CopointEntry(back(entry.flat), entry.simple) for entry in report.copoints
        ),
        report.candidate,
    )


def lift_coline(
    component_report: ColineReport, rest: GroundSubset, rest_rank: int
) -> ColineReport:
    """
    Pad a coline of one summand with the other summands' elements.

    Every copoint H becomes H ∪ rest, so classifications and positivity
    carry over.

    Args:
        component_report: Copoint report of a coline of one summand
        rest: Elements of every other summand
        rest_rank: Rank of ``rest``; added to every flat rank

    Raises:
        PreconditionError: rest meets the elements of the report, or
            rest_rank is outside 0..|rest|
    """
    if not 0 <= rest_rank <= len(rest):
        raise PreconditionError(f"rank {rest_rank} is impossible for {rest}")
    covered = component_report.coline.elements
    for entry in component_report.copoints:
        covered = covered | entry.flat.elements
    if covered & rest:
        raise PreconditionError(
            f"rest {rest} overlaps the coline's ground set in {covered & rest}"
        )
    if not rest:
        return component_report

    def pad(flat: Flat) -> Flat:
        return Flat(flat.elements | rest, flat.rank + rest_rank)

    padded = [
        CopointEntry(pad(entry.flat), entry.simple)
        for entry in component_report.copoints
    ]
    # padding can reorder copoints of different sizes
    padded.sort(key=lambda entry: (not entry.simple, lex_key(entry.flat.elements.mask)))
    return ColineReport(
        pad(component_report.coline), tuple(padded), component_report.candidate
    )


def _component_rule(component: Component) -> ColineReport:
    matroid = component.matroid
    if matroid.r == 2:
        # rank-2 connected simple: the empty coline, every point a simple copoint
        return _tagged(copoints_on(matroid, closure(matroid, 0)), RANK2)
    report = _connected_rule(matroid, component.diagram)
    return _tagged(report, LIFTED)


def positive_coline(m: BasisMatroid, d: LeDiagram) -> ColineReport:
    """
    A positive coline of the simple positroid m generated by d.

    Connected inputs use the two-candidate rule, then the full search.
    Disconnected inputs take the lowest-labeled summand of rank at least two,
    find its positive coline and pad it with the rest; if every summand is a
    coloop any coline works.

    Raises:
        PreconditionError: m is not simple or has rank below three
        TheoremViolationError: a connected summand has no positive coline at all
    """
    if m.r < 3:
        raise PreconditionError(f"positive_coline needs rank >= 3, got {m.r}")
    if not is_simple(m):
        raise PreconditionError("positive_coline needs a simple positroid")

    if isolated_blocks(d).connected:
        return _connected_rule(m, d)

    if m.r == m.n:
        pair = last_consecutive_sink_pair(d)
        a, _ = candidate_colines(m, pair, GroundSubset(d.sink_mask()))
        return _tagged(copoints_on(m, a), FREE)

    parts = decompose_components(m, d)
    chosen = next(part for part in parts if part.matroid.r >= 2)
    report = _relabel(_component_rule(chosen), chosen.labels)
    rest = GroundSubset(m.ground) - chosen.labels
    lifted = lift_coline(report, rest, m.r - chosen.matroid.r)
    logger.debug(
        f"Lifted coline {lifted.coline.elements} from summand {chosen.labels} of {d.path}"
    )
    return lifted


def cocircuit_pair_witness(
    m: BasisMatroid, report: ColineReport
) -> CocircuitPairWitness:
    """
    Complements of the two lexicographically smallest simple copoints.

    Raises:
        PreconditionError: fewer than two simple copoints
    """
    simple: List[Flat] = report.simple_copoints
    if len(simple) < 2:
        raise PreconditionError(
            f"coline {report.coline.elements} has {len(simple)} simple copoints, need 2"
        )
    ground = GroundSubset(m.ground)
    return CocircuitPairWitness(
        coline=report.coline,
        c1=ground - simple[0].elements,
        c2=ground - simple[1].elements,
    )
