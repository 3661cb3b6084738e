# positroid/routing/paths.py
import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterator, List, Tuple

from positroid.core.exceptions import PreconditionError
from positroid.models.graph import LeGraph, RoutingPlan
from positroid.models.matroid import BasisMatroid
from positroid.models.subset import GroundSubset, labels_of, mask_of
from positroid.routing.flow import SplitGraphFlow

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def flow_for(graph: LeGraph) -> SplitGraphFlow:
    return SplitGraphFlow(graph)


class RankOracle:
    """Rank of subsets of a Le-graph's ground set, on raw masks."""

    def __init__(self, graph: LeGraph):
        self.graph = graph
        self.flow = flow_for(graph)
        self.sinks = graph.sink_mask

    def rank(self, mask: int) -> int:
        inside = mask & self.sinks
        sources = mask & ~self.sinks
        if not sources:
            return inside.bit_count()
        return inside.bit_count() + self.flow.max_flow(sources, self.sinks & ~mask)

    def is_basis(self, mask: int) -> bool:
        """Whether I∖B links onto B∖I, for |I| = r."""
        sources = mask & ~self.sinks
        targets = self.sinks & ~mask
        reach = self.graph.sink_reach
        for label in labels_of(sources):
            if not reach[label] & targets:
                return False
        count = sources.bit_count()
        return self.flow.max_flow(sources, targets, limit=count) == count


def _require_labels(
    graph: LeGraph, subset: GroundSubset, sinks: bool, what: str
) -> None:
    if not subset.within(graph.n):
        raise PreconditionError(f"{what} {subset} leaves the ground set 1..{graph.n}")
    wrong = subset.mask & (~graph.sink_mask if sinks else graph.sink_mask)
    if wrong:
        kind = "sinks" if sinks else "sources"
        raise PreconditionError(
            f"{what} must contain {kind} only; offending labels {GroundSubset(wrong)}"
        )


def linked(g: LeGraph, h: int, v: int) -> bool:
    """Whether a directed path from source h to sink v exists."""
    if not g.is_source(h):
        raise PreconditionError(f"{h} is not a source label")
    if not g.is_sink(v):
        raise PreconditionError(f"{v} is not a sink label")
    return g.reaches_sink(h, v)


def simple_paths(
    g: LeGraph, start: int, targets: int, blocked: int = 0
) -> Iterator[Tuple[int, ...]]:
    """
    Paths from ``start`` to a sink in ``targets`` avoiding ``blocked`` vertex ids.

    Successors are tried in ascending id order and every path ends at a sink
    (out-degree 0), so paths come out in lexicographic order.
    """
    if blocked >> start & 1:
        return
    stack: List[int] = [start]

    def extend(v: int) -> Iterator[Tuple[int, ...]]:
        if g.is_sink(v):
            if targets >> v & 1:
                yield tuple(stack)
            return
        for w in g.successors[v]:
            if blocked >> w & 1 or not g.sink_reach[w] & targets:
                continue
            stack.append(w)
            yield from extend(w)
            stack.pop()

    yield from extend(start)


def max_disjoint_routing(g: LeGraph, X: GroundSubset, Y: GroundSubset) -> RoutingPlan:
    """
    A maximum vertex-disjoint routing from sources X into sinks Y.

    Among maximum routings the lexicographically smallest path list by
    (source label, vertex sequence) is returned.

    Raises:
        PreconditionError: X holds a sink, Y holds a source, or either leaves 1..n
    """
    _require_labels(g, X, sinks=False, what="X")
    _require_labels(g, Y, sinks=True, what="Y")
    flow = flow_for(g)
    target = flow.max_flow(X.mask, Y.mask)

    chosen: List[Tuple[int, ...]] = []
    blocked = 0
    available = Y.mask
    pending = X.labels()
    for position, source in enumerate(pending):
        need = target - len(chosen)
        if need == 0:
            break
        later = mask_of(pending[position + 1 :])
        for path in simple_paths(g, source, available, blocked):
            used = mask_of(path)
            rest = flow.max_flow(
                later, available & ~used, blocked | used, limit=need - 1
            )
            if 1 + rest >= need:
                chosen.append(path)
                blocked |= used
                available &= ~used
                break

    plan = RoutingPlan.of(chosen)
    logger.debug(f"Routing {X} -> {Y}: {plan.size} disjoint paths")
    return plan


def verify_routing(
    g: LeGraph, plan: RoutingPlan, X: GroundSubset, Y: GroundSubset
) -> bool:
    """Check arcs, pairwise disjointness and endpoints of a routing."""
    seen = 0
    for path in plan.paths:
        if not path or path[0] not in X or path[-1] not in Y:
            return False
        for u, w in zip(path, path[1:]):
            if w not in g.successors[u]:
                return False
        for v in path:
            if seen >> v & 1:
                return False
            seen |= 1 << v
    return True


def rank(g: LeGraph, I: GroundSubset) -> int:
    """|I ∩ B| plus the size of a maximum routing from I∖B into B∖I."""
    if not I.within(g.n):
        raise PreconditionError(f"{I} leaves the ground set 1..{g.n}")
    return RankOracle(g).rank(I.mask)


def bases(g: LeGraph) -> BasisMatroid:
    """All r-subsets that link onto the complementary sinks; the sink set is one of them."""
    oracle = RankOracle(g)
    r = g.sink_mask.bit_count()
    found = [
        mask
        for mask in (mask_of(labels) for labels in combinations(range(1, g.n + 1), r))
        if oracle.is_basis(mask)
    ]
    matroid = BasisMatroid(g.n, r, tuple(found))
    logger.debug(f"Le-graph on {g.n} elements has {matroid.num_bases} bases")
    return matroid
