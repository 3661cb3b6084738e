# positroid/matroid/parallel.py
"""
Loops, coloops and parallel pairs read directly off the Le-graph.

A source linked to nothing is a loop and a sink no source reaches is a
coloop. A source linked to exactly one sink is parallel to that sink. Two
sources h_i < h_j are parallel when every path out of h_j passes through w,
the lowest dot in the column of h_i.
"""

import logging
from typing import List, Optional, Tuple

from positroid.diagram.graph import build_le_graph
from positroid.models.diagram import LeDiagram
from positroid.models.graph import LeGraph
from positroid.models.subset import GroundSubset

logger = logging.getLogger(__name__)


def graph_loops_coloops(
    d: LeDiagram, g: Optional[LeGraph] = None
) -> Tuple[GroundSubset, GroundSubset]:
    g = g or build_le_graph(d)
    loops = [h for h in d.sources() if not g.sink_reach[h]]
    reached = 0
    for h in d.sources():
        reached |= g.sink_reach[h]
    coloops = [v for v in d.sinks() if not reached >> v & 1]
    return GroundSubset.from_labels(loops), GroundSubset.from_labels(coloops)


def _reaches_sink_avoiding(g: LeGraph, start: int, avoid: int) -> bool:
    stack = [start]
    seen = {start}
    while stack:
        v = stack.pop()
        if g.is_sink(v):
            return True
        for w in g.successors[v]:
            if w != avoid and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def graph_parallel_pairs(
    d: LeDiagram, g: Optional[LeGraph] = None
) -> List[Tuple[int, int]]:
    """Parallel pairs of non-loops found structurally, ascending."""
    g = g or build_le_graph(d)
    pairs = []
    live_sources = [h for h in d.sources() if g.sink_reach[h]]

    for h in live_sources:
        reach = g.sink_reach[h]
        if reach & (reach - 1) == 0:
            pairs.append((reach.bit_length() - 1, h))

    for position, right in enumerate(live_sources):
        # a live source has exactly one out-arc, into the lowest dot of its column
        (w,) = g.successors[right]
        for left in live_sources[position + 1 :]:
            if not _reaches_sink_avoiding(g, left, w):
                pairs.append((right, left))

    pairs.sort()
    logger.debug(f"Structural parallel pairs of {d.path}: {pairs}")
    return pairs
