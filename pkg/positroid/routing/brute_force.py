# positroid/routing/brute_force.py
import logging
from typing import Dict, List, Tuple

from positroid.core.config import get_settings
from positroid.models.graph import LeGraph
from positroid.models.subset import GroundSubset, labels_of

logger = logging.getLogger(__name__)


def _all_paths(g: LeGraph, start: int, targets: int) -> List[int]:
    """Vertex masks of every simple path from ``start`` to a sink in ``targets``."""
    found: List[int] = []

    def walk(v: int, used: int) -> None:
        if g.is_sink(v):
            if targets >> v & 1:
                found.append(used)
            return
        for w in g.successors[v]:
            if not used >> w & 1:
                walk(w, used | 1 << w)

    walk(start, 1 << start)
    return found


def brute_force_rank(g: LeGraph, I: GroundSubset) -> int:
    """
    Rank by exhaustive search over path families.

    Enumerates every simple path out of each source in I∖B, then searches
    for the largest pairwise vertex-disjoint choice of at most one path per
    source. Independent of the flow solver; meant for small ground sets.
    """
    limit = get_settings().brute_force_n_max
    if g.n > limit:
        logger.warning(f"Brute-force rank on n={g.n} exceeds the configured bound {limit}")

    inside = I.mask & g.sink_mask
    targets = g.sink_mask & ~I.mask
    options: Dict[int, List[int]] = {
        source: _all_paths(g, source, targets)
        for source in labels_of(I.mask & ~g.sink_mask)
    }
    order: List[Tuple[int, List[int]]] = [
        (source, paths) for source, paths in sorted(options.items()) if paths
    ]
    best = 0

    def search(position: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if position == len(order) or count + len(order) - position <= best:
            return
        for path in order[position][1]:
            if not path & used:
                search(position + 1, used | path, count + 1)
        search(position + 1, used, count)

    search(0, 0, 0)
    return inside.bit_count() + best
