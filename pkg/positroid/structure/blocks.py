# positroid/structure/blocks.py
import logging
import math
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional

from positroid.core.exceptions import PositroidError, PreconditionError
from positroid.diagram.graph import build_le_graph
from positroid.diagram.parser import build_diagram
from positroid.matroid.kernel import circuits, components, minor
from positroid.models.diagram import SINK, LeDiagram
from positroid.models.graph import LeGraph
from positroid.models.matroid import BasisMatroid
from positroid.models.reports import DecompositionReport, Level
from positroid.models.subset import GroundSubset, labels_of, lex_key
from positroid.routing.paths import bases

logger = logging.getLogger(__name__)


class Component(NamedTuple):
    """One direct summand: its labels in the whole ground set, its diagram and matroid on 1..k."""

    labels: GroundSubset
    diagram: LeDiagram
    matroid: BasisMatroid


def leading_sources(d: LeDiagram) -> GroundSubset:
    """Sources before the first sink; they belong to no level."""
    first_sink = d.path.find(SINK)
    count = d.n if first_sink < 0 else first_sink
    return GroundSubset.from_labels(range(1, count + 1))


def levels(d: LeDiagram) -> List[Level]:
    """Maximal runs of one or more sinks followed by zero or more sources."""
    runs: List[List[int]] = []
    for label, step in enumerate(d.path, start=1):
        if step == SINK and (not runs or d.path[label - 2] != SINK):
            runs.append([])
        if runs:
            runs[-1].append(label)
    return [Level(GroundSubset.from_labels(run)) for run in runs]


def _check_block(g: LeGraph, block: int, sources: List[int]) -> None:
    for h in sources:
        reach = g.sink_reach[h]
        inside = bool(block >> h & 1)
        if inside and reach & ~block:
            raise PositroidError(
                f"block {GroundSubset(block)}: source {h} links to a sink outside it"
            )
        if not inside and reach & block:
            raise PositroidError(
                f"block {GroundSubset(block)}: outside source {h} links into it"
            )


def isolated_blocks(d: LeDiagram, g: Optional[LeGraph] = None) -> DecompositionReport:
    """
    Components of the linkage relation between sources and sinks.

    Loops and coloops come out as singleton blocks. Blocks are ordered by
    smallest label and each is checked against both isolation conditions.
    """
    g = g or build_le_graph(d)
    parent = list(range(d.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    sources = d.sources()
    for h in sources:
        for v in labels_of(g.sink_reach[h]):
            parent[find(v)] = find(h)

    grouped: Dict[int, int] = {}
    for label in range(1, d.n + 1):
        root = find(label)
        grouped[root] = grouped.get(root, 0) | 1 << label
    blocks = sorted(grouped.values(), key=lex_key)
    for block in blocks:
        _check_block(g, block, sources)

    runs = levels(d)
    block_levels = tuple(
        tuple(i for i, level in enumerate(runs) if level.elements.mask & block)
        for block in blocks
    )
    return DecompositionReport(
        blocks=tuple(GroundSubset(block) for block in blocks),
        block_levels=block_levels,
    )


def is_connected(m: BasisMatroid) -> bool:
    """Whether every pair of elements lies in a common circuit; the empty matroid counts as connected."""
    return len(components(m)) <= 1


def is_connected_by_circuits(m: BasisMatroid) -> bool:
    """Pairwise common-circuit test straight from the definition."""
    found = [c.mask for c in circuits(m)]
    for e, f in combinations(range(1, m.n + 1), 2):
        pair = 1 << e | 1 << f
        if not any(c & pair == pair for c in found):
            return False
    return True


def restrict_diagram(d: LeDiagram, labels: GroundSubset) -> LeDiagram:
    """
    The diagram on ``labels`` relabeled to 1..k in order.

    Path steps and dots with both ends inside ``labels`` are kept. On an
    isolated block the result generates the corresponding direct summand.

    Raises:
        PreconditionError: labels empty or outside 1..n
        DiagramError: the restriction breaks the Le-property
    """
    kept = labels.labels()
    if not kept or not labels.within(d.n):
        raise PreconditionError(f"cannot restrict a diagram on 1..{d.n} to {labels}")
    position = {label: i for i, label in enumerate(kept, start=1)}
    path = "".join(d.path[label - 1] for label in kept)
    dots = [
        (position[s], position[h])
        for s, h in d.dots
        if s in position and h in position
    ]
    return build_diagram(len(path), path.count(SINK), path, dots)


def decompose_components(m: BasisMatroid, d: LeDiagram) -> List[Component]:
    """
    Direct-sum decomposition along the isolated blocks of d.

    Raises:
        PreconditionError: d does not generate m
        PositroidError: the component basis counts do not multiply to the total
    """
    g = build_le_graph(d)
    if bases(g) != m:
        raise PreconditionError("the diagram does not generate the given matroid")
    report = isolated_blocks(d, g)
    result = []
    for block in report.blocks:
        restricted = minor(m, GroundSubset(m.ground & ~block.mask), 0).matroid
        result.append(Component(block, restrict_diagram(d, block), restricted))

    product = math.prod(component.matroid.num_bases for component in result)
    if product != m.num_bases:
        raise PositroidError(
            f"direct-sum check failed: {product} basis combinations, {m.num_bases} bases"
        )
    logger.debug(f"Decomposed {d.path} into {len(result)} components")
    return result


def decompose(m: BasisMatroid, d: LeDiagram) -> List[BasisMatroid]:
    return [component.matroid for component in decompose_components(m, d)]


def has_spanning_circuit(m: BasisMatroid) -> bool:
    return any(len(c) == m.r + 1 for c in circuits(m))
