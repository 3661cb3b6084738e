# positroid/services/enumeration.py
import logging
from itertools import product
from typing import Iterator, List, Optional, Tuple

from positroid.core.exceptions import PreconditionError
from positroid.diagram.graph import build_le_graph
from positroid.models.diagram import SINK, SOURCE, LeDiagram
from positroid.models.reports import Catalog, CatalogEntry
from positroid.models.subset import MAX_GROUND_SIZE
from positroid.routing.paths import bases

logger = logging.getLogger(__name__)


def lattice_paths(n: int, r: Optional[int] = None) -> Iterator[str]:
    """Every V/H path of length n in lexicographic order, optionally with exactly r sinks."""
    for steps in product((SOURCE, SINK), repeat=n):
        path = "".join(steps)
        if r is None or path.count(SINK) == r:
            yield path


def fillings(path: str) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """
    Every Le-valid dot set on the boxes of ``path``.

    Boxes are visited row by row from the top, each row west to east, and a
    box is left empty before it is dotted. A box with a dot above it and a
    dot to its left must be dotted, so every completed filling is valid.
    """
    sinks = [i + 1 for i, step in enumerate(path) if step == SINK]
    sources = [i + 1 for i, step in enumerate(path) if step == SOURCE]
    boxes: List[Tuple[int, int]] = [
        (s, h) for s in sinks for h in reversed(sources) if s < h
    ]
    dots: List[Tuple[int, int]] = []

    def fill(
        position: int, columns: int, row_has_dot: bool
    ) -> Iterator[Tuple[Tuple[int, int], ...]]:
        if position == len(boxes):
            yield tuple(sorted(dots))
            return
        s, h = boxes[position]
        if position == 0 or boxes[position - 1][0] != s:
            row_has_dot = False
        forced = row_has_dot and bool(columns >> h & 1)
        if not forced:
            yield from fill(position + 1, columns, row_has_dot)
        dots.append((s, h))
        yield from fill(position + 1, columns | 1 << h, True)
        dots.pop()

    yield from fill(0, 0, False)


def gen_le_diagrams(n: int, r: Optional[int] = None) -> Iterator[LeDiagram]:
    """
    Stream every Le-diagram of size n, paths in lexicographic order.

    Raises:
        PreconditionError: n outside 1..64
    """
    if not 1 <= n <= MAX_GROUND_SIZE:
        raise PreconditionError(f"n must lie in 1..{MAX_GROUND_SIZE}, got {n}")
    for path in lattice_paths(n, r):
        rank = path.count(SINK)
        for dots in fillings(path):
            # generated fillings are valid by construction
            yield LeDiagram.model_construct(n=n, r=rank, path=path, dots=dots)


def catalog(n: int, r: Optional[int] = None) -> Catalog:
    """One entry per distinct basis set among the diagrams of size n."""
    result = Catalog(n=n)
    for diagram in gen_le_diagrams(n, r):
        result.diagrams_seen += 1
        matroid = bases(build_le_graph(diagram))
        if matroid.basis_set in result.index:
            first = result.entries[result.index[matroid.basis_set]].diagram
            logger.warning(
                f"Diagrams {first.path}:{first.dots} and {diagram.path}:{diagram.dots} "
                "share a basis set"
            )
            continue
        result.index[matroid.basis_set] = len(result.entries)
        result.entries.append(CatalogEntry(diagram, matroid))
    logger.info(
        f"Catalog n={n}: {result.diagrams_seen} diagrams, {len(result)} positroids"
    )
    return result
