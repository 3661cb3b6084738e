# positroid/matroid/kernel.py
"""
Matroid operations over an explicit basis set.

Everything is computed from the bases. When the ground set is small the
full rank function is tabulated once per matroid and shared by closure,
flats and circuits.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple, Union

from positroid.core.exceptions import PreconditionError
from positroid.models.matroid import (
    BasisMatroid,
    ColineReport,
    CopointEntry,
    Flat,
    MinorResult,
)
from positroid.models.subset import GroundSubset, labels_of, lex_key

logger = logging.getLogger(__name__)

# 2^TABLE_LIMIT entries is the largest rank table we build
TABLE_LIMIT = 16

SubsetLike = Union[GroundSubset, int]


def _mask(subset: SubsetLike) -> int:
    return subset.mask if isinstance(subset, GroundSubset) else subset


def _check_within(m: BasisMatroid, mask: int, what: str = "subset") -> None:
    if mask & ~m.ground:
        raise PreconditionError(
            f"{what} {GroundSubset(mask)} leaves the ground set 1..{m.n}"
        )


@lru_cache(maxsize=512)
def rank_table(m: BasisMatroid) -> Tuple[int, ...]:
    """
    Rank of every subset, indexed by ``mask >> 1``.

    Independent sets are the subsets of bases (down-closure over each
    element); a dependent set has the rank of its best one-element deletion.
    """
    size = 1 << m.n
    independent = bytearray(size)
    for basis in m.bases:
        independent[basis >> 1] = 1
    for bit in range(m.n):
        step = 1 << bit
        for index in range(size):
            if index & step and independent[index]:
                independent[index ^ step] = 1

    ranks = [0] * size
    for index in range(1, size):
        if independent[index]:
            ranks[index] = index.bit_count()
            continue
        best = 0
        rest = index
        while rest:
            low = rest & -rest
            best = max(best, ranks[index ^ low])
            rest ^= low
        ranks[index] = best
    return tuple(ranks)


def _rank(m: BasisMatroid, mask: int) -> int:
    if m.n <= TABLE_LIMIT:
        return rank_table(m)[mask >> 1]
    return max((mask & basis).bit_count() for basis in m.bases)


def rank_of(m: BasisMatroid, I: SubsetLike) -> int:
    """Largest intersection of I with a basis."""
    mask = _mask(I)
    _check_within(m, mask)
    return _rank(m, mask)


def _closure(m: BasisMatroid, mask: int) -> int:
    base = _rank(m, mask)
    closed = mask
    for label in labels_of(m.ground & ~mask):
        if _rank(m, mask | 1 << label) == base:
            closed |= 1 << label
    return closed


def closure(m: BasisMatroid, I: SubsetLike) -> Flat:
    mask = _mask(I)
    _check_within(m, mask)
    closed = _closure(m, mask)
    return Flat(GroundSubset(closed), _rank(m, closed))


def is_flat(m: BasisMatroid, I: SubsetLike) -> bool:
    mask = _mask(I)
    return _closure(m, mask) == mask


def flats_of_rank(m: BasisMatroid, k: int) -> List[Flat]:
    """
    Every flat of rank k in ascending mask order.

    Level k is obtained by closing F ∪ {e} over the flats F of level k-1.

    Raises:
        PreconditionError: k outside 0..r
    """
    if not 0 <= k <= m.r:
        raise PreconditionError(f"flat rank {k} outside 0..{m.r}")
    level = {_closure(m, 0)}
    for _ in range(k):
        following = set()
        for flat in level:
            for label in labels_of(m.ground & ~flat):
                following.add(_closure(m, flat | 1 << label))
        level = following
    return [Flat(GroundSubset(mask), k) for mask in sorted(level)]


def circuits(m: BasisMatroid) -> List[GroundSubset]:
    """Minimal dependent sets, by size and then mask."""
    found: List[int] = []
    labels = range(1, m.n + 1)
    for size in range(1, m.r + 2):
        for combo in combinations(labels, size):
            mask = 0
            for label in combo:
                mask |= 1 << label
            if _rank(m, mask) != size - 1:
                continue
            if all(_rank(m, mask & ~(1 << label)) == size - 1 for label in combo):
                found.append(mask)
    return [GroundSubset(mask) for mask in found]


def copoints_on(m: BasisMatroid, L: Union[Flat, GroundSubset, int]) -> ColineReport:
    """
    The copoints containing a coline L, classified simple or multiple.

    Elements outside L are grouped by cl(L ∪ {e}). Simple copoints come
    first, then multiple ones, each in lexicographic order.

    Raises:
        PreconditionError: L is not a flat of rank r - 2
    """
    coline = L.elements.mask if isinstance(L, Flat) else _mask(L)
    _check_within(m, coline, "coline")
    if m.r < 2 or _rank(m, coline) != m.r - 2 or _closure(m, coline) != coline:
        raise PreconditionError(
            f"{GroundSubset(coline)} is not a flat of rank r-2 = {m.r - 2}"
        )

    groups: List[int] = []
    remaining = m.ground & ~coline
    while remaining:
        low = remaining & -remaining
        copoint = _closure(m, coline | low)
        groups.append(copoint)
        remaining &= ~copoint

    simple = sorted(
        (c for c in groups if (c & ~coline).bit_count() == 1), key=lex_key
    )
    multiple = sorted(
        (c for c in groups if (c & ~coline).bit_count() > 1), key=lex_key
    )
    entries = tuple(
        CopointEntry(Flat(GroundSubset(c), m.r - 1), True) for c in simple
    ) + tuple(CopointEntry(Flat(GroundSubset(c), m.r - 1), False) for c in multiple)
    return ColineReport(Flat(GroundSubset(coline), m.r - 2), entries)


def colines(m: BasisMatroid) -> List[ColineReport]:
    """Copoint reports for every coline of m (rank at least 2)."""
    if m.r < 2:
        raise PreconditionError(f"rank {m.r} matroid has no colines")
    return [copoints_on(m, flat) for flat in flats_of_rank(m, m.r - 2)]


def loops_coloops(m: BasisMatroid) -> Tuple[GroundSubset, GroundSubset]:
    union = 0
    intersection = m.ground
    for basis in m.bases:
        union |= basis
        intersection &= basis
    return GroundSubset(m.ground & ~union), GroundSubset(intersection)


def parallel_pairs(m: BasisMatroid) -> List[Tuple[int, int]]:
    loops, _ = loops_coloops(m)
    candidates = [label for label in range(1, m.n + 1) if label not in loops]
    return [
        (e, f)
        for e, f in combinations(candidates, 2)
        if _rank(m, 1 << e | 1 << f) == 1
    ]


def is_simple(m: BasisMatroid) -> bool:
    loops, _ = loops_coloops(m)
    return not loops and not parallel_pairs(m)


def dual(m: BasisMatroid) -> BasisMatroid:
    return BasisMatroid(m.n, m.n - m.r, tuple(m.ground & ~basis for basis in m.bases))


def _compress(mask: int, kept: Sequence[int]) -> int:
    result = 0
    for position, label in enumerate(kept, start=1):
        if mask >> label & 1:
            result |= 1 << position
    return result


def minor(
    m: BasisMatroid, delete: SubsetLike, contract: SubsetLike
) -> MinorResult:
    """
    Delete, then contract, then relabel the remaining elements to 1..n' in order.

    Deletion keeps the largest sets among b ∖ D; contraction keeps b ∖ C for
    the bases b of the deletion that meet C the most.

    Raises:
        PreconditionError: the two sets overlap or leave the ground set
    """
    deleted, contracted = _mask(delete), _mask(contract)
    _check_within(m, deleted, "delete set")
    _check_within(m, contracted, "contract set")
    if deleted & contracted:
        raise PreconditionError(
            f"delete and contract sets overlap in {GroundSubset(deleted & contracted)}"
        )

    restricted = {basis & ~deleted for basis in m.bases}
    top = max(b.bit_count() for b in restricted)
    restricted = {b for b in restricted if b.bit_count() == top}
    meet = max((b & contracted).bit_count() for b in restricted)
    remaining = {
        b & ~contracted for b in restricted if (b & contracted).bit_count() == meet
    }

    kept = labels_of(m.ground & ~deleted & ~contracted)
    relabeled = tuple(_compress(b, kept) for b in remaining)
    result = BasisMatroid(len(kept), top - meet, relabeled)
    logger.debug(
        f"Minor deleting {GroundSubset(deleted)} contracting {GroundSubset(contracted)}: "
        f"n={result.n}, r={result.r}, {result.num_bases} bases"
    )
    return MinorResult(result, tuple(kept))


def _union_find_groups(n: int, links: List[int]) -> List[GroundSubset]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for mask in links:
        labels = labels_of(mask)
        for other in labels[1:]:
            parent[find(other)] = find(labels[0])

    groups: Dict[int, int] = {}
    for label in range(1, n + 1):
        root = find(label)
        groups[root] = groups.get(root, 0) | 1 << label
    return sorted(
        (GroundSubset(mask) for mask in groups.values()), key=lambda s: lex_key(s.mask)
    )


def components(m: BasisMatroid) -> List[GroundSubset]:
    """
    Connected components, ordered by smallest label.

    Two elements share a component iff they are joined by a chain of
    fundamental circuits with respect to any single basis.
    """
    if m.n == 0:
        return []
    basis = m.bases[0]
    fundamental = []
    for label in labels_of(m.ground & ~basis):
        circuit = 1 << label
        for inner in labels_of(basis):
            if m.is_basis(basis & ~(1 << inner) | 1 << label):
                circuit |= 1 << inner
        fundamental.append(circuit)
    return _union_find_groups(m.n, fundamental)


def shares_circuit_components(m: BasisMatroid) -> List[GroundSubset]:
    """Classes of the relation 'lie in a common circuit', computed from every circuit."""
    if m.n == 0:
        return []
    return _union_find_groups(m.n, [c.mask for c in circuits(m)])
