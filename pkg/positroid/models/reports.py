# positroid/models/reports.py
from dataclasses import dataclass, field
from pydantic import BaseModel, Field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from positroid.models.diagram import LeDiagram
from positroid.models.matroid import BasisMatroid, Flat
from positroid.models.subset import GroundSubset


@dataclass(frozen=True)
class Level:
    """A maximal V+H* run of the lattice path."""

    elements: GroundSubset

    def to_json(self) -> List[int]:
        return self.elements.labels()


@dataclass(frozen=True)
class DecompositionReport:
    blocks: Tuple[GroundSubset, ...]
    block_levels: Tuple[Tuple[int, ...], ...]

    @property
    def connected(self) -> bool:
        return len(self.blocks) <= 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "blocks": [block.labels() for block in self.blocks],
            "connected": self.connected,
        }


@dataclass(frozen=True)
class SinkPair:
    v_i: int
    v_next: int
    v_after: Optional[int] = None


@dataclass(frozen=True)
class CocircuitPairWitness:
    """Complements of two simple copoints on one coline."""

    coline: Flat
    c1: GroundSubset
    c2: GroundSubset

    @property
    def symdiff(self) -> GroundSubset:
        return self.c1 ^ self.c2

    def to_json(self) -> Dict[str, Any]:
        return {
            "coline": self.coline.to_json(),
            "cocircuits": [self.c1.labels(), self.c2.labels()],
            "symdiff": self.symdiff.labels(),
        }


@dataclass(frozen=True)
class CatalogEntry:
    diagram: LeDiagram
    matroid: BasisMatroid

    def to_json(self) -> Dict[str, Any]:
        return {
            "diagram": {
                "n": self.diagram.n,
                "r": self.diagram.r,
                "path": self.diagram.path,
                "dots": [list(dot) for dot in self.diagram.dots],
            },
            "bases": [f"{basis:#x}" for basis in self.matroid.bases],
        }


@dataclass
class Catalog:
    """All positroids of one size, keyed by exact basis set."""

    n: int
    entries: List[CatalogEntry] = field(default_factory=list)
    index: Dict[FrozenSet[int], int] = field(default_factory=dict)
    diagrams_seen: int = 0

    def lookup(self, matroid: BasisMatroid) -> Optional[CatalogEntry]:
        position = self.index.get(matroid.basis_set)
        return None if position is None else self.entries[position]

    def __contains__(self, matroid: object) -> bool:
        return isinstance(matroid, BasisMatroid) and matroid.basis_set in self.index

    def __len__(self) -> int:
        return len(self.entries)


FAILURE_FIELDS = (
    "theorem_failures",
    "corollary_failures",
    "witness_failures",
    "lemma_mismatches",
    "rank_oracle_mismatches",
    "axiom_violations",
    "duality_misses",
)


class VerificationReport(BaseModel):
    """
    Aggregated outcome of the exhaustive suites.

    Failure entries are diagram descriptors (``path:dots``) followed by a short
    reason. ``merge`` sums counters and keeps failure lists sorted, so the
    result does not depend on the order partial reports arrive in.
    """

    n_range: Tuple[int, int] = (0, 0)
    suites: List[str] = Field(default_factory=list)
    diagrams_checked: int = 0
    simple_rank3plus_count: int = 0
    suite_counts: Dict[str, int] = Field(default_factory=dict)
    corollary_branch_stats: Dict[str, int] = Field(
        default_factory=lambda: {"A": 0, "B": 0}
    )
    corollary_b_by_n: Dict[int, int] = Field(default_factory=dict)
    # connected inputs where neither candidate is positive; the theorem suite
    # still finds a positive coline for them by search
    corollary_counterexamples: List[str] = Field(default_factory=list)
    theorem_failures: List[str] = Field(default_factory=list)
    corollary_failures: List[str] = Field(default_factory=list)
    witness_failures: List[str] = Field(default_factory=list)
    lemma_mismatches: List[str] = Field(default_factory=list)
    rank_oracle_mismatches: List[str] = Field(default_factory=list)
    axiom_violations: List[str] = Field(default_factory=list)
    duality_misses: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(getattr(self, name) for name in FAILURE_FIELDS)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        def add(left: Dict[Any, int], right: Dict[Any, int]) -> Dict[Any, int]:
            total = dict(left)
            for key, value in right.items():
                total[key] = total.get(key, 0) + value
            return dict(sorted(total.items()))

        ranges = [rng for rng in (self.n_range, other.n_range) if rng != (0, 0)]
        merged: Dict[str, Any] = {
            "n_range": (
                (min(r[0] for r in ranges), max(r[1] for r in ranges))
                if ranges
                else (0, 0)
            ),
            "suites": sorted(set(self.suites) | set(other.suites)),
            "diagrams_checked": self.diagrams_checked + other.diagrams_checked,
            "simple_rank3plus_count": self.simple_rank3plus_count
            + other.simple_rank3plus_count,
            "suite_counts": add(self.suite_counts, other.suite_counts),
            "corollary_branch_stats": add(
                self.corollary_branch_stats, other.corollary_branch_stats
            ),
            "corollary_b_by_n": add(self.corollary_b_by_n, other.corollary_b_by_n),
            "corollary_counterexamples": sorted(
                self.corollary_counterexamples + other.corollary_counterexamples
            ),
        }
        for name in FAILURE_FIELDS:
            merged[name] = sorted(getattr(self, name) + getattr(other, name))
        return VerificationReport(**merged)


@dataclass(frozen=True)
class CommandOutcome:
    """Exit code, stdout payload and the one-line stderr diagnostic of a command."""

    exit_code: int
    payload: str = ""
    diagnostic: str = ""
