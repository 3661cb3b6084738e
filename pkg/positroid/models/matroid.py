# positroid/models/matroid.py
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from positroid.core.exceptions import MatroidError
from positroid.models.subset import GroundSubset, full_mask, lex_key

SIMPLE = "simple"
MULTIPLE = "multiple"


@dataclass(frozen=True)
class BasisMatroid:
    """
    A matroid on {1..n} given by its bases.

    Bases are stored as ascending int masks so equality compares basis sets.
    The empty matroid has n = 0 and the single basis 0.
    """

    n: int
    r: int
    bases: Tuple[int, ...]
    basis_set: FrozenSet[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.bases)))
        if not ordered:
            raise MatroidError("a matroid needs at least one basis")
        ground = full_mask(self.n)
        for basis in ordered:
            if basis & ~ground:
                raise MatroidError(f"basis {basis:#x} leaves the ground set 1..{self.n}")
            if basis.bit_count() != self.r:
                raise MatroidError(
                    f"basis {GroundSubset(basis)} has {basis.bit_count()} elements, expected {self.r}"
                )
        object.__setattr__(self, "bases", ordered)
        object.__setattr__(self, "basis_set", frozenset(ordered))

    @classmethod
    def from_subsets(
        cls, n: int, bases: Iterable[Union[GroundSubset, int, Iterable[int]]]
    ) -> "BasisMatroid":
        """Build from masks, GroundSubsets or label collections; the rank is read off the first basis."""
        masks = []
        for basis in bases:
            if isinstance(basis, GroundSubset):
                masks.append(basis.mask)
            elif isinstance(basis, int):
                masks.append(basis)
            else:
                masks.append(GroundSubset.from_labels(basis).mask)
        if not masks:
            raise MatroidError("a matroid needs at least one basis")
        return cls(n, masks[0].bit_count(), tuple(masks))

    @classmethod
    def empty(cls) -> "BasisMatroid":
        return cls(0, 0, (0,))

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    @property
    def num_bases(self) -> int:
        return len(self.bases)

    def is_basis(self, mask: int) -> bool:
        return mask in self.basis_set

    def basis_subsets(self) -> List[GroundSubset]:
        """Bases in lexicographic order of their sorted labels."""
        return [GroundSubset(b) for b in sorted(self.bases, key=lex_key)]


@dataclass(frozen=True)
class Flat:
    elements: GroundSubset
    rank: int

    def to_json(self) -> List[int]:
        return self.elements.labels()


@dataclass(frozen=True)
class CopointEntry:
    flat: Flat
    simple: bool

    @property
    def kind(self) -> str:
        return SIMPLE if self.simple else MULTIPLE


@dataclass(frozen=True)
class ColineReport:
    """A coline with its copoints; ``candidate`` names the construction branch when known."""

    coline: Flat
    copoints: Tuple[CopointEntry, ...]
    candidate: Optional[str] = None

    @property
    def simple_copoints(self) -> List[Flat]:
        return [entry.flat for entry in self.copoints if entry.simple]

    @property
    def multiple_copoints(self) -> List[Flat]:
        return [entry.flat for entry in self.copoints if not entry.simple]

    @property
    def positive(self) -> bool:
        return len(self.simple_copoints) > len(self.multiple_copoints)

    def census(self) -> Tuple[int, int]:
        return len(self.simple_copoints), len(self.multiple_copoints)

    def to_json(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "coline": self.coline.to_json(),
            "copoints": [
                {"set": entry.flat.to_json(), "kind": entry.kind}
                for entry in self.copoints
            ],
            "positive": self.positive,
        }
        if self.candidate is not None:
            payload["candidate"] = self.candidate
        return payload


@dataclass(frozen=True)
class MinorResult:
    """A minor together with the original label of each new label 1..n'."""

    matroid: BasisMatroid
    labels: Tuple[int, ...]
