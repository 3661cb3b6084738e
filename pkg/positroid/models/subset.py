# positroid/models/subset.py
"""
Subsets of the ground set {1..n} stored as characteristic bit vectors.

Bit i stands for label i; bit 0 is never set. Hot loops in the routing and
kernel modules work on the raw ``int`` masks, the public API wraps them in
``GroundSubset``.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

MAX_GROUND_SIZE = 64


def full_mask(n: int) -> int:
    """Mask with bits 1..n set."""
    return ((1 << n) - 1) << 1


def mask_of(labels: Iterable[int]) -> int:
    mask = 0
    for label in labels:
        mask |= 1 << label
    return mask


def labels_of(mask: int) -> List[int]:
    """Ascending labels of a mask."""
    labels = []
    label = 0
    while mask:
        if mask & 1:
            labels.append(label)
        mask >>= 1
        label += 1
    return labels


def lex_key(mask: int) -> Tuple[int, ...]:
    return tuple(labels_of(mask))


def format_labels(mask: int) -> str:
    return ",".join(str(label) for label in labels_of(mask))


@dataclass(frozen=True, order=True)
class GroundSubset:
    """A subset of {1..n} as a bit vector (n <= 64)."""

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask & 1 or self.mask >> (MAX_GROUND_SIZE + 1):
            raise ValueError(f"mask {self.mask:#x} sets bits outside 1..64")

    @classmethod
    def of(cls, *labels: int) -> "GroundSubset":
        return cls(mask_of(labels))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "GroundSubset":
        return cls(mask_of(labels))

    @classmethod
    def parse(cls, text: str) -> "GroundSubset":
        """Parse a comma-separated label list such as ``4,5,6,7``; empty text is the empty set."""
        items = [item.strip() for item in text.split(",") if item.strip()]
        try:
            labels = [int(item) for item in items]
        except ValueError:
            raise ValueError(f"not a comma-separated label list: {text!r}")
        if any(label < 1 or label > MAX_GROUND_SIZE for label in labels):
            raise ValueError(f"labels must lie in 1..{MAX_GROUND_SIZE}: {text!r}")
        return cls(mask_of(labels))

    @classmethod
    def full(cls, n: int) -> "GroundSubset":
        return cls(full_mask(n))

    def labels(self) -> List[int]:
        return labels_of(self.mask)

    def within(self, n: int) -> bool:
        return self.mask & ~full_mask(n) == 0

    def __iter__(self) -> Iterator[int]:
        return iter(labels_of(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: object) -> bool:
        return isinstance(label, int) and label > 0 and bool(self.mask >> label & 1)

    def __or__(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.mask | other.mask)

    def __and__(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.mask & other.mask)

    def __sub__(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.mask & ~other.mask)

    def __xor__(self, other: "GroundSubset") -> "GroundSubset":
        return GroundSubset(self.mask ^ other.mask)

    def __str__(self) -> str:
        return "{" + format_labels(self.mask) + "}"
