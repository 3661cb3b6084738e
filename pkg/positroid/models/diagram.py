# positroid/models/diagram.py
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from typing import FrozenSet, List, NamedTuple, Tuple

from positroid.models.subset import MAX_GROUND_SIZE, mask_of

SINK = "V"
SOURCE = "H"

Box = Tuple[int, int]


class LeViolation(NamedTuple):
    """An empty box with a dot above it in its column and a dot to its left in its row."""

    box: Box
    above: Box
    left: Box


class LeDiagram(BaseModel):
    """
    Lattice path plus dotted boxes.

    ``path`` is read from the Northeast corner to the Southwest corner; label i
    is the i-th step. A box (s, h) exists exactly when s is a sink, h a source
    and s < h. Dots are stored as (sink, source) pairs in ascending order.

    The model validator checks structure only; the Le-property is checked by
    the parsers (see ``positroid.diagram.parser``) so that violating diagrams
    can still be inspected.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    r: int
    path: str
    dots: Tuple[Tuple[int, int], ...] = ()

    @field_validator("dots", mode="before")
    @classmethod
    def _sort_dots(cls, value):
        try:
            return tuple(sorted(tuple(dot) for dot in value))
        except TypeError:
            # let the field type report it
            return value

    @model_validator(mode="after")
    def _check_structure(self) -> "LeDiagram":
        if not 1 <= self.n <= MAX_GROUND_SIZE:
            raise ValueError(f"n must lie in 1..{MAX_GROUND_SIZE}, got {self.n}")
        if len(self.path) != self.n:
            raise ValueError(f"path has {len(self.path)} steps but n = {self.n}")
        if set(self.path) - {SINK, SOURCE}:
            raise ValueError(f"path may only contain V and H: {self.path!r}")
        if self.path.count(SINK) != self.r:
            raise ValueError(
                f"path has {self.path.count(SINK)} vertical steps but r = {self.r}"
            )
        for s, h in self.dots:
            if not (1 <= s <= self.n and self.path[s - 1] == SINK):
                raise ValueError(f"dot ({s},{h}): {s} is not a sink label")
            if not (1 <= h <= self.n and self.path[h - 1] == SOURCE):
                raise ValueError(f"dot ({s},{h}): {h} is not a source label")
            if s > h:
                raise ValueError(f"dot ({s},{h}): sink must precede source")
        if len(set(self.dots)) != len(self.dots):
            raise ValueError("duplicate dots")
        return self

    def is_sink(self, label: int) -> bool:
        return self.path[label - 1] == SINK

    def sinks(self) -> List[int]:
        return [i + 1 for i, step in enumerate(self.path) if step == SINK]

    def sources(self) -> List[int]:
        return [i + 1 for i, step in enumerate(self.path) if step == SOURCE]

    def sink_mask(self) -> int:
        return mask_of(self.sinks())

    def has_box(self, s: int, h: int) -> bool:
        """Box-existence law: (s, h) is a permissible dot position iff s < h, s a sink, h a source."""
        return (
            1 <= s < h <= self.n
            and self.path[s - 1] == SINK
            and self.path[h - 1] == SOURCE
        )

    def boxes(self) -> List[Box]:
        """All boxes, row-major from the top row, each row west to east."""
        sources = self.sources()
        return [
            (s, h)
            for s in self.sinks()
            for h in reversed(sources)
            if s < h
        ]

    def dot_set(self) -> FrozenSet[Box]:
        return frozenset(self.dots)
