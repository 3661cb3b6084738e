# positroid/models/graph.py
"""
Le-graph and routing value types.

Vertex ids: externals are their labels 1..n, internals are n+1.. in the
ascending (sink, source) order of the dots they sit on. Index 0 is unused.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

Box = Tuple[int, int]


@dataclass(frozen=True)
class LeGraph:
    """Planar DAG of a Le-diagram with rightward row arcs and upward column arcs."""

    n: int
    sink_mask: int
    dots: Tuple[Box, ...]
    successors: Tuple[Tuple[int, ...], ...]
    sink_reach: Tuple[int, ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.n + len(self.dots)

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def is_external(self, v: int) -> bool:
        return 1 <= v <= self.n

    def is_sink(self, v: int) -> bool:
        return self.is_external(v) and bool(self.sink_mask >> v & 1)

    def is_source(self, v: int) -> bool:
        return self.is_external(v) and not self.sink_mask >> v & 1

    def dot_of(self, v: int) -> Box:
        return self.dots[v - self.n - 1]

    def vertex_name(self, v: int) -> str:
        if self.is_external(v):
            return str(v)
        s, h = self.dot_of(v)
        return f"({s},{h})"

    def arcs(self) -> List[Tuple[int, int]]:
        return [(u, w) for u in self.vertices() for w in self.successors[u]]

    def in_degrees(self) -> Dict[int, int]:
        degrees = {v: 0 for v in self.vertices()}
        for _, w in self.arcs():
            degrees[w] += 1
        return degrees

    def reaches_sink(self, v: int, sink: int) -> bool:
        return bool(self.sink_reach[v] >> sink & 1)


@dataclass(frozen=True)
class RoutingPlan:
    """Pairwise vertex-disjoint paths, each a vertex-id sequence from a source to a sink."""

    paths: Tuple[Tuple[int, ...], ...] = ()

    @property
    def size(self) -> int:
        return len(self.paths)

    def to_json(self, graph: LeGraph) -> List[List[str]]:
        return [[graph.vertex_name(v) for v in path] for path in self.paths]

    @classmethod
    def of(cls, paths: Sequence[Sequence[int]]) -> "RoutingPlan":
        return cls(tuple(tuple(path) for path in paths))
