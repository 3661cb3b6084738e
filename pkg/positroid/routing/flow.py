# positroid/routing/flow.py
"""
Unit-capacity max flow on the vertex-split graph of a Le-graph.

Every vertex v becomes in(v) -> out(v) with capacity one, every arc u -> w
becomes out(u) -> in(w). A super source feeds the requested sources and the
requested sinks drain into a super sink, so the flow value is the largest
number of pairwise vertex-disjoint paths (Menger).
"""

from collections import deque
from typing import List, Optional, Tuple

from positroid.models.graph import LeGraph

SUPER_SOURCE = 0
SUPER_SINK = 1


def _in(v: int) -> int:
    return 2 * v


def _out(v: int) -> int:
    return 2 * v + 1


class SplitGraphFlow:
    """
    Residual network for one Le-graph, reused across many (X, Y, blocked) queries.

    The static edge structure is built once; each query copies the base
    capacities and switches the source, sink and split edges it needs.
    """

    def __init__(self, graph: LeGraph):
        self.graph = graph
        self.node_count = 2 * (graph.vertex_count + 1)
        self.head: List[int] = []
        self.base_cap: List[int] = []
        self.adj: List[List[int]] = [[] for _ in range(self.node_count)]
        self.split_edge = [-1] * (graph.vertex_count + 1)
        self.entry_edge = [-1] * (graph.n + 1)
        self.exit_edge = [-1] * (graph.n + 1)

        for v in graph.vertices():
            self.split_edge[v] = self._add_edge(_in(v), _out(v), 1)
        for u, w in graph.arcs():
            self._add_edge(_out(u), _in(w), 1)
        for label in range(1, graph.n + 1):
            if graph.is_sink(label):
                self.exit_edge[label] = self._add_edge(_out(label), SUPER_SINK, 0)
            else:
                self.entry_edge[label] = self._add_edge(SUPER_SOURCE, _in(label), 0)

    def _add_edge(self, u: int, w: int, cap: int) -> int:
        index = len(self.head)
        self.head.extend((w, u))
        self.base_cap.extend((cap, 0))
        self.adj[u].append(index)
        self.adj[w].append(index + 1)
        return index

    def _capacities(self, sources: int, sinks: int, blocked: int) -> List[int]:
        cap = self.base_cap.copy()
        for label in range(1, self.graph.n + 1):
            if self.entry_edge[label] >= 0:
                cap[self.entry_edge[label]] = sources >> label & 1
            else:
                cap[self.exit_edge[label]] = sinks >> label & 1
        for v in range(1, len(self.split_edge)):
            if blocked >> v & 1:
                cap[self.split_edge[v]] = 0
        return cap

    def _augment(self, cap: List[int]) -> bool:
        parent_edge = [-1] * self.node_count
        parent_edge[SUPER_SOURCE] = -2
        queue = deque([SUPER_SOURCE])
        while queue:
            node = queue.popleft()
            for edge in self.adj[node]:
                target = self.head[edge]
                if cap[edge] and parent_edge[target] == -1:
                    parent_edge[target] = edge
                    if target == SUPER_SINK:
                        while target != SUPER_SOURCE:
                            edge = parent_edge[target]
                            cap[edge] -= 1
                            cap[edge ^ 1] += 1
                            target = self.head[edge ^ 1]
                        return True
                    queue.append(target)
        return False

    def solve(
        self, sources: int, sinks: int, blocked: int = 0, limit: Optional[int] = None
    ) -> Tuple[int, List[int]]:
        """
        Run Edmonds-Karp and return (flow value, residual capacities).

        Args:
            sources: mask of source labels allowed to start a path
            sinks: mask of sink labels allowed to end a path
            blocked: mask of vertex ids no path may use
            limit: stop once this many paths are found
        """
        cap = self._capacities(sources, sinks, blocked)
        bound = min(sources.bit_count(), sinks.bit_count())
        if limit is not None:
            bound = min(bound, limit)
        value = 0
        while value < bound and self._augment(cap):
            value += 1
        return value, cap

    def max_flow(
        self, sources: int, sinks: int, blocked: int = 0, limit: Optional[int] = None
    ) -> int:
        return self.solve(sources, sinks, blocked, limit)[0]

    def paths(self, cap: List[int], sources: int) -> List[Tuple[int, ...]]:
        """Decompose a solved flow into vertex sequences, one per routed source."""
        result = []
        for label in range(1, self.graph.n + 1):
            edge = self.entry_edge[label]
            if edge < 0 or not sources >> label & 1 or cap[edge]:
                continue
            path = [label]
            v = label
            while not self.graph.is_sink(v):
                # forward arc edges sit at even indices; a used one has no capacity left
                used = [
                    e for e in self.adj[_out(v)] if not e & 1 and cap[e] == 0
                ]
                v = self.head[used[0]] // 2
                path.append(v)
            result.append(tuple(path))
        return result
