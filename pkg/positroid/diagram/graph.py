# positroid/diagram/graph.py
import logging
from collections import defaultdict
from typing import Dict, List, Tuple

from positroid.models.diagram import LeDiagram
from positroid.models.graph import LeGraph

logger = logging.getLogger(__name__)


def build_le_graph(d: LeDiagram) -> LeGraph:
    """
    Build the Le-graph of a diagram.

    Each row runs from its westmost dot east to its sink; each column runs
    from its source at the bottom up through its dots. Arcs join consecutive
    nodes and there is one row arc and one column arc per dot.
    """
    n = d.n
    dots = d.dots
    vertex = {dot: n + 1 + i for i, dot in enumerate(dots)}

    rows: Dict[int, List[int]] = defaultdict(list)
    columns: Dict[int, List[int]] = defaultdict(list)
    for s, h in dots:
        rows[s].append(h)
        columns[h].append(s)

    successors: List[List[int]] = [[] for _ in range(n + len(dots) + 1)]
    for s, hs in rows.items():
        hs.sort()
        # eastmost dot feeds the sink, every other dot its eastern neighbour
        successors[vertex[(s, hs[0])]].append(s)
        for east, west in zip(hs, hs[1:]):
            successors[vertex[(s, west)]].append(vertex[(s, east)])
    for h, ss in columns.items():
        ss.sort()
        successors[h].append(vertex[(ss[-1], h)])
        for upper, lower in zip(ss, ss[1:]):
            successors[vertex[(lower, h)]].append(vertex[(upper, h)])

    # every successor of dot (s, h) has a smaller (s, h), so ascending dot
    # order is reverse topological
    sink_mask = d.sink_mask()
    reach = [0] * (n + len(dots) + 1)
    for label in d.sinks():
        reach[label] = 1 << label
    for dot in dots:
        v = vertex[dot]
        for w in successors[v]:
            reach[v] |= reach[w]
    for label in d.sources():
        for w in successors[label]:
            reach[label] |= reach[w]

    graph = LeGraph(
        n=n,
        sink_mask=sink_mask,
        dots=dots,
        successors=tuple(tuple(sorted(out)) for out in successors),
        sink_reach=tuple(reach),
    )
    logger.debug(
        f"Built Le-graph for {d.path}: {graph.vertex_count} vertices, {len(graph.arcs())} arcs"
    )
    return graph


def _node_line(name: str, attributes: List[Tuple[str, str]]) -> str:
    rendered = ", ".join(f'{key}="{value}"' for key, value in attributes)
    return f'  "{name}" [{rendered}];'


def emit_dot(g: LeGraph) -> str:
    """Deterministic Graphviz DOT text for a Le-graph."""
    lines = ["digraph LeGraph {", "  rankdir=LR;"]
    for v in g.vertices():
        name = g.vertex_name(v)
        if g.is_sink(v):
            attributes = [("kind", "sink"), ("shape", "box")]
        elif g.is_source(v):
            attributes = [("kind", "source"), ("shape", "diamond")]
        else:
            attributes = [("kind", "internal"), ("shape", "point")]
        lines.append(_node_line(name, attributes))
    for u, w in g.arcs():
        lines.append(f'  "{g.vertex_name(u)}" -> "{g.vertex_name(w)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
