# positroid/routing/gammoid.py
"""Rank oracle for an arbitrary gammoid (D, T, E), via networkx max flow on the node-split digraph."""

import logging
from typing import Hashable, Iterable, Set, Union

import networkx as nx

from positroid.core.exceptions import PreconditionError
from positroid.models.graph import LeGraph
from positroid.models.subset import GroundSubset

logger = logging.getLogger(__name__)

_SOURCE = ("__source__",)
_SINK = ("__sink__",)

Nodes = Union[GroundSubset, Iterable[Hashable]]


def _node_set(nodes: Nodes) -> Set[Hashable]:
    if isinstance(nodes, GroundSubset):
        return set(nodes.labels())
    return set(nodes)


def le_graph_to_digraph(g: LeGraph) -> nx.DiGraph:
    """networkx view of a Le-graph; nodes are vertex ids, so externals keep their labels."""
    digraph = nx.DiGraph()
    for v in g.vertices():
        kind = "sink" if g.is_sink(v) else "source" if g.is_source(v) else "internal"
        digraph.add_node(v, kind=kind, name=g.vertex_name(v))
    digraph.add_edges_from(g.arcs())
    return digraph


def gammoid_rank(D: nx.DiGraph, T: Nodes, E: Nodes, X: Nodes) -> int:
    """
    Largest subset of X that routes into T by pairwise vertex-disjoint paths.

    Elements of X that lie in T route by length-zero paths. No vertex is
    shared between paths, external ones included.

    Raises:
        PreconditionError: T or E is not a set of vertices of D, or X is not inside E
    """
    targets, ground, chosen = _node_set(T), _node_set(E), _node_set(X)
    vertices = set(D.nodes)
    if not targets <= vertices:
        missing = sorted(map(str, targets - vertices))
        raise PreconditionError(f"T is not a subset of the digraph vertices: {missing}")
    if not ground <= vertices:
        missing = sorted(map(str, ground - vertices))
        raise PreconditionError(f"E is not a subset of the digraph vertices: {missing}")
    if not chosen <= ground:
        raise PreconditionError("X is not a subset of E")
    if not chosen or not targets:
        return 0

    split = nx.DiGraph()
    for v in D.nodes:
        split.add_edge((v, "in"), (v, "out"), capacity=1)
    for u, w in D.edges:
        split.add_edge((u, "out"), (w, "in"), capacity=1)
    for x in chosen:
        split.add_edge(_SOURCE, (x, "in"), capacity=1)
    for t in targets:
        split.add_edge((t, "out"), _SINK, capacity=1)

    flow_value, _ = nx.maximum_flow(split, _SOURCE, _SINK)
    logger.debug(f"Gammoid rank of {len(chosen)} elements: {flow_value}")
    return int(flow_value)
