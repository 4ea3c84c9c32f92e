"""Finite directed multigraphs with edge multiplicities.

A :class:`Graph` has a finite vertex set and at most one edge record per
ordered pair ``(src, dst)``; the record carries the number of parallel edges,
which is a positive integer or :data:`OMEGA` (infinitely many).  A vertex that
emits an ``OMEGA`` edge is an infinite emitter.

Graphs are immutable.  Vertices are kept in lexicographic order and every
set-valued query returns a ``frozenset``; callers that need a deterministic
listing sort with :func:`vertex_key`.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import DuplicateVertex, InvalidMultiplicity, UnknownVertex

OMEGA = math.inf
Mult = Union[int, float]
VertexSet = frozenset


class Edge(NamedTuple):
    src: str
    dst: str
    mult: Mult


class VertexClass(enum.Enum):
    SINK = "sink"
    REGULAR = "regular"
    INFINITE_EMITTER = "infinite-emitter"


def _check_mult(m) -> Mult:
    if m == OMEGA:
        return OMEGA
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidMultiplicity(f"multiplicity must be a positive integer or OMEGA, got {m!r}")
    return m


def is_omega(m: Mult) -> bool:
    return m == OMEGA


@dataclass(frozen=True)
class Graph:
    """Immutable multigraph; build instances with :func:`build_graph`."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    name: str = field(default="", compare=False)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def mult(self) -> dict[tuple[str, str], Mult]:
        return {(e.src, e.dst): e.mult for e in self.edges}

    @cached_property
    def successors(self) -> dict[str, frozenset[str]]:
        return {v: frozenset(e.dst for e in es) for v, es in self.out_edges.items()}

    @cached_property
    def predecessors(self) -> dict[str, frozenset[str]]:
        return {v: frozenset(e.src for e in es) for v, es in self.in_edges.items()}

    @cached_property
    def _descendants(self) -> dict[str, frozenset[str]]:
        return {v: _bfs(v, self.successors) for v in self.vertices}

    @cached_property
    def _ancestors(self) -> dict[str, frozenset[str]]:
        return {v: _bfs(v, self.predecessors) for v in self.vertices}

    def out_degree(self, v: str) -> Mult:
        """Total number of edges emitted by ``v`` (``OMEGA`` for infinite emitters)."""
        return sum((e.mult for e in self.out_edges[self.require(v)]), 0)

    def require(self, v: str) -> str:
        if v not in self.index:
            raise UnknownVertex(v)
        return v

    def require_all(self, xs: Iterable[str]) -> frozenset[str]:
        xs = frozenset(xs)
        for v in xs:
            self.require(v)
        return xs

    def sorted(self, xs: Iterable[str]) -> list[str]:
        idx = self.index
        return sorted(xs, key=idx.__getitem__)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}{len(self.vertices)} vertices, {len(self.edges)} edge records)"


def _bfs(start: str, adj: Mapping[str, Iterable[str]]) -> frozenset[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def vertex_key(xs: Iterable[str]) -> tuple:
    """Canonical sort key for vertex sets: by size, then lexicographically."""
    s = sorted(xs)
    return (len(s), s)


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, Mult] | tuple[str, str]] = (),
    *,
    name: str = "",
) -> Graph:
    """Build a canonical graph.

    ``edges`` holds ``(src, dst)`` or ``(src, dst, mult)`` tuples.  Repeated
    ``(src, dst)`` records are merged by adding multiplicities, with ``OMEGA``
    absorbing any finite count.

    >>> g = build_graph(["a", "b"], [("a", "b", 2), ("a", "b", OMEGA)])
    >>> g.edges
    (Edge(src='a', dst='b', mult=inf),)
    """
    vs = list(vertices)
    seen: set[str] = set()
    for v in vs:
        if not isinstance(v, str):
            raise TypeError(f"vertex identifiers must be strings, got {v!r}")
        if v in seen:
            raise DuplicateVertex(f"duplicate vertex {v!r}")
        seen.add(v)
    merged: dict[tuple[str, str], Mult] = {}
    for rec in edges:
        if len(rec) == 2:
            src, dst = rec
            m: Mult = 1
        else:
            src, dst, m = rec
        for endpoint in (src, dst):
            if endpoint not in seen:
                raise UnknownVertex(endpoint)
        m = _check_mult(m)
        merged[(src, dst)] = merged.get((src, dst), 0) + m
    canon_edges = tuple(Edge(s, d, m) for (s, d), m in sorted(merged.items()))
    return Graph(tuple(sorted(vs)), canon_edges, name=name)


def classify_vertex(g: Graph, v: str) -> VertexClass:
    es = g.out_edges[g.require(v)]
    if not es:
        return VertexClass.SINK
    if any(is_omega(e.mult) for e in es):
        return VertexClass.INFINITE_EMITTER
    return VertexClass.REGULAR


def is_regular(g: Graph, v: str) -> bool:
    return classify_vertex(g, v) is VertexClass.REGULAR


def is_infinite_emitter(g: Graph, v: str) -> bool:
    return classify_vertex(g, v) is VertexClass.INFINITE_EMITTER


def reaches(g: Graph, u: str, v: str) -> bool:
    """``u >= v``: there is a (possibly empty) directed path from ``u`` to ``v``."""
    g.require(v)
    return v in g._descendants[g.require(u)]


def tree(g: Graph, v: str) -> frozenset[str]:
    """All vertices reachable from ``v``, including ``v`` itself."""
    return g._descendants[g.require(v)]


def cone(g: Graph, v: str) -> frozenset[str]:
    """All vertices that reach ``v``, including ``v`` itself."""
    return g._ancestors[g.require(v)]


def restricted_subgraph(g: Graph, xs: Iterable[str]) -> Graph:
    """Subgraph on ``xs`` keeping exactly the edges with both endpoints in ``xs``."""
    keep = g.require_all(xs)
    return Graph(
        tuple(v for v in g.vertices if v in keep),
        tuple(e for e in g.edges if e.src in keep and e.dst in keep),
        name=g.name,
    )
