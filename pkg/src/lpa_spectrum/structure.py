"""Hereditary saturated sets, breaking vertices, quotient graphs, maximal
tails, and cycle conditions.

Hereditary saturated subsets form a Moore family (closed under intersection),
so :func:`enumerate_hsat` walks them with Ganter's NextClosure algorithm over
bitmasks; its cost is proportional to the number of closed sets rather than
to ``2**n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx

from .errors import CapExceeded, InvalidCycle, NotAdmissible, NotHereditarySaturated
from .graph import (
    OMEGA,
    Edge,
    Graph,
    Mult,
    VertexClass,
    build_graph,
    classify_vertex,
    cone,
    is_omega,
    restricted_subgraph,
    tree,
    vertex_key,
)

DEFAULT_HSAT_CAP = 2**20
DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True)
class HSatSet:
    """A hereditary saturated vertex set together with its breaking vertices."""

    vertices: frozenset[str]
    breaking: frozenset[str]

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class AdmissiblePair:
    hset: HSatSet
    S: frozenset[str]

    def __post_init__(self):
        if not self.S <= self.hset.breaking:
            raise NotAdmissible(
                f"S={sorted(self.S)} is not a subset of the breaking vertices {sorted(self.hset.breaking)}"
            )


@dataclass(frozen=True)
class Cycle:
    """A simple cycle up to rotation, stored from its least vertex.

    ``multiplicity`` is the number of distinct edge-level cycles running
    through this vertex sequence (the product of the edge multiplicities).
    """

    vertices: tuple[str, ...]
    multiplicity: Mult = 1

    @classmethod
    def from_sequence(cls, seq: Iterable[str], multiplicity: Mult = 1) -> "Cycle":
        seq = tuple(seq)
        if not seq:
            raise InvalidCycle("empty cycle")
        k = seq.index(min(seq))
        return cls(seq[k:] + seq[:k], multiplicity)

    @property
    def base(self) -> str:
        return self.vertices[0]

    @cached_property
    def support(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @property
    def arcs(self) -> tuple[tuple[str, str], ...]:
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return "(" + ",".join(self.vertices) + ")"


# ---------------------------------------------------------------- bitmasks


class _Masks:
    """Bitmask view of a graph, indexed by canonical vertex order."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = n = len(g.vertices)
        self.full = (1 << n) - 1
        idx = g.index
        self.bit = {v: 1 << i for v, i in idx.items()}
        self.succ = [0] * n
        self.desc = [0] * n
        self.regular = [False] * n
        for v, i in idx.items():
            for w in g.successors[v]:
                self.succ[i] |= self.bit[w]
            self.regular[i] = classify_vertex(g, v) is VertexClass.REGULAR
        for v, i in idx.items():
            self.desc[i] = self.to_mask(tree(g, v))

    def to_mask(self, xs: Iterable[str]) -> int:
        m = 0
        for v in xs:
            m |= self.bit[v]
        return m

    def to_set(self, mask: int) -> frozenset[str]:
        vs = self.g.vertices
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(vs[i])
            mask >>= 1
            i += 1
        return frozenset(out)

    def closure(self, mask: int) -> int:
        x = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                x |= self.desc[i]
            m >>= 1
            i += 1
        changed = True
        while changed:
            changed = False
            for i in range(self.n):
                b = 1 << i
                if not x & b and self.regular[i] and self.succ[i] & ~x == 0:
                    x |= self.desc[i]
                    changed = True
        return x


def _masks(g: Graph) -> _Masks:
    cached = g.__dict__.get("_lpa_masks")
    if cached is None:
        cached = _Masks(g)
        g.__dict__["_lpa_masks"] = cached
    return cached


# ------------------------------------------------- hereditary / saturated


def is_hereditary(g: Graph, xs: Iterable[str]) -> bool:
    xs = g.require_all(xs)
    return all(g.successors[v] <= xs for v in xs)


def is_saturated(g: Graph, xs: Iterable[str]) -> bool:
    """No regular vertex outside ``xs`` has all of its edges landing in ``xs``."""
    xs = g.require_all(xs)
    for v in g.vertices:
        if v in xs:
            continue
        if classify_vertex(g, v) is VertexClass.REGULAR and g.successors[v] <= xs:
            return False
    return True


def is_hereditary_saturated(g: Graph, xs: Iterable[str]) -> bool:
    xs = g.require_all(xs)
    return is_hereditary(g, xs) and is_saturated(g, xs)


def _breaking(g: Graph, H: frozenset[str]) -> frozenset[str]:
    out = []
    for v in g.vertices:
        if v in H or classify_vertex(g, v) is not VertexClass.INFINITE_EMITTER:
            continue
        outside = sum((e.mult for e in g.out_edges[v] if e.dst not in H), 0)
        if 1 <= outside < OMEGA:
            out.append(v)
    return frozenset(out)


def _hset(g: Graph, H: frozenset[str]) -> HSatSet:
    return HSatSet(H, _breaking(g, H))


def hereditary_saturated_closure(g: Graph, xs: Iterable[str]) -> HSatSet:
    """Smallest hereditary saturated superset of ``xs``."""
    m = _masks(g)
    closed = m.to_set(m.closure(m.to_mask(g.require_all(xs))))
    return _hset(g, closed)


def enumerate_hsat(g: Graph, cap: int = DEFAULT_HSAT_CAP) -> list[HSatSet]:
    """All hereditary saturated subsets, sorted by (size, members)."""
    return [_hset(g, h) for h in _hsat_sets(g, cap)]


def _hsat_sets(g: Graph, cap: int = DEFAULT_HSAT_CAP) -> list[frozenset[str]]:
    cached = g.__dict__.get("_lpa_hsat")
    if cached is not None and len(cached) <= cap:
        return cached
    m = _masks(g)
    n = m.n
    found = []
    a = m.closure(0)
    found.append(a)
    while a != m.full:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                continue
            low = bit - 1
            b = m.closure((a & low) | bit)
            if (b & ~a) & low == 0:
                a = b
                break
        else:  # pragma: no cover - NextClosure always advances below full
            raise AssertionError("NextClosure stalled")
        found.append(a)
        if len(found) > cap:
            raise CapExceeded(f"more than {cap} hereditary saturated sets")
    out = sorted((m.to_set(x) for x in found), key=vertex_key)
    g.__dict__["_lpa_hsat"] = out
    return out


def breaking_vertices(g: Graph, H: Iterable[str]) -> frozenset[str]:
    """Infinite emitters outside ``H`` sending finitely many (and at least one)
    edges, counted with multiplicity, into the complement of ``H``."""
    H = g.require_all(H)
    if not is_hereditary_saturated(g, H):
        raise NotHereditarySaturated(f"{sorted(H)} is not hereditary saturated")
    return _breaking(g, H)


def _prime_name(v: str, taken: set[str]) -> str:
    name = v + "'"
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def quotient_graph(g: Graph, H: Iterable[str], S: Iterable[str]) -> Graph:
    """The graph ``E\\(H,S)`` whose Leavitt path algebra is ``L(E)/I(H,S)``.

    Vertices outside ``H`` are kept, and every breaking vertex ``v`` not in
    ``S`` gets a new sink ``v'``; each kept edge into such a ``v`` is doubled
    by an edge of the same multiplicity into ``v'``.
    """
    H = g.require_all(H)
    S = g.require_all(S)
    if not is_hereditary_saturated(g, H):
        raise NotAdmissible(f"{sorted(H)} is not hereditary saturated")
    B = _breaking(g, H)
    if not S <= B:
        raise NotAdmissible(f"{sorted(S - B)} are not breaking vertices of H")
    taken = set(g.vertices)
    primed = {v: _prime_name(v, taken) for v in g.sorted(B - S)}
    verts = [v for v in g.vertices if v not in H] + list(primed.values())
    edges: list[Edge] = []
    for e in g.edges:
        if e.dst in H:
            continue
        edges.append(e)
        if e.dst in primed:
            edges.append(Edge(e.src, primed[e.dst], e.mult))
    return build_graph(verts, edges, name=g.name)


# ----------------------------------------------------------- maximal tails


def _directed(sub: Graph, M: frozenset[str]) -> bool:
    """MT-3: any two members of ``M`` have a common descendant inside ``M``."""
    members = sub.sorted(M)
    below = {u: tree(sub, u) & M for u in members}
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if not below[u] & below[v]:
                return False
    return True


def is_downward_directed(g: Graph, xs: Iterable[str]) -> bool:
    """MT-3 for ``xs`` with paths and witnesses taken in the subgraph on ``xs``."""
    xs = g.require_all(xs)
    return _directed(restricted_subgraph(g, xs), xs)


def is_maximal_tail(g: Graph, M: Iterable[str], within: Iterable[str] | None = None) -> bool:
    """Check MT-1, MT-2 and MT-3 for ``M`` inside the restricted subgraph on
    ``within`` (the whole graph by default)."""
    M = g.require_all(M)
    W = g.vertex_set if within is None else g.require_all(within)
    if not M <= W:
        return False
    sub = g if W == g.vertex_set else restricted_subgraph(g, W)
    for v in M:
        if not cone(sub, v) <= M:
            return False
        if classify_vertex(sub, v) is VertexClass.REGULAR and not sub.successors[v] & M:
            return False
    return _directed(sub, M)


def maximal_tails(
    g: Graph, within: Iterable[str] | None = None, cap: int = DEFAULT_HSAT_CAP
) -> list[frozenset[str]]:
    """Non-empty maximal tails relative to ``within``, sorted.

    MT-1 together with MT-2 says exactly that the complement is hereditary
    saturated, so tails are found among complements of hereditary saturated
    sets of the restricted subgraph and filtered by MT-3.
    """
    W = g.vertex_set if within is None else g.require_all(within)
    sub = g if W == g.vertex_set else restricted_subgraph(g, W)
    tails = []
    for H in _hsat_sets(sub, cap):
        M = W - H
        if M and _directed(sub, M):
            tails.append(M)
    return sorted(tails, key=vertex_key)


# ----------------------------------------------------------------- cycles


def enumerate_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """All simple cycles, each in canonical rotation, sorted by (length, vertices)."""
    cached = g.__dict__.get("_lpa_cycles")
    if cached is not None:
        return cached
    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    dg.add_edges_from((e.src, e.dst) for e in g.edges)
    out = []
    for seq in nx.simple_cycles(dg):
        c = Cycle.from_sequence(seq)
        mult = math.prod(g.mult[a] for a in c.arcs)
        out.append(Cycle(c.vertices, mult))
        if len(out) > cap:
            raise CapExceeded(f"more than {cap} simple cycles")
    out.sort(key=lambda c: (len(c), c.vertices))
    g.__dict__["_lpa_cycles"] = out
    return out


def _check_cycle(g: Graph, c: Cycle) -> None:
    if len(set(c.vertices)) != len(c.vertices):
        raise InvalidCycle(f"{c} repeats a vertex")
    for a in c.arcs:
        g.require(a[0])
        if a not in g.mult:
            raise InvalidCycle(f"{c} uses a missing edge {a[0]}->{a[1]}")


def has_exit(g: Graph, c: Cycle) -> bool:
    """Some vertex of ``c`` emits an edge besides the one the cycle follows."""
    _check_cycle(g, c)
    return any(g.out_degree(v) > 1 for v in c.vertices)


def condition_L(g: Graph) -> bool:
    return all(has_exit(g, c) for c in enumerate_cycles(g))


def cycle_base_counts(g: Graph) -> dict[str, Mult]:
    """Number of edge-level simple cycles through each vertex."""
    counts: dict[str, Mult] = {v: 0 for v in g.vertices}
    for c in enumerate_cycles(g):
        for v in c.vertices:
            counts[v] = counts[v] + c.multiplicity
    return counts


def cycles_without_K(g: Graph) -> list[Cycle]:
    """Cycles none of whose vertices lies on a second, distinct cycle."""
    counts = cycle_base_counts(g)
    return [c for c in enumerate_cycles(g) if all(counts[v] == 1 for v in c.vertices)]


def return_path_count(g: Graph, v: str, cap: int = 2) -> int:
    """Number of closed simple paths based at ``v`` (paths leaving and first
    returning to ``v``), truncated at ``cap``.

    Any second return path can be rerouted into one of length below
    ``2 * |E0|``, so walks are only followed that far.
    """
    g.require(v)
    frontier = {v: 1}
    total = 0
    for _ in range(2 * len(g)):
        nxt: dict[str, int] = {}
        for u, k in frontier.items():
            for e in g.out_edges[u]:
                ways = min(cap, k * (cap if is_omega(e.mult) else min(e.mult, cap)))
                if e.dst == v:
                    total = min(cap, total + ways)
                else:
                    nxt[e.dst] = min(cap, nxt.get(e.dst, 0) + ways)
        if total >= cap or not nxt:
            break
        frontier = nxt
    return total


def condition_K_witnesses(g: Graph) -> list[str]:
    """Vertices that are the base of exactly one closed simple path."""
    return [v for v in g.vertices if return_path_count(g, v) == 1]


def condition_K(g: Graph) -> bool:
    """No vertex is the base of exactly one closed simple path."""
    return not condition_K_witnesses(g)
