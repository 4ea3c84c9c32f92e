"""The inclusion poset of the prime spectrum.

Nodes are the graded primes plus either one stratum node per non-graded
family (symbolic fields, cardinality infinite) or the instantiated members
(prime fields).  Members of a stratum are pairwise incomparable, so a chain
meets a stratum at most once and chain lengths do not depend on the field.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import cached_property

import networkx as nx

from ..graph import Graph
from ..laurent import SYMBOLIC, FieldSpec
from .ideals import (
    PrimeIdeal,
    contains,
    enumerate_graded_primes,
    ideal_key,
    nongraded_strata,
)


@dataclass(frozen=True)
class PosetNode:
    """A concrete prime, or a stratum node standing for a whole family.

    ``cardinality`` is ``None`` for an infinite stratum and 1 otherwise.
    """

    ideal: PrimeIdeal
    stratum: bool = False
    cardinality: int | None = 1

    @property
    def label(self) -> str:
        return str(self.ideal)


@dataclass(frozen=True)
class SpecPoset:
    nodes: tuple[PosetNode, ...]
    order: frozenset[tuple[int, int]]
    field: FieldSpec = SYMBOLIC
    hasse: frozenset[tuple[int, int]] = dc_field(default=frozenset())

    @cached_property
    def _dag(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(range(len(self.nodes)))
        d.add_edges_from(self.order)
        return d

    def index(self, p: PrimeIdeal) -> int:
        for i, n in enumerate(self.nodes):
            if n.ideal == p:
                return i
        raise KeyError(str(p))

    def below(self, i: int) -> frozenset[int]:
        return frozenset(self._dag.predecessors(i))

    def above(self, i: int) -> frozenset[int]:
        return frozenset(self._dag.successors(i))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        h = [0] * len(self.nodes)
        for i in nx.topological_sort(self._dag):
            for j in self._dag.successors(i):
                h[j] = max(h[j], h[i] + 1)
        return tuple(h)

    @cached_property
    def coheights(self) -> tuple[int, ...]:
        h = [0] * len(self.nodes)
        for i in reversed(list(nx.topological_sort(self._dag))):
            for j in self._dag.predecessors(i):
                h[j] = max(h[j], h[i] + 1)
        return tuple(h)

    def minimal(self) -> list[int]:
        return [i for i, h in enumerate(self.heights) if h == 0]

    def maximal(self) -> list[int]:
        return [i for i, h in enumerate(self.coheights) if h == 0]

    @property
    def krull_dimension(self) -> int:
        return max(self.heights, default=0)

    def ideals(self, idx) -> list[PrimeIdeal]:
        return [self.nodes[i].ideal for i in idx]


def build_spec_poset(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> SpecPoset:
    nodes: list[PosetNode] = [PosetNode(p) for p in enumerate_graded_primes(g)]
    for s in nongraded_strata(g, field, max_degree):
        if s.members is None:
            nodes.append(PosetNode(s.representative, stratum=True, cardinality=None))
        else:
            nodes.extend(PosetNode(m) for m in s.members)
    nodes.sort(key=lambda n: ideal_key(n.ideal))
    order = set()
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j and contains(g, a.ideal, b.ideal):
                order.add((i, j))
    dag = nx.DiGraph()
    dag.add_nodes_from(range(len(nodes)))
    dag.add_edges_from(order)
    hasse = frozenset(nx.transitive_reduction(dag).edges())
    return SpecPoset(tuple(nodes), frozenset(order), field, hasse)


def krull_dimension(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> int:
    return build_spec_poset(g, field, max_degree).krull_dimension
