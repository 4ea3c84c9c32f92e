"""Graph-side characterizations of spectral properties.

Every function here decides its property from tails and cycles of the graph
alone; none of them looks at the inclusion poset.  :mod:`.poset` computes the
same answers order-theoretically, and :func:`crosscheck` compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from ..errors import MalformedCandidate, NotHereditarySaturated, OutOfRange
from ..graph import Graph, build_graph, cone, is_omega, restricted_subgraph, tree, vertex_key
from ..laurent import SYMBOLIC, FieldSpec
from ..structure import (
    DEFAULT_HSAT_CAP,
    _breaking,
    _hsat_sets,
    condition_K,
    condition_L,
    is_downward_directed,
    is_hereditary_saturated,
    maximal_tails,
    quotient_graph,
)
from .ideals import (
    Graded,
    NonGraded,
    PrimeIdeal,
    classify_ideal,
    enumerate_primes,
    ideal_key,
    is_prime_ring,
    is_zero,
)
from .poset import PosetNode, SpecPoset, build_spec_poset

# ------------------------------------------------------------------ helpers


def _rest(g: Graph, H) -> frozenset[str]:
    return g.vertex_set - H


def _omitted(g: Graph, p: Graded) -> str | None:
    """The breaking vertex left out of ``S`` for a case (ii) prime."""
    missing = _breaking(g, p.H) - p.S
    return next(iter(missing)) if len(missing) == 1 else None


def _cone_breakers(g: Graph, H) -> list[str]:
    """Breaking vertices ``u`` of ``H`` with ``M(u) = E0 \\ H``."""
    rest = _rest(g, H)
    return [u for u in g.sorted(_breaking(g, H)) if cone(g, u) == rest]


def _has_L(g: Graph, X: frozenset[str]) -> bool:
    return condition_L(restricted_subgraph(g, X))


def csp(g: Graph, X: Iterable[str]) -> bool:
    """Countable separation: on a finite graph ``X`` itself is the witness."""
    g.require_all(X)
    return True


def is_simple(g: Graph, cap: int = DEFAULT_HSAT_CAP) -> bool:
    """Every cycle has an exit and the only hereditary saturated sets are
    the empty set and everything."""
    if not g.vertices:
        return False
    return condition_L(g) and _hsat_sets(g, cap) == [frozenset(), g.vertex_set]


# ----------------------------------------------------------- property (*)


def property_star(g: Graph, H: Iterable[str]) -> bool:
    """Every non-empty proper maximal tail ``S`` of the subgraph on ``H`` has
    a vertex ``u`` whose tree misses the tree of some vertex outside ``H``."""
    H = g.require_all(H)
    if not is_hereditary_saturated(g, H):
        raise NotHereditarySaturated(f"{sorted(H)} is not hereditary saturated")
    outside = [tree(g, v) for v in g.sorted(_rest(g, H))]
    for S in maximal_tails(g, within=H):
        if S == H:
            continue
        if not any(not (tree(g, u) & t) for u in S for t in outside):
            return False
    return True


# ------------------------------------------------------------ tail summary


class TailData:
    """Maximal tails of ``g`` with the data every spectral criterion uses.

    For a tail ``M`` with complement ``H``: ``breakers[M]`` is ``B_H``,
    ``cone_breakers[M]`` the ``u`` in ``B_H`` with ``M(u) = M``, and
    ``has_L[M]`` tells whether the subgraph on ``M`` satisfies Condition (L)
    (equivalently, no non-graded prime meets ``E0`` in ``H``).

    A larger tail ``M'`` is *linked* to a smaller tail ``M`` when no breaking
    vertex of ``E0 \\ M'`` sits in ``M`` without emitting an edge into ``M``.
    Such a stranded vertex keeps ``I(E0\\M', B)`` out of ``I(E0\\M, B)`` although
    the tails are nested; without one, every prime attached to ``M'`` lies in
    every prime attached to ``M`` (and in ``I(E0\\M, B\\{w})`` unless ``w`` also
    breaks ``E0 \\ M'``).
    """

    def __init__(self, g: Graph):
        self.g = g
        self.tails = maximal_tails(g)
        self.breakers = {M: _breaking(g, g.vertex_set - M) for M in self.tails}
        self.cone_breakers = {
            M: frozenset(u for u in self.breakers[M] if cone(g, u) == M) for M in self.tails
        }
        self.has_L = {M: _has_L(g, M) for M in self.tails}

    def linked(self, big: frozenset[str], small: frozenset[str]) -> bool:
        succ = self.g.successors
        return all(succ[u] & small for u in self.breakers[big] & small)

    def up(self, M: frozenset[str], omitted: str | None = None) -> list[frozenset[str]]:
        """Tails whose primes all lie below the graded prime of ``M`` that
        omits ``omitted`` (``None`` for the full hull ``I(H, B_H)``)."""
        return [
            T for T in self.tails
            if M < T and self.linked(T, M) and (omitted is None or omitted not in self.breakers[T])
        ]

    def down(self, M: frozenset[str]) -> list[frozenset[str]]:
        return [N for N in self.tails if N < M and self.linked(M, N)]

    def hull_minimal(self, M: frozenset[str]) -> bool:
        return not self.cone_breakers[M] and not self.up(M)

    def hull_maximal(self, M: frozenset[str]) -> bool:
        return self.has_L[M] and not self.down(M)

    def above_all_maximal(self, M: frozenset[str]) -> bool:
        """Some prime lies above the primes of ``M`` and each one is maximal."""
        D = self.down(M)
        return bool(D) and all(
            self.hull_maximal(N) and self.cone_breakers[N] <= self.breakers[M] for N in D
        )


def tail_data(g: Graph) -> TailData:
    cached = g.__dict__.get("_lpa_tails")
    if cached is None:
        cached = g.__dict__["_lpa_tails"] = TailData(g)
    return cached


def _tail_of(g: Graph, p: PrimeIdeal) -> frozenset[str]:
    return g.vertex_set - p.H


# ------------------------------------------------------------ per-prime tests


def is_minimal_prime(g: Graph, p: PrimeIdeal) -> bool:
    """Graded, and no tail above it is linked to its own.

    When ``{0}`` is prime every other tail sits inside ``E0``, which is
    linked to everything, so ``{0}`` is the only minimal prime.
    """
    if isinstance(p, NonGraded):
        return False
    td, M = tail_data(g), _tail_of(g, p)
    u = _omitted(g, p)
    return not td.up(M, u) if u is not None else td.hull_minimal(M)


def is_height_one(g: Graph, p: PrimeIdeal) -> bool:
    """Height one means the primes below form a non-empty antichain.

    A non-graded prime has height one iff its graded hull is minimal.  For a
    graded prime each linked tail above must carry a single minimal prime
    (minimal hull, Condition (L)), and the primes omitting a cone breaker must
    themselves be minimal.
    """
    td, M = tail_data(g), _tail_of(g, p)
    if isinstance(p, NonGraded):
        return td.hull_minimal(M)
    u = _omitted(g, p)
    ups = td.up(M, u)
    if u is None:
        if not ups and not td.cone_breakers[M]:
            return False
        if any(td.up(M, w) for w in td.cone_breakers[M]):
            return False
    elif not ups:
        return False
    return all(td.hull_minimal(T) and td.has_L[T] for T in ups)


def is_coheight_one(g: Graph, p: PrimeIdeal) -> bool:
    """Co-height one means the primes above form a non-empty set of maximal
    ideals.

    Above a graded hull with a cycle without exits sits its own non-graded
    family, which must then be maximal.  Above a prime omitting a cone
    breaker sits its hull, which must then be maximal.
    """
    td, M = tail_data(g), _tail_of(g, p)
    if isinstance(p, NonGraded):
        return td.above_all_maximal(M)
    if _omitted(g, p) is not None:
        return td.hull_maximal(M)
    if not td.has_L[M]:
        return not td.down(M)
    return td.above_all_maximal(M)

# ------------------------------------------------------------- spectrum lists


def _select(g, field, max_degree, pred: Callable[[Graph, PrimeIdeal], bool]) -> list[PrimeIdeal]:
    return [p for p in enumerate_primes(g, field, max_degree) if pred(g, p)]


def minimal_primes(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> list[PrimeIdeal]:
    return _select(g, field, max_degree, is_minimal_prime)


def height_one_primes(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> list[PrimeIdeal]:
    return _select(g, field, max_degree, is_height_one)


def coheight_one_primes(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> list[PrimeIdeal]:
    return _select(g, field, max_degree, is_coheight_one)


# ------------------------------------------------------------------ maximality


def generalized_closure(g: Graph, H: Iterable[str], extra: Iterable[str]) -> frozenset[str]:
    """Smallest set containing ``H`` and ``extra`` that is hereditary,
    saturated, and absorbs each breaking vertex of ``H`` whose edges leaving
    ``H`` all land in it."""
    H = frozenset(H)
    B = _breaking(g, H)
    X = set(H) | set(extra)
    changed = True
    while changed:
        changed = False
        for v in list(X):
            new = tree(g, v) - X
            if new:
                X |= new
                changed = True
        for v in g.vertices:
            if v in X:
                continue
            succ = g.successors[v]
            if not succ:
                continue
            if v in B:
                absorbed = all(e.dst in X for e in g.out_edges[v] if e.dst not in H)
            else:
                absorbed = not is_omega(g.out_degree(v)) and succ <= X
            if absorbed:
                X.add(v)
                changed = True
    return frozenset(X)


def is_maximal_ideal(g: Graph, p: PrimeIdeal) -> bool:
    if not classify_ideal(g, p):
        raise MalformedCandidate(f"{p} is not prime")
    if isinstance(p, Graded):
        return is_simple(quotient_graph(g, p.H, p.S))
    return generalized_closure(g, p.H, p.cycle.vertices) == g.vertex_set


def all_nonzero_primes_maximal(g: Graph) -> bool:
    """Condition I: ``E0`` is a maximal tail, the only hereditary saturated
    sets are trivial, and Condition (K) fails.  Condition II: Condition (K),
    no proper non-empty hereditary saturated set inside ``E_M`` for every
    maximal tail ``M`` other than ``E0`` (that tail belongs to the zero
    ideal), and ``M(u)`` never equals ``E0 \\ H`` for ``u`` in ``B_H``."""
    hsat = _hsat_sets(g)
    E0 = g.vertex_set
    if is_prime_ring(g) and hsat == [frozenset(), E0] and not condition_K(g):
        return True
    if not condition_K(g):
        return False
    for M in maximal_tails(g):
        if M == E0:
            continue
        if any(h and h != M for h in _hsat_sets(restricted_subgraph(g, M))):
            return False
    return not any(_cone_breakers(g, H) for H in hsat)


def krull_dim_zero(g: Graph) -> bool:
    """Every maximal tail satisfies Condition (L) (that is, Condition (K)
    holds), has no cone breakers, and no smaller tail is linked to it."""
    td = tail_data(g)
    return all(
        td.has_L[M] and not td.cone_breakers[M] and not td.down(M) for M in td.tails
    )


# ----------------------------------------------------------------- primitivity


@dataclass(frozen=True)
class PrimitivityVerdict:
    """``kind`` is ``primitive``, ``prime-not-primitive`` or ``not-prime``."""

    kind: str
    case: str | None = None

    @property
    def primitive(self) -> bool:
        return self.kind == "primitive"

    def __str__(self) -> str:
        return f"{self.kind}({self.case})" if self.case else self.kind


def classify_primitive(g: Graph, p: PrimeIdeal) -> PrimitivityVerdict:
    verdict = classify_ideal(g, p)
    if not verdict:
        return PrimitivityVerdict("not-prime")
    if verdict.case == "iii":
        return PrimitivityVerdict("primitive", "i")
    if verdict.case == "ii":
        return PrimitivityVerdict("primitive", "ii")
    X = _rest(g, p.H)
    if is_downward_directed(g, X) and _has_L(g, X) and csp(g, X):
        return PrimitivityVerdict("primitive", "iii")
    return PrimitivityVerdict("prime-not-primitive")


def all_primes_primitive(g: Graph) -> bool:
    """Condition K plus countable separation of every maximal tail, which is
    automatic for finitely many vertices."""
    return condition_K(g) and all(csp(g, M) for M in maximal_tails(g))


# ------------------------------------------------------------------ strata


@dataclass(frozen=True)
class StratumView:
    """Primes meeting the vertex set in ``E0 \\ tail``."""

    tail: frozenset[str]
    nodes: tuple[PosetNode, ...]
    shape: str


def stratify(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> list[StratumView]:
    """Group the spectrum by ``P ∩ E0``.

    The shape tag records whether a cycle without exits sits in the tail
    (so a non-graded family is present) and how many graded primes share it.
    """
    poset = build_spec_poset(g, field, max_degree)
    groups: dict[frozenset[str], list[PosetNode]] = {}
    for n in poset.nodes:
        groups.setdefault(frozenset(n.ideal.H), []).append(n)
    out = []
    for H, nodes in groups.items():
        graded = sum(isinstance(n.ideal, Graded) for n in nodes)
        kind = "exit" if all(isinstance(n.ideal, Graded) for n in nodes) else "cycle-no-exit"
        out.append(StratumView(_rest(g, H), tuple(nodes), f"{kind}-{graded}-graded"))
    return sorted(out, key=lambda s: vertex_key(g.vertex_set - s.tail))


# ----------------------------------------------------------------- quotients


@dataclass(frozen=True)
class NonGradedQuotient:
    """``L(E)/P`` for a non-graded ``P``: a simple socle generated by the
    cycle's base vertex, and the Leavitt path algebra of ``beyond_socle``
    once the socle is factored out."""

    socle: str
    beyond_socle: Graph


def quotient_description(g: Graph, p: PrimeIdeal) -> Graph | NonGradedQuotient:
    if not classify_ideal(g, p):
        raise MalformedCandidate(f"{p} is not prime")
    if isinstance(p, Graded):
        return quotient_graph(g, p.H, p.S)
    closed = generalized_closure(g, p.H, p.cycle.vertices)
    S = _breaking(g, closed) & _breaking(g, p.H)
    return NonGradedQuotient(p.cycle.base, quotient_graph(g, closed, S))


# ------------------------------------------------------------ constructions

MAX_CHAIN = 12


def build_chain_graph(n: int) -> Graph:
    """Blocks ``r0 <- r1 <- ... <- rn``, each a vertex with two loops.

    The primes are ``{0}`` and the ideals generated by ``{r0..ri}``, a chain
    of length ``n``.
    """
    if not 0 <= n <= MAX_CHAIN:
        raise OutOfRange(f"chain length must lie in 0..{MAX_CHAIN}, got {n}")
    names = [f"r{i}" for i in range(n + 1)]
    edges = [(r, r, 2) for r in names] + [(names[i + 1], names[i], 1) for i in range(n)]
    return build_graph(names, edges, name=f"chain-{n}")


# ------------------------------------------------------------- cross-check


def poset_views(poset: SpecPoset, g: Graph) -> dict[str, object]:
    """Order-theoretic answers to the questions the theorems settle."""
    ideals = [n.ideal for n in poset.nodes]
    return {
        "minimal": sorted(poset.ideals(poset.minimal()), key=ideal_key),
        "height_one": sorted((p for p, h in zip(ideals, poset.heights) if h == 1), key=ideal_key),
        "coheight_one": sorted((p for p, h in zip(ideals, poset.coheights) if h == 1), key=ideal_key),
        "krull_dim_zero": poset.krull_dimension == 0,
        "all_nonzero_primes_maximal": all(is_maximal_ideal(g, p) for p in ideals if not is_zero(p)),
        "all_primes_primitive": all(classify_primitive(g, p).primitive for p in ideals),
    }


def theorem_views(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> dict[str, object]:
    return {
        "minimal": minimal_primes(g, field, max_degree),
        "height_one": height_one_primes(g, field, max_degree),
        "coheight_one": coheight_one_primes(g, field, max_degree),
        "krull_dim_zero": krull_dim_zero(g),
        "all_nonzero_primes_maximal": all_nonzero_primes_maximal(g),
        "all_primes_primitive": all_primes_primitive(g),
    }


def crosscheck(
    g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3, poset: SpecPoset | None = None
) -> list[str]:
    """Names of the properties on which graph side and poset side disagree."""
    if poset is None:
        poset = build_spec_poset(g, field, max_degree)
    a = theorem_views(g, field, max_degree)
    b = poset_views(poset, g)
    return [k for k in a if a[k] != b[k]]
