"""Literal forms of the published characterizations.

These read the clauses word for word and ignore two effects that the
corrected versions in :mod:`.theorems` account for: the zero ideal when it
is prime, and breaking vertices stranded between nested tails.  They agree
with the inclusion poset on most graphs; the test suite pins down small
graphs where they do not.
"""

from __future__ import annotations

from ..graph import Graph, cone, restricted_subgraph
from ..structure import _breaking, _hsat_sets, condition_K, enumerate_cycles, has_exit, maximal_tails
from .ideals import Graded, NonGraded, PrimeIdeal, is_prime_ring, is_zero
from .theorems import _cone_breakers, _has_L, _omitted, _rest, property_star


def _inside(g: Graph, X) -> list[frozenset[str]]:
    return [M for M in maximal_tails(g) if M < X]


def _containing(g: Graph, X) -> list[frozenset[str]]:
    return [M for M in maximal_tails(g) if X < M]


def _antichain(sets) -> bool:
    return not any(a < b for a in sets for b in sets)


def minimal_as_stated(g: Graph, p: PrimeIdeal) -> bool:
    if is_prime_ring(g):
        return is_zero(p)
    if not isinstance(p, Graded) or not property_star(g, p.H):
        return False
    if p.S != _breaking(g, p.H):
        return True
    return not _cone_breakers(g, p.H)


def height_one_as_stated(g: Graph, p: PrimeIdeal) -> bool:
    H = p.H
    if isinstance(p, NonGraded):
        return not H or (property_star(g, H) and not _cone_breakers(g, H))
    if is_zero(p):
        return False
    u = _omitted(g, p)
    if u is not None:
        return len(_containing(g, cone(g, u))) == 1
    if _cone_breakers(g, H):
        return property_star(g, H)
    return len(_containing(g, _rest(g, H))) == 1


def _clause_a(g: Graph, X) -> bool:
    inside = _inside(g, X)
    return bool(inside) and _antichain(inside) and all(_has_L(g, M) for M in inside)


def coheight_one_as_stated(g: Graph, p: PrimeIdeal) -> bool:
    X = _rest(g, p.H)
    if isinstance(p, NonGraded):
        return _clause_a(g, X)
    sub = restricted_subgraph(g, X)
    u = _omitted(g, p)
    if u is not None:
        exits = all(has_exit(sub, c) for c in enumerate_cycles(sub) if u in c.vertices)
        return exits and not _inside(g, X)
    if _clause_a(g, X):
        return True
    if _inside(g, X):
        return False
    return any(not has_exit(sub, c) and cone(g, c.base) == X for c in enumerate_cycles(sub))


def all_nonzero_primes_maximal_as_stated(g: Graph) -> bool:
    hsat = _hsat_sets(g)
    if is_prime_ring(g) and hsat == [frozenset(), g.vertex_set] and not condition_K(g):
        return True
    if not condition_K(g):
        return False
    for M in maximal_tails(g):
        if any(h and h != M for h in _hsat_sets(restricted_subgraph(g, M))):
            return False
    return not any(_cone_breakers(g, H) for H in hsat)


def krull_dim_zero_as_stated(g: Graph) -> bool:
    if not condition_K(g):
        return False
    tails = maximal_tails(g)
    E0 = g.vertex_set
    if E0 in tails:
        return all(M == E0 for M in tails)
    if not _antichain(tails):
        return False
    return not any(_cone_breakers(g, E0 - M) for M in tails)
