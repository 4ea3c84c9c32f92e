"""Prime ideals of a Leavitt path algebra, described by graph data.

Graded ideals are ``I(H, S)`` for an admissible pair; a graded ideal is prime
exactly when its quotient graph is downward directed, which leaves two
shapes: ``S = B_H`` with ``E0 \\ H`` downward directed, or ``S = B_H \\ {u}``
with ``E0 \\ H = M(u)``.  Non-graded primes are ``<I(H, B_H), f(c)>`` for a
cycle ``c`` without K, ``H`` the vertices not reaching ``c`` and ``f`` an
irreducible Laurent polynomial.  ``poly=None`` on a :class:`NonGraded` stands
for the whole family over a field whose classes are not enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import MalformedCandidate
from ..graph import Graph, cone, vertex_key
from ..laurent import (
    SYMBOLIC,
    FieldSpec,
    LaurentPoly,
    associates,
    enumerate_irreducible_classes,
    is_irreducible,
    normalize,
)
from ..structure import (
    DEFAULT_HSAT_CAP,
    Cycle,
    _breaking,
    _hsat_sets,
    cycles_without_K,
    enumerate_cycles,
    is_downward_directed,
    is_hereditary_saturated,
)


@dataclass(frozen=True)
class Graded:
    """The graded ideal ``I(H, S)``."""

    H: frozenset[str]
    S: frozenset[str] = frozenset()

    def __str__(self) -> str:
        return f"I({_fmt(self.H)}, {_fmt(self.S)})"


@dataclass(frozen=True)
class NonGraded:
    """The ideal ``<I(H, B_H), f(c)>``; ``poly is None`` denotes the family."""

    H: frozenset[str]
    cycle: Cycle
    poly: LaurentPoly | None = None

    def __str__(self) -> str:
        f = "f" if self.poly is None else f"[{self.poly}]"
        return f"<I({_fmt(self.H)}, B), {f}{self.cycle}>"


PrimeIdeal = Union[Graded, NonGraded]


def _fmt(xs) -> str:
    return "{" + ",".join(sorted(xs)) + "}"


def ideal_key(p: PrimeIdeal) -> tuple:
    if isinstance(p, Graded):
        return (vertex_key(p.H), 0, sorted(p.S), (), ())
    poly = () if p.poly is None else (p.poly.high - p.poly.low, tuple(reversed(p.poly.to_poly())))
    return (vertex_key(p.H), 1, [], p.cycle.vertices, poly)


def zero_ideal() -> Graded:
    return Graded(frozenset(), frozenset())


def is_zero(p: PrimeIdeal) -> bool:
    return isinstance(p, Graded) and not p.H and not p.S


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify_ideal`: a case label or the failed clause."""

    prime: bool
    case: str | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.prime


def _complement(g: Graph, H) -> frozenset[str]:
    return g.vertex_set - H


def is_prime_ring(g: Graph) -> bool:
    """The zero ideal is prime iff the vertex set is downward directed."""
    return bool(g.vertices) and is_downward_directed(g, g.vertex_set)


def enumerate_graded_primes(g: Graph, cap: int = DEFAULT_HSAT_CAP) -> list[Graded]:
    out = []
    for H in _hsat_sets(g, cap):
        if H == g.vertex_set:
            continue
        rest = _complement(g, H)
        B = _breaking(g, H)
        if is_downward_directed(g, rest):
            out.append(Graded(H, B))
        for u in g.sorted(B):
            if cone(g, u) == rest:
                out.append(Graded(H, B - {u}))
    return sorted(out, key=ideal_key)


@dataclass(frozen=True)
class Stratum:
    """Non-graded primes sharing ``H`` and the cycle ``c``.

    ``members`` is ``None`` when the family is infinite and not instantiated.
    """

    H: frozenset[str]
    cycle: Cycle
    members: tuple[NonGraded, ...] | None

    @property
    def infinite(self) -> bool:
        return self.members is None

    @property
    def representative(self) -> NonGraded:
        return NonGraded(self.H, self.cycle, None)


def nongraded_strata(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> list[Stratum]:
    """One stratum per cycle without K, with ``H = E0 \\ M(base)``."""
    classes = enumerate_irreducible_classes(field, max_degree) if field.is_prime_field else None
    out = []
    for c in cycles_without_K(g):
        H = _complement(g, cone(g, c.base))
        members = None if classes is None else tuple(NonGraded(H, c, f) for f in classes)
        out.append(Stratum(H, c, members))
    return sorted(out, key=lambda s: (vertex_key(s.H), s.cycle.vertices))


def enumerate_primes(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> list[PrimeIdeal]:
    """Graded primes plus the non-graded ones (one representative per
    stratum unless ``field`` is a prime field)."""
    out: list[PrimeIdeal] = list(enumerate_graded_primes(g))
    for s in nongraded_strata(g, field, max_degree):
        out.extend(s.members if s.members is not None else [s.representative])
    return sorted(out, key=ideal_key)


def _validate(g: Graph, p: PrimeIdeal) -> None:
    try:
        H = g.require_all(p.H)
        if not is_hereditary_saturated(g, H):
            raise MalformedCandidate(f"{_fmt(H)} is not hereditary saturated")
        if isinstance(p, Graded):
            g.require_all(p.S)
            B = _breaking(g, H)
            if not p.S <= B:
                raise MalformedCandidate(f"{_fmt(p.S - B)} are not breaking vertices of {_fmt(H)}")
        elif isinstance(p, NonGraded):
            if p.cycle not in enumerate_cycles(g) and not _is_cycle_of(g, p.cycle):
                raise MalformedCandidate(f"{p.cycle} is not a cycle of the graph")
        else:
            raise MalformedCandidate(f"not an ideal description: {p!r}")
    except KeyError as exc:
        raise MalformedCandidate(str(exc)) from exc


def _is_cycle_of(g: Graph, c: Cycle) -> bool:
    return any(c.vertices == d.vertices for d in enumerate_cycles(g))


def classify_ideal(g: Graph, cand: PrimeIdeal) -> Classification:
    """Decide primeness of a well-formed candidate, naming the case that
    holds or the first clause that fails."""
    _validate(g, cand)
    H = frozenset(cand.H)
    if H == g.vertex_set:
        return Classification(False, reason="improper: H is the whole vertex set")
    rest = _complement(g, H)
    B = _breaking(g, H)
    if isinstance(cand, Graded):
        missing = B - cand.S
        if not missing:
            if is_downward_directed(g, rest):
                return Classification(True, case="i")
            return Classification(False, reason="MT-3 fails: E0\\H is not downward directed")
        if len(missing) == 1:
            (u,) = missing
            if cone(g, u) == rest:
                return Classification(True, case="ii")
            return Classification(False, reason=f"E0\\H differs from M({u}) for the omitted breaking vertex")
        return Classification(False, reason=f"more than one breaking vertex omitted: {_fmt(missing)}")
    c = cand.cycle
    if not any(c.vertices == d.vertices for d in cycles_without_K(g)):
        return Classification(False, reason=f"{c} is not a cycle without K")
    if cone(g, c.base) != rest:
        return Classification(False, reason=f"E0\\H differs from M({c.base})")
    if cand.poly is not None and not is_irreducible(cand.poly):
        return Classification(False, reason=f"{cand.poly} is not irreducible in K[x,x^-1]")
    return Classification(True, case="iii")


def _graded_le(p: Graded, q: Graded) -> bool:
    return p.H <= q.H and p.S <= q.H | q.S


def contains(g: Graph, p: PrimeIdeal, q: PrimeIdeal) -> bool:
    """Whether ``p`` is a subset of ``q``.

    Graded ideals compare through their admissible pairs.  A non-graded prime
    lies in ``q`` only through its graded hull ``I(H, B_H)``: when ``q`` is
    graded it also needs the cycle inside ``q``'s vertex set, and when ``q``
    shares its ``H`` and cycle the two polynomials must be associates.
    """
    for x in (p, q):
        _validate(g, x)
    if isinstance(p, Graded) and isinstance(q, Graded):
        return _graded_le(p, q)
    if isinstance(q, NonGraded):
        hull_q = Graded(q.H, _breaking(g, q.H))
        if isinstance(p, Graded):
            return _graded_le(p, hull_q)
        if p.H == q.H:
            if p.cycle.vertices != q.cycle.vertices:
                return False
            if p.poly is None or q.poly is None:
                return p.poly is None and q.poly is None
            return associates(p.poly, q.poly)
        return contains(g, p, hull_q)
    # p non-graded, q graded
    hull_p = Graded(p.H, _breaking(g, p.H))
    return _graded_le(hull_p, q) and p.cycle.support <= q.H


def same_ideal(p: PrimeIdeal, q: PrimeIdeal) -> bool:
    if isinstance(p, NonGraded) and isinstance(q, NonGraded) and p.poly is not None and q.poly is not None:
        return p.H == q.H and p.cycle.vertices == q.cycle.vertices and normalize(p.poly) == normalize(q.poly)
    return p == q
