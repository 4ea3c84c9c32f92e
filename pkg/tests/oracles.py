"""Brute-force reference implementations used as independent oracles.

Everything here works straight from the edge list by exhaustive search, with
no shared code paths into the package beyond the Graph container.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from lpa_spectrum.graph import Graph


def subsets(xs):
    xs = sorted(xs)
    for r in range(len(xs) + 1):
        for combo in itertools.combinations(xs, r):
            yield frozenset(combo)


def edge_map(g: Graph) -> dict[tuple[str, str], float]:
    return {(e.src, e.dst): e.mult for e in g.edges}


def reach(g: Graph) -> dict[str, set[str]]:
    """Reflexive-transitive closure by Floyd-Warshall."""
    r = {u: {u} for u in g.vertices}
    for e in g.edges:
        r[e.src].add(e.dst)
    for k in g.vertices:
        for i in g.vertices:
            if k in r[i]:
                r[i] |= r[k]
    return r


def out_total(g: Graph, v: str) -> float:
    return sum((e.mult for e in g.edges if e.src == v), 0)


def is_regular(g: Graph, v: str) -> bool:
    return 0 < out_total(g, v) < math.inf


def targets(g: Graph, v: str) -> set[str]:
    return {e.dst for e in g.edges if e.src == v}


def hereditary(g: Graph, X) -> bool:
    return all(e.dst in X for e in g.edges if e.src in X)


def saturated(g: Graph, X) -> bool:
    return not any(v not in X and is_regular(g, v) and targets(g, v) <= X for v in g.vertices)


def hsat(g: Graph) -> list[frozenset[str]]:
    return [X for X in subsets(g.vertices) if hereditary(g, X) and saturated(g, X)]


def breaking(g: Graph, H) -> frozenset[str]:
    out = set()
    for v in g.vertices:
        if v in H or out_total(g, v) != math.inf:
            continue
        outside = sum((e.mult for e in g.edges if e.src == v and e.dst not in H), 0)
        if 1 <= outside < math.inf:
            out.add(v)
    return frozenset(out)


def sub(g: Graph, W) -> Graph:
    return Graph(
        tuple(v for v in g.vertices if v in W),
        tuple(e for e in g.edges if e.src in W and e.dst in W),
    )


def downward_directed(g: Graph, M) -> bool:
    r = reach(sub(g, M))
    return all(r[u] & r[v] for u in M for v in M)


def maximal_tails(g: Graph, within=None) -> list[frozenset[str]]:
    W = frozenset(g.vertices if within is None else within)
    s = sub(g, W)
    r = reach(s)
    tails = []
    for M in subsets(W):
        if not M:
            continue
        mt1 = all(u in M for v in M for u in W if v in r[u])
        mt2 = all(targets(s, v) & M for v in M if is_regular(s, v))
        if mt1 and mt2 and all(r[u] & r[v] & M for u in M for v in M):
            tails.append(M)
    return tails


def cycles(g: Graph) -> dict[tuple[str, ...], float]:
    """Simple cycles keyed by their rotation starting at the least vertex,
    valued by the product of edge multiplicities."""
    em = edge_map(g)
    found = {}
    for r in range(1, len(g.vertices) + 1):
        for seq in itertools.permutations(g.vertices, r):
            if seq[0] != min(seq):
                continue
            arcs = [(seq[i], seq[(i + 1) % r]) for i in range(r)]
            if all(a in em for a in arcs):
                found[seq] = math.prod(em[a] for a in arcs)
    return found


def return_paths(g: Graph, v: str, cap: int = 2) -> int:
    """Count closed paths from ``v`` that revisit ``v`` only at the end, up to
    length ``2 |E0|``, each edge weighted by its multiplicity."""
    em = edge_map(g)
    n = len(g.vertices)
    total = 0

    def walk(u, length, weight):
        nonlocal total
        if total >= cap or length >= 2 * n:
            return
        for (a, b), m in em.items():
            if a != u:
                continue
            w = weight * min(m, cap)
            if b == v:
                total += w
            else:
                walk(b, length + 1, w)

    walk(v, 0, 1)
    return min(total, cap)


# ------------------------------------------------------------- polynomials


def poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``b`` over F_p; lists are low-to-high."""
    a = [c % p for c in a]
    while len(a) >= len(b):
        lead = a[-1]
        if lead:
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return a


def monic_polys(p: int, d: int):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def irreducible_by_trial(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    d = len(coeffs) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for f in monic_polys(p, k):
            if not any(poly_mod(coeffs, f, p)):
                return False
    return True


def laurent_irreducible_classes(p: int, d: int) -> list[list[int]]:
    """Monic degree-``d`` irreducibles over F_p with non-zero constant term."""
    return [f for f in monic_polys(p, d) if f[0] % p and irreducible_by_trial(f, p)]


def rational_roots(a):
    """Rational roots of the integer-scaled polynomial ``a`` (low to high)."""
    den = math.lcm(*(Fraction(c).denominator for c in a))
    ints = [int(Fraction(c) * den) for c in a]
    lead, const = abs(ints[-1]), abs(ints[0])
    if const == 0:
        return [Fraction(0)]
    candidates = {
        Fraction(sign * n, d)
        for n in range(1, const + 1) if const % n == 0
        for d in range(1, lead + 1) if lead % d == 0
        for sign in (1, -1)
    }
    return sorted(r for r in candidates if sum(c * r**i for i, c in enumerate(ints)) == 0)


def irreducible_over_q(a):
    """Degree 2 and 3 factor over Q only through a linear factor."""
    return len(a) == 2 or (len(a) in (3, 4) and not rational_roots(a))
