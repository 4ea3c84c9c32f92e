"""Seeded random graphs for invariant suites."""

from __future__ import annotations

import random

from ..errors import OutOfRange
from ..graph import OMEGA, Graph, build_graph

MAX_RANDOM_VERTICES = 8


def random_graph(rng: random.Random, max_vertices: int = 6, omega_prob: float = 0.15,
                 edge_prob: float = 0.3, name: str = "") -> Graph:
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)]
    edges = []
    for s in names:
        for d in names:
            if rng.random() < edge_prob:
                mult = OMEGA if rng.random() < omega_prob else rng.choice((1, 2))
                edges.append((s, d, mult))
    return build_graph(names, edges, name=name)


def random_corpus(seed: int, count: int, max_vertices: int = 6, omega_prob: float = 0.15) -> list[Graph]:
    """``count`` graphs with multiplicities in {1, 2, OMEGA}; same seed, same corpus."""
    if not 1 <= max_vertices <= MAX_RANDOM_VERTICES:
        raise OutOfRange(f"max_vertices must lie in 1..{MAX_RANDOM_VERTICES}, got {max_vertices}")
    if not 0.0 <= omega_prob <= 1.0:
        raise OutOfRange(f"omega_prob must lie in [0, 1], got {omega_prob}")
    if count < 0:
        raise OutOfRange(f"count must be non-negative, got {count}")
    rng = random.Random(seed)
    return [random_graph(rng, max_vertices, omega_prob, name=f"random-{seed}-{i}") for i in range(count)]
