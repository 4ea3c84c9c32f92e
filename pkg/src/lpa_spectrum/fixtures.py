"""Named example graphs."""

from __future__ import annotations

from .graph import OMEGA, Graph, build_graph

_E1_EDGES = [
    ("w1", "w"), ("w2", "w"), ("w1", "u3"), ("w2", "u3"), ("u1", "u3"),
    ("u2", "u3"), ("v1", "u1"), ("v2", "u2"), ("v1", "v"), ("v2", "v"),
]
_E1_VERTICES = ["w", "w1", "w2", "u1", "u2", "u3", "v1", "v2", "v"]

H = frozenset({"u1", "u2", "u3"})
H1 = H | {"w", "w1", "w2"}
H2 = H | {"v1", "v2", "v"}


def _e2_edges():
    return [(s, d, OMEGA if (s, d) == ("v1", "u1") else 1) for s, d in _E1_EDGES]


E1 = build_graph(_E1_VERTICES, _E1_EDGES, name="E1")
E2 = build_graph(_E1_VERTICES, _e2_edges(), name="E2")
E3 = build_graph(_E1_VERTICES, _e2_edges() + [("v", "v1")], name="E3")
E4 = build_graph(
    ["u", "v1", "v2", "v3", "v4"],
    [("u", "v1"), ("v1", "u"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
    name="E4",
)
LOOP = build_graph(["v"], [("v", "v")], name="LOOP")
ROSE2 = build_graph(["v"], [("v", "v", 2)], name="ROSE2")
COHT = build_graph(
    ["z", "u", "v"], [("z", "z", 2), ("z", "u"), ("u", "v"), ("v", "v")], name="COHT"
)
ISO2 = build_graph(["a", "b"], [], name="ISO2")

FIXTURES: dict[str, Graph] = {
    g.name: g for g in (E1, E2, E3, E4, LOOP, ROSE2, COHT, ISO2)
}
