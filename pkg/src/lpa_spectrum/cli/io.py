"""JSON graph documents.

A document looks like::

    {"name": "LOOP", "vertices": ["v"],
     "edges": [{"src": "v", "dst": "v", "mult": 1}]}

``mult`` is a positive integer or the string ``"inf"`` for infinitely many
parallel edges.  ``name`` is optional.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..errors import ParseError
from ..graph import OMEGA, Graph, build_graph, is_omega

INF = "inf"


def _mult(raw: Any, where: str):
    if raw == INF:
        return OMEGA
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ParseError(f"multiplicity must be a positive integer or {INF!r}, got {raw!r}", field=where)
    if raw < 1:
        raise ParseError(f"multiplicity must be at least 1, got {raw}", field=where)
    return raw


def graph_from_document(doc: Any) -> Graph:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    unknown = set(doc) - {"name", "vertices", "edges"}
    if unknown:
        raise ParseError(f"unexpected keys {sorted(unknown)}", field=sorted(unknown)[0])
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string", field="name")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list):
        raise ParseError("vertices must be a list", field="vertices")
    for i, v in enumerate(vertices):
        if not isinstance(v, str) or not v:
            raise ParseError(f"vertex identifiers must be non-empty strings, got {v!r}", field=f"vertices[{i}]")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError("edges must be a list", field="edges")
    recs = []
    for i, e in enumerate(edges):
        where = f"edges[{i}]"
        if not isinstance(e, dict):
            raise ParseError("edge must be an object", field=where)
        for key in ("src", "dst"):
            if not isinstance(e.get(key), str):
                raise ParseError(f"{key} must be a vertex identifier", field=f"{where}.{key}")
        extra = set(e) - {"src", "dst", "mult"}
        if extra:
            raise ParseError(f"unexpected keys {sorted(extra)}", field=where)
        recs.append((e["src"], e["dst"], _mult(e.get("mult", 1), f"{where}.mult")))
    return build_graph(vertices, recs, name=name)


def parse_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    return graph_from_document(doc)


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def graph_to_document(g: Graph) -> dict:
    return {
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [
            {"src": e.src, "dst": e.dst, "mult": INF if is_omega(e.mult) else e.mult} for e in g.edges
        ],
    }


def serialize_graph(g: Graph) -> str:
    return json.dumps(graph_to_document(g), indent=2, sort_keys=True) + "\n"
