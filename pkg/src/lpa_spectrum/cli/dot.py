"""Hasse diagrams in Graphviz DOT."""

from __future__ import annotations

from ..spectrum import SpecPoset


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_to_dot(poset: SpecPoset, name: str = "spectrum") -> str:
    """Covering relations point upward (smaller ideal to larger).  A node
    standing for an infinite family carries an ``∞`` badge."""
    lines = [f"digraph {_quote(name or 'spectrum')} {{", "  rankdir=BT;", "  node [shape=box, fontname=\"Helvetica\"];"]
    for i, n in enumerate(poset.nodes):
        if n.stratum:
            label = f"{n.label}  ∞"
            lines.append(f"  p{i} [label={_quote(label)}, peripheries=2, style=rounded];")
        else:
            lines.append(f"  p{i} [label={_quote(n.label)}];")
    for i, j in sorted(poset.hasse):
        lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
