"""Analysis reports: one deterministic dictionary per graph."""

from __future__ import annotations

import json

from ..graph import Graph, classify_vertex, is_omega, vertex_key
from ..laurent import SYMBOLIC, FieldSpec
from ..spectrum import (
    Graded,
    NonGradedQuotient,
    all_nonzero_primes_maximal,
    all_primes_primitive,
    build_spec_poset,
    classify_ideal,
    classify_primitive,
    crosscheck,
    is_maximal_ideal,
    is_prime_ring,
    is_simple,
    krull_dim_zero,
    quotient_description,
    stratify,
)
from ..structure import (
    condition_K,
    condition_K_witnesses,
    condition_L,
    cycles_without_K,
    enumerate_cycles,
    enumerate_hsat,
    has_exit,
    maximal_tails,
)
from .io import INF, graph_to_document


def _m(x):
    return INF if is_omega(x) else x


def _set(xs) -> list[str]:
    return sorted(xs)


def _ideal_doc(p) -> dict:
    if isinstance(p, Graded):
        return {"type": "graded", "H": _set(p.H), "S": _set(p.S)}
    return {
        "type": "non-graded",
        "H": _set(p.H),
        "cycle": list(p.cycle.vertices),
        "poly": None if p.poly is None else str(p.poly),
    }


def _quotient_doc(q) -> dict:
    if isinstance(q, NonGradedQuotient):
        return {"socle": q.socle, "beyond_socle": graph_to_document(q.beyond_socle)}
    return graph_to_document(q)


def build_report(g: Graph, field: FieldSpec = SYMBOLIC, max_degree: int = 3) -> dict:
    poset = build_spec_poset(g, field, max_degree)
    minimal = set(poset.minimal())
    spectrum = []
    for i, node in enumerate(poset.nodes):
        p = node.ideal
        entry = _ideal_doc(p)
        entry.update(
            label=str(p),
            case=classify_ideal(g, p).case,
            stratum=node.stratum,
            cardinality="inf" if node.cardinality is None else node.cardinality,
            primitivity=str(classify_primitive(g, p)),
            minimal=i in minimal,
            maximal=is_maximal_ideal(g, p),
            height=poset.heights[i],
            coheight=poset.coheights[i],
            quotient=_quotient_doc(quotient_description(g, p)),
        )
        spectrum.append(entry)
    labels = [str(n.ideal) for n in poset.nodes]
    return {
        "graph": {
            "name": g.name,
            "vertices": list(g.vertices),
            "edges": len(g.edges),
            "classes": {v: classify_vertex(g, v).value for v in g.vertices},
        },
        "field": str(field),
        "max_degree": max_degree if field.is_prime_field else None,
        "hsat": [{"H": _set(h.vertices), "breaking": _set(h.breaking)} for h in enumerate_hsat(g)],
        "maximal_tails": [_set(M) for M in maximal_tails(g)],
        "conditions": {
            "K": condition_K(g),
            "L": condition_L(g),
            "K_witnesses": condition_K_witnesses(g),
        },
        "cycles": [
            {"vertices": list(c.vertices), "multiplicity": _m(c.multiplicity), "has_exit": has_exit(g, c)}
            for c in enumerate_cycles(g)
        ],
        "cycles_without_K": [list(c.vertices) for c in cycles_without_K(g)],
        "prime_ring": is_prime_ring(g),
        "simple": is_simple(g),
        "spectrum": spectrum,
        "order": sorted([labels[i], labels[j]] for i, j in poset.hasse),
        "krull_dimension": poset.krull_dimension,
        "krull_dim_zero": krull_dim_zero(g),
        "all_primes_primitive": all_primes_primitive(g),
        "all_nonzero_primes_maximal": all_nonzero_primes_maximal(g),
        "strata": [
            {"tail": _set(s.tail), "shape": s.shape, "primes": [str(n.ideal) for n in s.nodes]}
            for s in stratify(g, field, max_degree)
        ],
        "mismatches": crosscheck(g, field, max_degree, poset),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def report_text(report: dict) -> str:
    """Human-readable layout; stable line order, one fact per line."""
    g = report["graph"]
    out = [
        f"graph {g['name'] or '(unnamed)'}: {len(g['vertices'])} vertices, {g['edges']} edge records",
        f"field {report['field']}" + (f", degree <= {report['max_degree']}" if report["max_degree"] else ""),
        "",
        "hereditary saturated sets:",
    ]
    for h in sorted(report["hsat"], key=lambda h: vertex_key(h["H"])):
        b = f"  breaking {{{','.join(h['breaking'])}}}" if h["breaking"] else ""
        out.append(f"  {{{','.join(h['H'])}}}{b}")
    out.append("maximal tails:")
    out += [f"  {{{','.join(M)}}}" for M in report["maximal_tails"]]
    c = report["conditions"]
    out.append(f"condition K: {_yn(c['K'])}" + (f" (fails at {', '.join(c['K_witnesses'])})" if c["K_witnesses"] else ""))
    out.append(f"condition L: {_yn(c['L'])}")
    out.append(f"cycles: {len(report['cycles'])}, without K: {len(report['cycles_without_K'])}")
    out.append(f"prime ring: {_yn(report['prime_ring'])}")
    out.append(f"simple: {_yn(report['simple'])}")
    out.append("")
    out.append("spectrum:")
    for p in report["spectrum"]:
        flags = [f"case {p['case']}", p["primitivity"], f"height {p['height']}", f"coheight {p['coheight']}"]
        if p["minimal"]:
            flags.append("minimal")
        if p["maximal"]:
            flags.append("maximal")
        if p["stratum"]:
            flags.append("infinite family")
        out.append(f"  {p['label']}  [{'; '.join(flags)}]")
    out.append("inclusions:")
    out += [f"  {a} < {b}" for a, b in report["order"]]
    out.append("strata:")
    for s in report["strata"]:
        out.append(f"  tail {{{','.join(s['tail'])}}}: {s['shape']}, {len(s['primes'])} node(s)")
    out.append("")
    out.append(f"krull dimension: {report['krull_dimension']}")
    out.append(f"all primes primitive: {_yn(report['all_primes_primitive'])}")
    out.append(f"all non-zero primes maximal: {_yn(report['all_nonzero_primes_maximal'])}")
    if report["mismatches"]:
        out.append(f"MISMATCH between graph-side and poset-side: {', '.join(report['mismatches'])}")
    return "\n".join(out) + "\n"
