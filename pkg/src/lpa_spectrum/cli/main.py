"""``lpa-spectrum`` command line: analyze, poset, check, random.

Exit status: 0 success, 1 unreadable input, 2 an enumeration cap was hit,
3 the graph-side and poset-side computations disagreed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..errors import CapExceeded, DuplicateVertex, InvalidMultiplicity, OutOfRange, ParseError, UnknownVertex
from ..graph import Graph, tree
from ..laurent import FieldSpec, parse_field
from ..spectrum import (
    all_nonzero_primes_maximal,
    all_primes_primitive,
    build_spec_poset,
    classify_primitive,
    crosscheck,
    is_maximal_ideal,
    is_prime_ring,
    is_simple,
    is_zero,
    krull_dim_zero,
)
from ..structure import _hsat_sets, condition_K_witnesses, enumerate_cycles, has_exit
from .dot import poset_to_dot
from .io import graph_to_document, load_graph, serialize_graph
from .randgraph import MAX_RANDOM_VERTICES, random_corpus
from .report import build_report, report_json, report_text

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3

CLAIMS = (
    "prime-ring",
    "simple",
    "condition-K",
    "condition-L",
    "krull-dim-0",
    "all-primes-primitive",
    "all-nonzero-primes-maximal",
)


class Mismatch(Exception):
    pass


# ------------------------------------------------------------------ claims


def _no_common_descendant(g: Graph) -> str:
    vs = g.vertices
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if not tree(g, u) & tree(g, v):
                return f"{u} and {v} have no common descendant"
    return "the graph has no vertices"


def _exitless_cycle(g: Graph) -> str | None:
    for c in enumerate_cycles(g):
        if not has_exit(g, c):
            return f"cycle {c} has no exit"
    return None


def _claim_prime_ring(g: Graph, field, max_degree):
    ok = is_prime_ring(g)
    return ok, "every two vertices have a common descendant" if ok else _no_common_descendant(g)


def _claim_simple(g: Graph, field, max_degree):
    if is_simple(g):
        return True, "Condition (L) holds and no proper non-empty hereditary saturated set exists"
    exitless = _exitless_cycle(g)
    if exitless:
        return False, exitless
    proper = [h for h in _hsat_sets(g) if h and h != g.vertex_set]
    if proper:
        return False, "hereditary saturated set {" + ",".join(sorted(proper[0])) + "}"
    return False, "the graph has no vertices"


def _claim_K(g: Graph, field, max_degree):
    w = condition_K_witnesses(g)
    return (True, "no vertex is the base of exactly one closed simple path") if not w else (
        False, f"{w[0]} is the base of exactly one closed simple path")


def _claim_L(g: Graph, field, max_degree):
    exitless = _exitless_cycle(g)
    return (True, "every cycle has an exit") if exitless is None else (False, exitless)


def _poset_claim(g, field, max_degree, graph_side: bool, key: str):
    poset = build_spec_poset(g, field, max_degree)
    bad = crosscheck(g, field, max_degree, poset)
    if key in bad:
        raise Mismatch(f"{key}: graph-side says {graph_side}, the inclusion poset disagrees")
    return poset


def _claim_krull0(g: Graph, field, max_degree):
    ok = krull_dim_zero(g)
    poset = _poset_claim(g, field, max_degree, ok, "krull_dim_zero")
    if ok:
        return True, "no prime ideal is properly contained in another"
    i, j = min(poset.hasse)
    return False, f"{poset.nodes[i].label} < {poset.nodes[j].label}"


def _claim_primitive(g: Graph, field, max_degree):
    ok = all_primes_primitive(g)
    poset = _poset_claim(g, field, max_degree, ok, "all_primes_primitive")
    if ok:
        return True, "Condition (K) holds, so every prime is graded with an exit-carrying tail"
    for n in poset.nodes:
        if not classify_primitive(g, n.ideal).primitive:
            return False, f"{n.label} is prime but not primitive"
    return False, "Condition (K) fails"


def _claim_maximal(g: Graph, field, max_degree):
    ok = all_nonzero_primes_maximal(g)
    poset = _poset_claim(g, field, max_degree, ok, "all_nonzero_primes_maximal")
    if ok:
        return True, "every non-zero prime has a simple quotient"
    for n in poset.nodes:
        if not is_zero(n.ideal) and not is_maximal_ideal(g, n.ideal):
            return False, f"{n.label} is not maximal"
    return False, "no witness found"


_CLAIMS = {
    "prime-ring": _claim_prime_ring,
    "simple": _claim_simple,
    "condition-K": _claim_K,
    "condition-L": _claim_L,
    "krull-dim-0": _claim_krull0,
    "all-primes-primitive": _claim_primitive,
    "all-nonzero-primes-maximal": _claim_maximal,
}


def check_claim(g: Graph, claim: str, field: FieldSpec, max_degree: int = 3) -> tuple[bool, str]:
    """Evaluate ``claim`` and return its truth value with a short witness."""
    return _CLAIMS[claim](g, field, max_degree)


# ---------------------------------------------------------------- commands


def cmd_analyze(args) -> int:
    g = load_graph(args.path)
    report = build_report(g, args.field, args.max_degree)
    text = report_json(report) if args.format == "json" else report_text(report)
    _emit(text, args.output)
    if report["mismatches"]:
        print(f"graph-side and poset-side disagree on: {', '.join(report['mismatches'])}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_poset(args) -> int:
    g = load_graph(args.path)
    dot = poset_to_dot(build_spec_poset(g, args.field, args.max_degree), g.name)
    _emit(dot, args.dot)
    return EXIT_OK


def cmd_check(args) -> int:
    g = load_graph(args.path)
    value, witness = check_claim(g, args.claim, args.field, args.max_degree)
    print(f"{args.claim}: {'true' if value else 'false'}")
    print(f"witness: {witness}")
    return EXIT_OK


def cmd_random(args) -> int:
    corpus = random_corpus(args.seed, args.count, args.max_vertices, args.omega_prob)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for g in corpus:
            (out / f"{g.name}.json").write_text(serialize_graph(g), encoding="utf-8")
    else:
        docs = [graph_to_document(g) for g in corpus]
        sys.stdout.write(json.dumps(docs, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _emit(text: str, path) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------ parser


def _field(text: str) -> FieldSpec:
    try:
        return parse_field(text)
    except (ParseError, OutOfRange) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpa-spectrum",
        description="Prime spectra of Leavitt path algebras of finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def spectral(p):
        p.add_argument("path", help="graph document (JSON)")
        p.add_argument("--field", type=_field, default="symbolic", help="symbolic, Q or F<p> (default symbolic)")
        p.add_argument("--max-degree", type=int, default=3, help="degree bound for F<p> enumeration (default 3)")

    p = sub.add_parser("analyze", help="full spectral report")
    spectral(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("poset", help="Hasse diagram of the spectrum in DOT")
    spectral(p)
    p.add_argument("--dot", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("check", help="evaluate one structural claim")
    spectral(p)
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("random", help="seeded random graph documents")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=6, help=f"at most {MAX_RANDOM_VERTICES}")
    p.add_argument("--omega-prob", type=float, default=0.15, help="chance that an edge is infinite")
    p.add_argument("--out", help="directory for one file per graph (default: JSON list on stdout)")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownVertex, DuplicateVertex, InvalidMultiplicity, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Mismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
