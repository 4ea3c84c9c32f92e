"""Command line front end and its JSON document formats."""

from .io import graph_from_document, graph_to_document, load_graph, parse_graph, serialize_graph
from .main import check_claim, main
from .randgraph import random_corpus, random_graph
from .report import build_report, report_json, report_text

__all__ = [
    "build_report",
    "check_claim",
    "graph_from_document",
    "graph_to_document",
    "load_graph",
    "main",
    "parse_graph",
    "random_corpus",
    "random_graph",
    "report_json",
    "report_text",
    "serialize_graph",
]
