"""Prime spectra of Leavitt path algebras of finite graphs."""

from .graph import OMEGA, Edge, Graph, VertexClass, build_graph, classify_vertex, cone, reaches, restricted_subgraph, tree
from .laurent import RATIONALS, SYMBOLIC, FieldSpec, LaurentPoly, parse_field, parse_poly, prime_field

__version__ = "0.1.0"
