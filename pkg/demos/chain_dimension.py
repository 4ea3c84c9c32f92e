"""
Prescribing the Krull dimension
===============================

``build_chain_graph(n)`` strings n loops together above a rose with two
petals.  Every loop adds one link to the longest chain of primes.
"""

import time

from lpa_spectrum.cli.dot import poset_to_dot
from lpa_spectrum.spectrum import build_chain_graph, build_spec_poset

for n in range(7):
    t = time.perf_counter()
    P = build_spec_poset(build_chain_graph(n))
    ms = 1000 * (time.perf_counter() - t)
    print(f"n={n}: {len(P.nodes):>2} primes, dimension {P.krull_dimension}  ({ms:.1f} ms)")

# the n=2 poset, ready for graphviz
print(poset_to_dot(build_spec_poset(build_chain_graph(2)), "chain2"))
