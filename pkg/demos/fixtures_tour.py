"""
A walk through the bundled graphs
=================================

Each fixture is a small directed graph, some with infinite emitters.  For every one we list the
prime ideals together with their place in the inclusion order.
"""

from lpa_spectrum.fixtures import FIXTURES
from lpa_spectrum.spectrum import build_spec_poset, is_prime_ring, nongraded_strata
from lpa_spectrum.structure import condition_K

# the symbolic field keeps each non-graded family as one infinite stratum
for name, g in FIXTURES.items():
    P = build_spec_poset(g)
    print(f"== {name}: {len(g.vertices)} vertices, {len(g.edges)} edge bundles")
    print(f"   prime ring: {is_prime_ring(g)}   condition K: {condition_K(g)}")
    for node, h, c in zip(P.nodes, P.heights, P.coheights):
        size = "inf" if node.cardinality is None else node.cardinality
        print(f"   {node.label:<40} height {h}  co-height {c}  size {size}")
    print(f"   hasse edges: {sorted(P.hasse)}")
    print(f"   Krull dimension: {P.krull_dimension}")

# Condition K fails exactly where a stratum shows up
for name, g in FIXTURES.items():
    assert condition_K(g) == (nongraded_strata(g) == [])
print("condition K agrees with the absence of strata on every fixture")
