"""
When the short characterizations need care
==========================================

The graph-side tests for height one and co-height one have compact
textbook forms, and so does the test for every nonzero prime being maximal.  On a few small graphs those compact forms disagree
with the actual inclusion order.  This script prints both answers next to
the poset so the difference is visible.
"""

import math

from lpa_spectrum.fixtures import COHT, E2
from lpa_spectrum.graph import build_graph
from lpa_spectrum.spectrum import (
    all_nonzero_primes_maximal,
    build_spec_poset,
    coheight_one_primes,
    height_one_primes,
)
from lpa_spectrum.spectrum.stated import (
    all_nonzero_primes_maximal_as_stated,
    coheight_one_as_stated,
    height_one_as_stated,
)

cases = {
    "sink fed by an infinite emitter": build_graph(["v0", "v1"], [("v1", "v0", math.inf)]),
    "loop with a double exit": build_graph(["v0", "v1"], [("v0", "v0", 1), ("v0", "v1", 2)]),
    "COHT": COHT,
    "E2": E2,
}

for title, g in cases.items():
    P = build_spec_poset(g)
    h1, c1 = set(height_one_primes(g)), set(coheight_one_primes(g))
    print(f"== {title}")
    for node, h, c in zip(P.nodes, P.heights, P.coheights):
        p = node.ideal
        print(
            f"   {node.label:<34} height {h} (compact {height_one_as_stated(g, p)!s:<5} ours {p in h1!s:<5})"
            f"  co-height {c} (compact {coheight_one_as_stated(g, p)!s:<5} ours {p in c1})"
        )
    print(
        f"   all nonzero primes maximal: compact {all_nonzero_primes_maximal_as_stated(g)}, "
        f"ours {all_nonzero_primes_maximal(g)}"
    )
