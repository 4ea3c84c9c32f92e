"""
Primes of the one-loop graph over F_p
=====================================

Over a concrete prime field the single stratum of the loop splits into one
maximal ideal per irreducible Laurent class.  We count them against the
necklace formula.
"""

from lpa_spectrum.fixtures import LOOP
from lpa_spectrum.laurent import enumerate_irreducible_classes, necklace_count, prime_field
from lpa_spectrum.spectrum import NonGraded, enumerate_primes

for p in (2, 3):
    F = prime_field(p)
    primes = enumerate_primes(LOOP, F, 3)
    nongraded = [q for q in primes if isinstance(q, NonGraded)]
    print(f"F{p}: {len(primes)} primes, {len(nongraded)} of them non-graded")
    for q in nongraded:
        print(f"   <{q.poly}(v)>")

# x itself is a unit in the Laurent ring, so degree one loses a class
for p in (2, 3):
    classes = enumerate_irreducible_classes(prime_field(p), 4)
    for d in range(1, 5):
        got = sum(1 for f in classes if f.high - f.low == d)
        print(f"F{p} degree {d}: {got} classes, necklace count {necklace_count(p, d)}")
