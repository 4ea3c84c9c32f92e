"""Prime spectrum of a Leavitt path algebra computed from its graph."""

from .ideals import (
    Classification,
    Graded,
    NonGraded,
    PrimeIdeal,
    Stratum,
    classify_ideal,
    contains,
    enumerate_graded_primes,
    enumerate_primes,
    ideal_key,
    is_prime_ring,
    is_zero,
    nongraded_strata,
    same_ideal,
    zero_ideal,
)
from .poset import PosetNode, SpecPoset, build_spec_poset, krull_dimension
from .theorems import (
    NonGradedQuotient,
    PrimitivityVerdict,
    StratumView,
    all_nonzero_primes_maximal,
    all_primes_primitive,
    build_chain_graph,
    classify_primitive,
    coheight_one_primes,
    crosscheck,
    csp,
    generalized_closure,
    height_one_primes,
    is_coheight_one,
    is_height_one,
    is_maximal_ideal,
    is_minimal_prime,
    is_simple,
    krull_dim_zero,
    minimal_primes,
    poset_views,
    property_star,
    quotient_description,
    stratify,
    theorem_views,
)

__all__ = [name for name in dir() if not name.startswith("_")]
