"""Graph-side characterizations against the inclusion poset."""

import math

import pytest
from hypothesis import given

from strategies import graphs

from lpa_spectrum.fixtures import COHT, E1, E2, E3, E4, FIXTURES, H1, LOOP, ROSE2
from lpa_spectrum.graph import build_graph
from lpa_spectrum.laurent import SYMBOLIC, prime_field
from lpa_spectrum.spectrum import (
    Graded,
    NonGraded,
    all_nonzero_primes_maximal,
    all_primes_primitive,
    build_spec_poset,
    coheight_one_primes,
    crosscheck,
    height_one_primes,
    is_maximal_ideal,
    is_zero,
    krull_dim_zero,
    minimal_primes,
    zero_ideal,
)
from lpa_spectrum.spectrum.stated import (
    all_nonzero_primes_maximal_as_stated,
    coheight_one_as_stated,
    height_one_as_stated,
    krull_dim_zero_as_stated,
    minimal_as_stated,
)
from lpa_spectrum.structure import cycles_without_K

F2 = prime_field(2)
MODES = [(SYMBOLIC, 3), (F2, 3)]


def G(Hs, Ss=()):
    return Graded(frozenset(Hs), frozenset(Ss))


class TestExamples:
    def test_minimal(self):
        P = build_spec_poset(E1)
        assert minimal_primes(E1) == [n.ideal for n in P.nodes]
        assert G(H1) in minimal_primes(E1)
        assert minimal_primes(LOOP) == [zero_ideal()]

    def test_height_one(self):
        loop = height_one_primes(LOOP, F2, 3)
        assert len(loop) == 4 and all(isinstance(p, NonGraded) for p in loop)
        assert height_one_primes(E1) == []
        assert height_one_primes(E3) == [G(H1)]

    def test_coheight_one(self):
        (c,) = cycles_without_K(COHT)
        assert NonGraded(frozenset(), c) in coheight_one_primes(COHT)
        assert coheight_one_primes(E1) == []
        assert coheight_one_primes(E3) == [G(H1, {"v1"})]

    def test_primitive(self):
        assert all_primes_primitive(E1)
        assert not all_primes_primitive(E3)
        assert all_primes_primitive(ROSE2)

    def test_maximal(self):
        assert all_nonzero_primes_maximal(E1)
        assert not all_nonzero_primes_maximal(E3)
        assert all_nonzero_primes_maximal(LOOP)

    def test_krull_dim_zero(self):
        assert krull_dim_zero(E1)
        assert not krull_dim_zero(E3)
        assert not krull_dim_zero(LOOP)
        assert krull_dim_zero(E4) and krull_dim_zero(ROSE2)

    def test_E2_is_not_dimension_zero_under_the_fixture(self):
        # I({v,w}) sits below I(E0\{v1}); see the fixtures test for the list
        assert not krull_dim_zero(E2)
        assert build_spec_poset(E2).krull_dimension == 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("field, degree", MODES, ids=["symbolic", "F2"])
def test_fixtures_agree_with_poset(name, field, degree):
    assert crosscheck(FIXTURES[name], field, degree) == []


@given(graphs())
def test_random_graphs_agree_with_poset_symbolic(g):
    assert crosscheck(g) == []


@given(graphs(max_vertices=4))
def test_random_graphs_agree_with_poset_F2(g):
    assert crosscheck(g, F2, 3) == []


class TestLiteralStatements:
    """Small graphs where the word-for-word clauses and the poset part ways.

    Each case is checked against the poset so the discrepancy is a fact about
    the graph rather than about either implementation.
    """

    def test_infinite_emitter_into_a_sink(self):
        # E0 is itself a maximal tail containing the proper hereditary
        # saturated set {v0}, which the literal clause forbids
        g = build_graph(["v0", "v1"], [("v1", "v0", math.inf)])
        P = build_spec_poset(g)
        assert all(is_maximal_ideal(g, n.ideal) for n in P.nodes if not is_zero(n.ideal))
        assert all_nonzero_primes_maximal(g)
        assert not all_nonzero_primes_maximal_as_stated(g)

    def test_nongraded_prime_above_a_graded_chain(self):
        # {0} < I({v1}) < <f(v0)>, so the non-graded prime has height 2
        g = build_graph(["v0", "v1"], [("v0", "v0", 1), ("v0", "v1", 2)])
        P = build_spec_poset(g)
        (i,) = [i for i, n in enumerate(P.nodes) if n.stratum]
        p = P.nodes[i].ideal
        assert P.heights[i] == 2
        assert height_one_as_stated(g, p)
        assert p not in height_one_primes(g)

    def test_zero_ideal_below_a_chain(self):
        g = build_graph(["v0", "v1"], [("v1", "v0", math.inf), ("v1", "v1", 2)])
        P = build_spec_poset(g)
        i = P.index(zero_ideal())
        assert P.coheights[i] == 2
        assert coheight_one_as_stated(g, zero_ideal())
        assert zero_ideal() not in coheight_one_primes(g)

    def test_COHT(self):
        P = build_spec_poset(COHT)
        Q = G({"u", "v"})
        assert P.heights[P.index(Q)] == 2
        assert height_one_as_stated(COHT, Q)
        assert Q not in height_one_primes(COHT)
        assert coheight_one_as_stated(COHT, zero_ideal())
        assert zero_ideal() not in coheight_one_primes(COHT)

    def test_E2(self):
        P = build_spec_poset(E2)
        top = G(frozenset(E2.vertices) - {"v1"})
        assert P.heights[P.index(top)] == 1
        assert not height_one_as_stated(E2, top)
        assert P.coheights[P.index(G(H1, {"v1"}))] == 0
        assert coheight_one_as_stated(E2, G(H1, {"v1"}))

    @pytest.mark.parametrize("name", ["E1", "E3", "E4", "LOOP", "ROSE2", "ISO2"])
    def test_literal_forms_hold_on_the_other_fixtures(self, name):
        g = FIXTURES[name]
        P = build_spec_poset(g)
        minimal = set(P.minimal())
        for i, n in enumerate(P.nodes):
            assert minimal_as_stated(g, n.ideal) == (i in minimal)
            assert height_one_as_stated(g, n.ideal) == (P.heights[i] == 1)
            assert coheight_one_as_stated(g, n.ideal) == (P.coheights[i] == 1)
        assert krull_dim_zero_as_stated(g) == (P.krull_dimension == 0)

