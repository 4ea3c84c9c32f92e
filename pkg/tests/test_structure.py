import pytest
from hypothesis import given

import oracles
from strategies import graphs

from lpa_spectrum.errors import CapExceeded, InvalidCycle, NotAdmissible, NotHereditarySaturated
from lpa_spectrum.fixtures import E1, E2, E3, E4, H, H1, H2, ISO2, LOOP, ROSE2
from lpa_spectrum.graph import VertexClass, build_graph, classify_vertex, cone
from lpa_spectrum.structure import (
    AdmissiblePair,
    Cycle,
    breaking_vertices,
    condition_K,
    condition_K_witnesses,
    condition_L,
    cycles_without_K,
    enumerate_cycles,
    enumerate_hsat,
    has_exit,
    hereditary_saturated_closure,
    is_hereditary,
    is_maximal_tail,
    is_saturated,
    maximal_tails,
    quotient_graph,
    restricted_subgraph,
)

E0 = frozenset(E1.vertices)


class TestHereditarySaturated:
    def test_hereditary_examples(self):
        assert is_hereditary(E1, H)
        assert is_hereditary(E1, set())
        assert not is_hereditary(E1, {"v1"})

    def test_saturated_examples(self):
        assert is_saturated(E1, H1)
        assert is_saturated(E1, E0)
        assert not is_saturated(E1, {"u3"})

    def test_closure_examples(self):
        assert hereditary_saturated_closure(E1, set()).vertices == frozenset()
        assert hereditary_saturated_closure(E1, {"v"}).vertices == {"v"}

    def test_closure_of_v1_saturates_to_H2(self):
        # the hereditary sweep gives {v1,u1,u3,v}; saturation then pulls in u2 and v2
        closed = hereditary_saturated_closure(E1, {"v1"}).vertices
        assert closed == H2
        assert closed == min((X for X in oracles.hsat(E1) if "v1" in X), key=len)

    def test_enumerate_examples(self):
        assert [h.vertices for h in enumerate_hsat(LOOP)] == [frozenset(), {"v"}]
        assert [h.vertices for h in enumerate_hsat(ROSE2)] == [frozenset(), {"v"}]
        found = {h.vertices for h in enumerate_hsat(E1)}
        assert {frozenset(), H, H1, H2, E0} <= found

    def test_enumerate_is_sorted_by_size_then_members(self):
        sets = [sorted(h.vertices) for h in enumerate_hsat(E1)]
        assert sets == sorted(sets, key=lambda s: (len(s), s))

    def test_cap(self):
        g = build_graph([f"v{i}" for i in range(6)])
        with pytest.raises(CapExceeded):
            enumerate_hsat(g, cap=10)


class TestBreakingVertices:
    def test_examples(self):
        assert breaking_vertices(E2, H1) == {"v1"}
        assert breaking_vertices(E2, H) == {"v1"}

    def test_row_finite_graph_has_none(self):
        for h in enumerate_hsat(E1):
            assert breaking_vertices(E1, h.vertices) == frozenset()

    def test_omega_edge_into_complement_is_not_breaking(self):
        assert breaking_vertices(E2, set()) == frozenset()

    def test_requires_hereditary_saturated(self):
        with pytest.raises(NotHereditarySaturated):
            breaking_vertices(E1, {"v1"})

    def test_admissible_pair_checks_S(self):
        hs = hereditary_saturated_closure(E2, H1)
        AdmissiblePair(hs, frozenset({"v1"}))
        with pytest.raises(NotAdmissible):
            AdmissiblePair(hs, frozenset({"v2"}))


class TestQuotientGraph:
    def test_identity(self):
        assert quotient_graph(E1, set(), set()) == E1

    def test_full_breaking_set(self):
        q = quotient_graph(E2, H1, {"v1"})
        assert q.vertices == ("v", "v1", "v2")
        assert [(e.src, e.dst) for e in q.edges] == [("v1", "v"), ("v2", "v")]

    def test_primed_sink_added(self):
        q = quotient_graph(E2, H1, set())
        assert set(q.vertices) == {"v1", "v2", "v", "v1'"}
        assert classify_vertex(q, "v1'") is VertexClass.SINK

    def test_primed_copies_of_incoming_edges(self):
        q = quotient_graph(E3, H1, set())
        assert q.mult[("v", "v1'")] == 1 and q.mult[("v", "v1")] == 1

    def test_rejects_non_admissible(self):
        with pytest.raises(NotAdmissible):
            quotient_graph(E2, H1, {"v2"})
        with pytest.raises(NotAdmissible):
            quotient_graph(E2, {"v1"}, set())


class TestMaximalTails:
    def test_is_maximal_tail_examples(self):
        assert is_maximal_tail(E1, {"v1", "v2", "v"})
        assert is_maximal_tail(E1, {"w", "w1", "w2"})
        assert not is_maximal_tail(ISO2, ISO2.vertices)

    def test_listing_examples(self):
        assert maximal_tails(LOOP) == [{"v"}]
        tails = maximal_tails(E1)
        assert {"v1", "v2", "v"} in tails and {"w", "w1", "w2"} in tails

    def test_tails_inside_H1(self):
        # {w,w1,w2} is one; H1\{w} is the other, since u3 is a common sink
        tails = maximal_tails(E1, within=H1)
        assert {"w", "w1", "w2"} in tails
        assert tails == oracles.maximal_tails(E1, H1)
        assert tails == [{"w", "w1", "w2"}, H1 - {"w"}]


class TestCycles:
    def test_examples(self):
        assert enumerate_cycles(E1) == []
        assert [c.vertices for c in enumerate_cycles(E4)] == [("u", "v1"), ("v1", "v2", "v3", "v4")]
        assert [c.vertices for c in enumerate_cycles(LOOP)] == [("v",)]

    def test_rotation_is_canonical(self):
        assert Cycle.from_sequence(["v1", "u"]).vertices == ("u", "v1")

    def test_rose_counts_two_loops(self):
        (c,) = enumerate_cycles(ROSE2)
        assert c.multiplicity == 2

    def test_has_exit_examples(self):
        assert not has_exit(LOOP, enumerate_cycles(LOOP)[0])
        assert has_exit(E4, Cycle(("u", "v1")))
        assert has_exit(ROSE2, enumerate_cycles(ROSE2)[0])

    def test_has_exit_rejects_foreign_cycles(self):
        with pytest.raises(InvalidCycle):
            has_exit(E4, Cycle(("u", "v2")))
        with pytest.raises(InvalidCycle):
            has_exit(E4, Cycle(("u", "u")))

    def test_condition_L_examples(self):
        assert condition_L(E1)
        assert not condition_L(LOOP)
        assert condition_L(E4)

    def test_condition_K_examples(self):
        assert condition_K(E1)
        assert not condition_K(LOOP)
        assert condition_K(ROSE2)
        assert condition_K_witnesses(LOOP) == ["v"]

    def test_E4_satisfies_K_through_return_paths(self):
        # u lies on one simple cycle but returns to itself along two closed paths
        assert condition_K(E4)
        assert oracles.return_paths(E4, "u") == 2

    def test_cycles_without_K_examples(self):
        assert [c.vertices for c in cycles_without_K(LOOP)] == [("v",)]
        assert [c.vertices for c in cycles_without_K(E3)] == [("v", "v1")]
        assert cycles_without_K(E4) == []


@given(graphs())
def test_hsat_matches_subset_search(g):
    assert [h.vertices for h in enumerate_hsat(g)] == sorted(oracles.hsat(g), key=lambda s: (len(s), sorted(s)))


@given(graphs())
def test_breaking_matches_oracle(g):
    for h in enumerate_hsat(g):
        assert h.breaking == oracles.breaking(g, h.vertices) == breaking_vertices(g, h.vertices)


@given(graphs())
def test_closure_is_extensive_monotone_idempotent(g):
    subsets = list(oracles.subsets(g.vertices))
    closed = {X: hereditary_saturated_closure(g, X).vertices for X in subsets}
    members = set(oracles.hsat(g))
    for X, c in closed.items():
        assert X <= c and c in members
        assert hereditary_saturated_closure(g, c).vertices == c
        assert c == min((Y for Y in members if X <= Y), key=len)
    for X in subsets:
        for Y in subsets:
            if X <= Y:
                assert closed[X] <= closed[Y]


@given(graphs())
def test_membership_matches_predicates(g):
    members = {h.vertices for h in enumerate_hsat(g)}
    for X in oracles.subsets(g.vertices):
        assert (X in members) == (is_hereditary(g, X) and is_saturated(g, X))


@given(graphs())
def test_complement_duality(g):
    E0 = frozenset(g.vertices)
    members = {h.vertices for h in enumerate_hsat(g)}
    for M in oracles.subsets(g.vertices):
        mt1 = all(cone(g, v) <= M for v in M)
        mt2 = all(g.successors[v] & M for v in M if classify_vertex(g, v) is VertexClass.REGULAR)
        assert (mt1 and mt2) == ((E0 - M) in members)


@given(graphs())
def test_maximal_tails_match_oracle(g):
    assert sorted(map(sorted, maximal_tails(g))) == sorted(map(sorted, oracles.maximal_tails(g)))
    expected = oracles.maximal_tails(g)
    for M in oracles.subsets(g.vertices):
        if M:
            assert is_maximal_tail(g, M) == (M in expected)


@given(graphs(max_vertices=5))
def test_maximal_tails_within_match_oracle(g):
    for h in enumerate_hsat(g):
        W = h.vertices
        assert sorted(map(sorted, maximal_tails(g, within=W))) == sorted(map(sorted, oracles.maximal_tails(g, W)))


@given(graphs())
def test_quotient_vertex_count_and_primed_sinks(g):
    for h in enumerate_hsat(g):
        B = h.breaking
        for S in oracles.subsets(B):
            q = quotient_graph(g, h.vertices, S)
            assert len(q.vertices) == len(g.vertices) - len(h.vertices) + len(B - S)
            for v in set(q.vertices) - set(g.vertices):
                assert classify_vertex(q, v) is VertexClass.SINK


@given(graphs())
def test_cycles_match_permutation_search(g):
    assert {c.vertices: c.multiplicity for c in enumerate_cycles(g)} == oracles.cycles(g)


@given(graphs())
def test_condition_K_matches_return_path_oracle(g):
    assert condition_K_witnesses(g) == [v for v in g.vertices if oracles.return_paths(g, v) == 1]


@given(graphs())
def test_condition_K_iff_no_cycle_without_K(g):
    assert condition_K(g) == (not cycles_without_K(g))


@given(graphs())
def test_cycles_without_K_have_no_exit_in_their_cone(g):
    for c in cycles_without_K(g):
        sub = restricted_subgraph(g, cone(g, c.base))
        assert not has_exit(sub, c)
