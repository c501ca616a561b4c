import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pancyclic import graph as gr
from pancyclic.cycles import cycle_spectrum
from pancyclic.expr import graph_from_expr
from pancyclic.graph import GraphError, build, degree_sequence, disjoint_union, join
from pancyclic.isomorphism import is_isomorphic


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build(n, chosen)


def test_build_complete():
    g = build(4, [(u, v) for v in range(4) for u in range(v)])
    assert g.m == 6
    assert g.degrees == (3, 3, 3, 3)


def test_build_empty_and_cycle():
    assert build(3, []).m == 0
    c5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5.degrees == (2,) * 5


def test_build_collapses_duplicates():
    g = build(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


@pytest.mark.parametrize(
    "n, edges",
    [(0, []), (65, []), (3, [(1, 1)]), (3, [(0, 3)]), (3, [(-1, 0)])],
)
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build(n, edges)


def test_capacity_edges():
    assert gr.complete(64).m == comb(64, 2)
    with pytest.raises(GraphError):
        join(gr.complete(40), gr.empty(25))
    with pytest.raises(GraphError):
        disjoint_union(gr.complete(40), gr.empty(25))


def test_join_edge_count_example():
    g = join(gr.complete(2), disjoint_union(gr.empty(2), gr.complete(2)))
    assert g.n == 6
    assert g.m == 10 == comb(4, 2) + 4


def test_join_star_and_k3_4k1():
    assert is_isomorphic(join(gr.complete(1), gr.empty(5)), gr.complete_bipartite(1, 5))
    assert degree_sequence(join(gr.complete(3), gr.empty(4))).degrees == (3, 3, 3, 3, 6, 6, 6)


def test_disjoint_union_examples():
    g = disjoint_union(gr.complete(1), gr.complete(5))
    assert not gr.is_connected(g)
    assert degree_sequence(g).degrees == (0, 4, 4, 4, 4, 4)
    assert degree_sequence(disjoint_union(gr.complete(2), gr.empty(3))).degrees == (0, 0, 0, 1, 1)
    h = disjoint_union(gr.cycle(3), gr.cycle(4))
    assert not gr.is_connected(h)
    assert cycle_spectrum(h).lengths == {3, 4}


def test_connectivity_and_bipartiteness():
    assert gr.is_connected(gr.cycle(6)) and gr.is_bipartite(gr.cycle(6))
    assert gr.is_connected(gr.cycle(5)) and not gr.is_bipartite(gr.cycle(5))
    assert not gr.is_connected(disjoint_union(gr.complete(6), gr.empty(1)))


def test_bipartition_is_valid():
    left, right = gr.bipartition(gr.complete_bipartite(3, 4))
    assert sorted(left + right) == list(range(7))
    g = gr.complete_bipartite(3, 4)
    for side in (left, right):
        assert not any(g.has_edge(u, v) for u in side for v in side)


def test_degree_sequence_examples():
    assert degree_sequence(graph_from_expr("(K2 v 2*K1) v 5*K1")).degrees == (4, 4, 4, 4, 4, 7, 7, 8, 8)
    assert degree_sequence(graph_from_expr("K2 v (K1 + K{1,3})")).degrees == (2, 3, 3, 3, 5, 6, 6)
    assert degree_sequence(gr.complete(6)).degrees == (5,) * 6


def test_case_2_6_sequence_is_one_of_the_listed():
    listed = {(3, 4, 4, 4, 4, 7, 8, 8, 8), (4, 4, 4, 4, 4, 6, 8, 8, 8), (4, 4, 4, 4, 4, 7, 7, 8, 8)}
    assert degree_sequence(graph_from_expr("(K2 v 2*K1) v 5*K1")).degrees in listed


@pytest.mark.parametrize("bad", [(3, 1, 2), (0, 0, 3), (1, 1, 1)])
def test_degree_sequence_invariants(bad):
    with pytest.raises(GraphError):
        gr.DegreeSequence(bad)


def test_degree_sequence_one_based():
    d = gr.DegreeSequence((1, 1, 2))
    assert d[1] == 1 and d[3] == 2 and d.n == 3


@settings(max_examples=200, deadline=None)
@given(graphs(), graphs())
def test_join_invariants(g, h):
    if g.n + h.n > gr.MAX_ORDER:
        return
    j = join(g, h)
    assert j.m == g.m + h.m + g.n * h.n
    assert j.degrees == tuple(d + h.n for d in g.degrees) + tuple(d + g.n for d in h.degrees)
    assert j.induced(range(g.n)) == g
    assert j.induced(range(g.n, g.n + h.n)) == h
    assert is_isomorphic(j, join(h, g))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6), graphs(max_n=6))
def test_union_commutative_associative(a, b, c):
    assert is_isomorphic(disjoint_union(a, b), disjoint_union(b, a))
    assert is_isomorphic(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c)))
    assert disjoint_union(a, b).m == a.m + b.m


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph_invariants(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert 2 * g.m == sum(g.degrees)
    assert sum(degree_sequence(g)) == 2 * g.m


def test_bipartite_iff_no_odd_cycle(rng):
    for _ in range(300):
        g = random_small(rng)
        lengths = cycle_spectrum(g).lengths
        assert gr.is_bipartite(g) == (not any(l % 2 for l in lengths))


def random_small(rng: random.Random):
    n = rng.randint(1, 8)
    p = rng.random()
    return build(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def test_triangle_counts():
    assert gr.triangle_counts(gr.complete(4)) == (3, 3, 3, 3)
    assert gr.triangle_counts(gr.cycle(5)) == (0,) * 5


def test_petersen():
    p = gr.petersen()
    assert p.n == 10 and p.m == 15 and set(p.degrees) == {3}
