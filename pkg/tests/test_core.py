from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitri.core import (
    EdgeKind,
    GonContext,
    KTriangulation,
    angles_of,
    classify_edge,
    crosses,
    cyclic_distance,
    has_l_crossing,
    is_k_triangulation,
    max_crossing_size,
    neighbour_orders,
)
from multitri.flips import flip, t_min

from conftest import all_triangulations, brute_max_crossing, brute_triangulations, chords_cross, triangulations


def test_context_validation():
    with pytest.raises(ValueError):
        GonContext(4, 2)
    with pytest.raises(ValueError):
        GonContext(5, 0)
    ctx = GonContext(5, 2)
    assert (ctx.num_relevant, ctx.num_edges, ctx.num_stars) == (0, 10, 1)


@pytest.mark.parametrize("u,v,want", [(0, 3, 3), (1, 7, 2), (2, 6, 4), (5, 5, 0)])
def test_cyclic_distance(u, v, want):
    ctx = GonContext(8, 2)
    assert cyclic_distance(ctx, u, v) == want
    assert cyclic_distance(ctx, v, u) == want


def test_cyclic_distance_rejects_bad_labels():
    with pytest.raises(ValueError):
        cyclic_distance(GonContext(8, 2), 0, 8)


@pytest.mark.parametrize("e,kind", [((0, 3), EdgeKind.RELEVANT), ((0, 2), EdgeKind.BOUNDARY), ((0, 1), EdgeKind.IRRELEVANT), ((1, 7), EdgeKind.BOUNDARY)])
def test_classify_edge(e, kind):
    assert classify_edge(GonContext(8, 2), e) is kind


@pytest.mark.parametrize("e,f,want", [((0, 4), (2, 6), True), ((0, 4), (1, 3), False), ((0, 4), (4, 6), False), ((0, 4), (5, 7), False)])
def test_crosses_examples(e, f, want):
    ctx = GonContext(8, 2)
    assert crosses(ctx, e, f) is want
    assert crosses(ctx, f, e) is want


def test_crosses_matches_independent_predicate():
    ctx = GonContext(9, 1)
    es = ctx.all_edges()
    for e in es:
        assert not crosses(ctx, e, e)
        for f in es:
            assert crosses(ctx, e, f) == chords_cross(e, f)


def test_max_crossing_examples():
    assert max_crossing_size(GonContext(6, 2), [(0, 3), (1, 4), (2, 5)]) == 3
    assert max_crossing_size(GonContext(8, 2), [(0, 3), (4, 7)]) == 1
    assert max_crossing_size(GonContext(8, 2), []) == 0
    # the (10,2) zigzag has no 2-crossing
    assert max_crossing_size(GonContext(10, 2), [(0, 7), (1, 6), (2, 5), (1, 7), (2, 6)]) == 1


def test_max_crossing_against_brute_force_random_sets():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(4, 10)
        ctx = GonContext(n, 1)
        es = rng.sample(ctx.all_edges(), rng.randint(0, min(12, len(ctx.all_edges()))))
        assert max_crossing_size(ctx, es) == brute_max_crossing(es)


@given(st.integers(4, 10), st.integers(0, 2**32), st.integers(0, 12))
@settings(max_examples=150, deadline=None)
def test_max_crossing_property(n, seed, size):
    ctx = GonContext(n, 1)
    es = random.Random(seed).sample(ctx.all_edges(), min(size, len(ctx.all_edges())))
    got = max_crossing_size(ctx, es)
    assert got == brute_max_crossing(es)
    for l in range(1, len(es) + 2):
        assert has_l_crossing(ctx, es, l) == (got >= l)


def test_has_l_crossing_examples():
    ctx = GonContext(6, 2)
    assert has_l_crossing(ctx, [(0, 3), (1, 4), (2, 5)], 3)
    assert not has_l_crossing(ctx, [(0, 3), (1, 4), (2, 5)], 4)
    assert not has_l_crossing(GonContext(8, 2), t_min(GonContext(8, 2)).relevant_edges, 3)
    with pytest.raises(ValueError):
        has_l_crossing(ctx, [], 0)


def test_angles_examples():
    ctx5 = GonContext(5, 2)
    assert len(angles_of(ctx5, ctx5.all_edges())) == 15
    ctx8 = GonContext(8, 2)
    assert angles_of(ctx8, [(0, 3), (0, 5)]) == [(5, 0, 3)]
    assert angles_of(ctx8, [(0, 3)]) == []


@given(triangulations())
@settings(max_examples=60, deadline=None)
def test_angles_per_vertex_degree(T):
    ctx = T.ctx
    es = T.edges()
    angs = angles_of(ctx, es)
    deg = [0] * ctx.n
    for a, b in es:
        deg[a] += 1
        deg[b] += 1
    for v in range(ctx.n):
        assert sum(1 for a in angs if a.v == v) == max(deg[v] - 1, 0)
    # empty-gap condition checked by brute force
    eset = set(es)
    for u, v, w in angs:
        t = (w + 1) % ctx.n
        while t != u:
            assert tuple(sorted((v, t))) not in eset
            t = (t + 1) % ctx.n


def test_neighbour_orders_start_after_vertex():
    ctx = GonContext(7, 1)
    nb = neighbour_orders(ctx, ctx.all_edges())
    assert nb[3] == [4, 5, 6, 0, 1, 2]


def test_is_k_triangulation_examples():
    ctx6 = GonContext(6, 2)
    assert is_k_triangulation(ctx6, [(1, 4), (2, 5)])
    assert not is_k_triangulation(ctx6, [(0, 3), (1, 4), (2, 5)])
    ctx8 = GonContext(8, 2)
    tmin = [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (1, 6)]
    assert is_k_triangulation(ctx8, tmin)
    assert is_k_triangulation(ctx8, tmin, method="maximal")
    with pytest.raises(ValueError):
        is_k_triangulation(ctx8, [(0, 2)])
    with pytest.raises(ValueError):
        is_k_triangulation(ctx8, tmin, method="nope")


@pytest.mark.parametrize("n,k", [(6, 2), (7, 2), (8, 2), (9, 3), (7, 1), (8, 1)])
def test_both_validation_modes_agree_with_brute_force(n, k):
    ctx = GonContext(n, k)
    truth = brute_triangulations(n, k)
    rel = ctx.relevant_edges()
    rng = random.Random(n * 10 + k)
    samples = [set(s) for s in truth]
    for _ in range(200):
        samples.append(set(rng.sample(rel, rng.randint(0, len(rel)))))
    for s in samples:
        want = frozenset(s) in truth
        assert is_k_triangulation(ctx, s) == want
        # the maximality mode only differs from counting on crossing-free sets
        if not has_l_crossing(ctx, s, k + 1):
            assert is_k_triangulation(ctx, s, method="maximal") == (len(s) == ctx.num_relevant)


def test_degenerate_polygon_has_empty_triangulation():
    ctx = GonContext(7, 3)
    T = KTriangulation(ctx, ())
    assert is_k_triangulation(ctx, ())
    assert len(T.edges()) == ctx.num_edges == 21


@given(triangulations())
@settings(max_examples=60, deadline=None)
def test_edge_counts(T):
    ctx = T.ctx
    assert len(T.relevant_edges) == ctx.k * (ctx.n - 2 * ctx.k - 1)
    assert len(T.edges()) == ctx.k * (2 * ctx.n - 2 * ctx.k - 1)


@pytest.mark.parametrize("n,k", [(6, 2), (7, 2), (8, 2), (9, 3)])
def test_deleting_a_relevant_edge_leaves_exactly_two_completions(n, k):
    sets = [set(T.relevant_edges) for T in all_triangulations(n, k)]
    for T in all_triangulations(n, k):
        for f in T.relevant_edges:
            rest = set(T.relevant_edges) - {f}
            holders = [s for s in sets if rest <= s]
            assert len(holders) == 2
            other = next(s for s in holders if s != set(T.relevant_edges))
            assert other == set(flip(T, f)[0].relevant_edges)


def test_triangulation_canonical_form():
    ctx = GonContext(6, 2)
    a = KTriangulation(ctx, ((2, 5), (4, 1)))
    b = KTriangulation(ctx, ((1, 4), (5, 2)))
    assert a == b and a.key == ((1, 4), (2, 5))
    with pytest.raises(ValueError):
        KTriangulation(ctx, ((0, 2),))
    assert KTriangulation.from_edges(ctx, ctx.all_edges()).relevant_edges == ((0, 3), (1, 4), (2, 5))
