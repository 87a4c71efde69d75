from __future__ import annotations

from itertools import combinations, product
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from multitri.core import GonContext, KTriangulation, max_crossing_size
from multitri.enumeration import (
    EnumerationBudgetExceeded,
    Filling,
    bareiss_determinant,
    brute_force_count,
    catalan,
    catalan_determinant,
    catalan_matrix,
    colorable_upper_bound,
    count_all,
    count_by_backtracking,
    count_dyck_k_paths,
    enumerate_triangulations,
    from_filling,
    gale_even,
    gale_evenness_check,
    gale_families,
    long_cycle_order,
    longest_diagonal,
    prefix_crossing_count,
    to_filling,
)
from multitri.structure import is_k_colorable

from conftest import all_triangulations, brute_triangulations, chords_cross, triangulations


def sympy_count(n, k):
    return int(sympy.Matrix(k, k, lambda i, j: sympy.catalan(n - (i + 1) - (j + 1))).det())


@pytest.mark.parametrize("m,want", [(0, 1), (1, 1), (4, 14), (6, 132), (30, 3814986502092304)])
def test_catalan(m, want):
    assert catalan(m) == want


def test_catalan_rejects_negative():
    with pytest.raises(ValueError):
        catalan(-1)


@pytest.mark.parametrize("n,k,want", [(5, 2, 1), (6, 2, 3), (8, 2, 84), (9, 3, 30), (7, 2, 14)])
def test_catalan_determinant_examples(n, k, want):
    assert catalan_determinant(GonContext(n, k)) == want


def test_catalan_matrix_entries():
    assert catalan_matrix(8, 2) == [[132, 42], [42, 14]]


@given(st.integers(1, 5), st.integers(0, 25))
@settings(max_examples=60, deadline=None)
def test_determinant_matches_sympy(k, extra):
    n = 2 * k + 1 + extra
    assert catalan_determinant(GonContext(n, k)) == sympy_count(n, k)


@given(st.lists(st.lists(st.integers(-50, 50), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=80, deadline=None)
def test_bareiss_matches_sympy(rows):
    assert bareiss_determinant(rows) == int(sympy.Matrix(rows).det())


def test_bareiss_singular_and_pivoting():
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([]) == 1


def test_hexagon_enumeration():
    got = [T.relevant_edges for T in enumerate_triangulations(GonContext(6, 2))]
    assert sorted(got) == sorted([((1, 4), (2, 5)), ((0, 3), (2, 5)), ((0, 3), (1, 4))])
    assert got == sorted(got)
    assert [T.relevant_edges for T in enumerate_triangulations(GonContext(5, 2))] == [()]


@pytest.mark.parametrize("n,k", [(6, 2), (7, 2), (8, 2), (9, 3), (7, 1), (8, 1), (9, 2)])
def test_enumeration_matches_subset_search(n, k):
    got = {frozenset(T.relevant_edges) for T in enumerate_triangulations(GonContext(n, k))}
    assert got == set(brute_triangulations(n, k))
    assert brute_force_count(GonContext(n, k)) == len(got)


def test_enumeration_budget():
    with pytest.raises(EnumerationBudgetExceeded):
        list(enumerate_triangulations(GonContext(8, 2), limit=10))


@pytest.mark.parametrize("n,k", [(7, 2), (8, 2), (9, 3), (10, 1), (8, 3)])
def test_three_way_count(n, k):
    counts = count_all(GonContext(n, k))
    assert len(set(counts.values())) == 1
    assert counts["determinant"] == sympy_count(n, k)


def test_count_by_backtracking_11_3():
    assert count_by_backtracking(GonContext(11, 3)) == sympy_count(11, 3)


def dyck_paths(semilength):
    """All Dyck paths as height sequences."""
    out = []
    for steps in product((1, -1), repeat=2 * semilength):
        h, hs = 0, [0]
        for s in steps:
            h += s
            if h < 0:
                break
            hs.append(h)
        else:
            if h == 0:
                out.append(tuple(hs))
    return out


def brute_nested_dyck(semilength, k):
    paths = dyck_paths(semilength)
    below = [[all(x <= y for x, y in zip(p, q)) for q in paths] for p in paths]
    # chains p_k <= ... <= p_1 counted by repeated matrix-vector products
    ways = [1] * len(paths)
    for _ in range(k - 1):
        ways = [sum(ways[j] for j in range(len(paths)) if below[j][i]) for i in range(len(paths))]
    return sum(ways)


@pytest.mark.parametrize("semilength,k", [(s, k) for s in range(0, 7) for k in (1, 2, 3)])
def test_dyck_dp_matches_brute_force(semilength, k):
    assert count_dyck_k_paths(semilength, k) == brute_nested_dyck(semilength, k)


@pytest.mark.parametrize("semilength,k,want", [(1, 2, 1), (2, 2, 3), (4, 2, 84)])
def test_dyck_examples(semilength, k, want):
    assert count_dyck_k_paths(semilength, k) == want


@pytest.mark.parametrize("semilength", range(0, 12))
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dyck_matches_determinant(semilength, k):
    assert count_dyck_k_paths(semilength, k) == sympy_count(semilength + 2 * k, k)


def test_prefix_crossing_examples():
    assert prefix_crossing_count(KTriangulation(GonContext(5, 2), ())) == 3
    fan = KTriangulation(GonContext(6, 1), ((0, 2), (0, 3), (0, 4)))
    assert prefix_crossing_count(fan) == 5
    assert sorted(prefix_crossing_count(T) for T in all_triangulations(6, 2)) == [4, 4, 6]


def brute_prefix(T):
    n, k = T.n, T.k
    es = T.edges()
    count = 0
    for pick in product(*[[e for e in es if i in e and max(e) >= k] for i in range(k)]):
        if all(chords_cross(a, b) for a, b in combinations(pick, 2)):
            count += 1
    return count


@given(triangulations(max_n=10))
@settings(max_examples=60, deadline=None)
def test_prefix_count_matches_brute_force(T):
    assert prefix_crossing_count(T) == brute_prefix(T)


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (7, 2), (8, 2), (7, 3), (8, 3), (5, 1), (8, 1), (9, 1)])
def test_prefix_counts_sum_to_next_count(n, k):
    total = sum(prefix_crossing_count(T) for T in all_triangulations(n, k))
    assert total == catalan_determinant(GonContext(n + 1, k))


def test_filling_examples():
    K5 = KTriangulation(GonContext(5, 2), ())
    f = to_filling(K5)
    assert len(f.boxes) == 10 == len(f.shape())
    assert longest_diagonal(f) == 2
    assert f.rows()[0] == "####"
    with pytest.raises(ValueError):
        Filling(4, frozenset({(2, 1)}))
    with pytest.raises(ValueError):
        from_filling(Filling(8, frozenset()), GonContext(8, 2))


@pytest.mark.parametrize("n,k", [(8, 2), (9, 3), (7, 1)])
def test_filling_round_trip(n, k):
    ctx = GonContext(n, k)
    for T in all_triangulations(n, k):
        f = to_filling(T)
        assert from_filling(f, ctx) == T
        assert longest_diagonal(f) == max_crossing_size(ctx, T.edges()) == k


@given(st.integers(4, 9), st.data())
@settings(max_examples=80, deadline=None)
def test_longest_diagonal_equals_max_crossing(n, data):
    ctx = GonContext(n, 1)
    es = data.draw(st.lists(st.sampled_from(ctx.all_edges()), unique=True, max_size=12))
    assert longest_diagonal(Filling(n, frozenset(es))) == max_crossing_size(ctx, es)


def test_long_cycle():
    assert long_cycle_order(GonContext(7, 2)) == [(0, 3), (3, 6), (2, 6), (2, 5), (1, 5), (1, 4), (0, 4)]
    with pytest.raises(ValueError):
        long_cycle_order(GonContext(8, 2))


def linear_gale(chosen, size):
    """Textbook form: between any two unchosen positions an even number are chosen."""
    free = [i for i in range(size) if i not in chosen]
    return all(sum(1 for t in range(a + 1, b) if t in chosen) % 2 == 0 for a, b in combinations(free, 2))


@pytest.mark.parametrize("size", [5, 7, 9])
def test_cyclic_gale_matches_linear_gale_in_even_dimension(size):
    for d in range(0, size, 2):
        for sub in combinations(range(size), d):
            assert gale_even(set(sub), size) == linear_gale(set(sub), size)


@pytest.mark.parametrize("n,k,members", [(5, 1, 5), (7, 2, 14), (9, 3, 30)])
def test_gale_evenness(n, k, members):
    ctx = GonContext(n, k)
    tri, gale = gale_families(ctx)
    assert tri == gale and len(tri) == members
    assert gale_evenness_check(ctx)
    # facet count of the cyclic polytope C(2k+3, 2k)
    facets = sum(1 for sub in combinations(range(n), 2 * k) if linear_gale(set(sub), n))
    assert facets == members


def test_colorable_upper_bound():
    ctx = GonContext(8, 2)
    colorable = sum(1 for T in all_triangulations(8, 2) if is_k_colorable(T))
    assert colorable == 68 <= colorable_upper_bound(ctx) == comb(8, 2) * 2 ** 4
