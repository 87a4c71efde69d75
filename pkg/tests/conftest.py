from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import strategies as st

from multitri.core import GonContext, KTriangulation
from multitri.enumeration import enumerate_triangulations
from multitri.flips import flip, t_min

# An octagon 2-triangulation with five ears, one internal star and the
# crossing {[1,4],[2,7]}; the lexicographically first such witness.
OCTAGON_5_EARS = ((0, 4), (0, 5), (1, 4), (2, 5), (2, 7), (4, 7))


def chords_cross(e, f) -> bool:
    """Independent crossing test: exactly one endpoint of f strictly between e's endpoints."""
    a, b = sorted(e)
    c, d = sorted(f)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def brute_max_crossing(edges) -> int:
    es = list(edges)
    best = 0
    for size in range(1, len(es) + 1):
        found = any(
            all(chords_cross(x, y) for x, y in combinations(sub, 2)) for sub in combinations(es, size)
        )
        if not found:
            break
        best = size
    return best


def cyc_len(n, a, b) -> int:
    d = abs(a - b)
    return min(d, n - d)


@lru_cache(maxsize=None)
def brute_triangulations(n: int, k: int) -> frozenset:
    """Relevant-edge sets of all k-triangulations by exhaustive subset search."""
    rel = [(a, b) for a in range(n) for b in range(a + 1, n) if cyc_len(n, a, b) > k]
    m = k * (n - 2 * k - 1)
    out = set()
    for sub in combinations(rel, m):
        if not any(
            all(chords_cross(x, y) for x, y in combinations(c, 2)) for c in combinations(sub, k + 1)
        ):
            out.add(frozenset(sub))
    return frozenset(out)


@lru_cache(maxsize=None)
def all_triangulations(n: int, k: int) -> tuple[KTriangulation, ...]:
    return tuple(enumerate_triangulations(GonContext(n, k)))


def random_walk(ctx: GonContext, steps: int, seed: int) -> KTriangulation:
    rng = random.Random(seed)
    T = t_min(ctx)
    for _ in range(steps):
        if not T.relevant_edges:
            break
        T, _ = flip(T, rng.choice(T.relevant_edges))
    return T


@st.composite
def triangulations(draw, max_n: int = 11, max_k: int = 3):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(2 * k + 1, max(max_n, 2 * k + 1)))
    seed = draw(st.integers(0, 10**6))
    steps = draw(st.integers(0, 25))
    return random_walk(GonContext(n, k), steps, seed)


@pytest.fixture
def octagon():
    return KTriangulation(GonContext(8, 2), OCTAGON_5_EARS)
