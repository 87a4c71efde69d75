"""Exact counting of k-triangulations.

Three independent counts are provided: a backtracking enumeration, the
Catalan determinant ``det(C_{n-i-j})`` and a dynamic program over k-fans of
nested Dyck paths.  Also here: the prefix k-crossing count used by the
induction ratio, the staircase filling bijection and the Gale evenness check
for ``n = 2k+3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .core import Edge, GonContext, KTriangulation, _cross, is_k_triangulation


class EnumerationBudgetExceeded(RuntimeError):
    pass


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError(f"Catalan index must be >= 0, got {m}")
    return comb(2 * m, m) // (m + 1)


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(size - 1):
        if a[i][i] == 0:
            for r in range(i + 1, size):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, size):
            for c in range(i + 1, size):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[-1][-1]


def catalan_matrix(n: int, k: int) -> list[list[int]]:
    """``(C_{n-i-j})`` for ``1 <= i, j <= k``; needs ``n >= 2k``."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"Catalan matrix needs k >= 1 and n >= 2k, got n={n}, k={k}")
    return [[catalan(n - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]


def catalan_determinant(ctx: GonContext) -> int:
    """Number of k-triangulations of the n-gon."""
    return bareiss_determinant(catalan_matrix(ctx.n, ctx.k))


def _crossing_masks(edges: list[Edge]) -> list[int]:
    masks = []
    for e in edges:
        m = 0
        for j, f in enumerate(edges):
            if _cross(e, f):
                m |= 1 << j
        masks.append(m)
    return masks


def _has_clique(masks: list[int], candidates: int, size: int) -> bool:
    """True iff ``candidates`` contains ``size`` pairwise-crossing edges."""
    if size == 0:
        return True
    if candidates.bit_count() < size:
        return False
    while candidates:
        low = candidates & -candidates
        j = low.bit_length() - 1
        candidates ^= low
        if _has_clique(masks, candidates & masks[j], size - 1):
            return True
    return False


def enumerate_triangulations(ctx: GonContext, limit: int | None = None) -> Iterator[KTriangulation]:
    """Every k-triangulation, in lexicographic order of relevant-edge sets.

    Edges are decided in lexicographic order; an edge is only included when it
    closes no (k+1)-crossing with the edges already chosen, and a branch is
    abandoned once too few edges remain to reach ``k(n-2k-1)``.
    """
    edges = ctx.relevant_edges()
    target = ctx.num_relevant
    masks = _crossing_masks(edges)
    k = ctx.k
    total = len(edges)
    produced = 0

    def rec(i: int, chosen: int, size: int) -> Iterator[int]:
        if size == target:
            yield chosen
            return
        if total - i < target - size:
            return
        if not _has_clique(masks, chosen & masks[i], k):
            yield from rec(i + 1, chosen | (1 << i), size + 1)
        yield from rec(i + 1, chosen, size)

    for bits in rec(0, 0, 0):
        chosen = tuple(edges[j] for j in range(total) if bits >> j & 1)
        # every size-target crossing-free set is maximal; no further check needed
        yield KTriangulation(ctx, chosen)
        produced += 1
        if limit is not None and produced >= limit:
            raise EnumerationBudgetExceeded(f"more than {limit} triangulations for {ctx}")


def count_by_backtracking(ctx: GonContext) -> int:
    return sum(1 for _ in enumerate_triangulations(ctx))


def count_dyck_k_paths(semilength: int, k: int) -> int:
    """Number of k-tuples of weakly nested Dyck paths of the given semilength.

    The state after each step is the height profile ``h_1 >= ... >= h_k >= 0``;
    each path moves up or down by one and the order must be preserved.
    """
    if semilength < 0 or k < 1:
        raise ValueError(f"need semilength >= 0 and k >= 1, got {semilength}, {k}")
    steps = 2 * semilength
    layer: dict[tuple[int, ...], int] = {(0,) * k: 1}
    for step in range(steps):
        remaining = steps - step - 1
        nxt: dict[tuple[int, ...], int] = {}
        for heights, ways in layer.items():
            for moves in _step_choices(k):
                new = tuple(h + d for h, d in zip(heights, moves))
                if new[-1] < 0 or new[0] > remaining:
                    continue
                if any(new[i] < new[i + 1] for i in range(k - 1)):
                    continue
                nxt[new] = nxt.get(new, 0) + ways
        layer = nxt
    return layer.get((0,) * k, 0)


@lru_cache(maxsize=None)
def _step_choices(k: int) -> tuple[tuple[int, ...], ...]:
    out = [()]
    for _ in range(k):
        out = [m + (d,) for m in out for d in (1, -1)]
    return tuple(out)


def prefix_crossing_count(T: KTriangulation) -> int:
    """Number of k-crossings of T made of one edge at each vertex ``0..k-1``.

    Such a crossing is ``{[i, y_i]}`` with ``k-1 < y_0 < ... < y_{k-1} <= n-1``;
    every edge of T counts, not only the relevant ones.
    """
    n, k = T.n, T.k
    es = T.edge_set()
    # ways[y] = number of valid chains over vertices 0..i ending at y
    ways = {y: 1 for y in range(k, n) if (0, y) in es}
    for i in range(1, k):
        nxt = {}
        running = 0
        for y in range(k, n):
            if (i, y) in es and running:
                nxt[y] = running
            running += ways.get(y, 0)
        ways = nxt
    return sum(ways.values())


@dataclass(frozen=True)
class Filling:
    """0/1 filling of the staircase ``{(i, j): 0 <= i < j <= n-1}``."""

    n: int
    boxes: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.boxes:
            if not 0 <= i < j < self.n:
                raise ValueError(f"box {(i, j)} outside the staircase of size {self.n}")

    def shape(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n - 1) for j in range(i + 1, self.n)]

    def is_filled(self, i: int, j: int) -> bool:
        return (i, j) in self.boxes

    def rows(self) -> list[str]:
        """Text picture: row i lists boxes j = i+1..n-1 as '#' or '.'."""
        return ["".join("#" if (i, j) in self.boxes else "." for j in range(i + 1, self.n)) for i in range(self.n - 1)]


def to_filling(T: KTriangulation) -> Filling:
    return Filling(T.n, frozenset(T.edges()))


def from_filling(f: Filling, ctx: GonContext) -> KTriangulation:
    if f.n != ctx.n:
        raise ValueError(f"filling has size {f.n}, context has n={ctx.n}")
    missing = [e for e in ctx.implicit_edges() if e not in f.boxes]
    if missing:
        raise ValueError(f"filling lacks implicit edges {missing[:3]}")
    return KTriangulation.from_edges(ctx, f.boxes)


def longest_diagonal(f: Filling) -> int:
    """Longest chain of filled boxes ``(i_1, j_1), ..., (i_l, j_l)`` with both
    coordinates strictly increasing whose rectangle fits in the staircase,
    i.e. ``i_l < j_1``.
    """
    boxes = sorted(f.boxes)
    best = 0
    # fix the first box; every later box must satisfy i < j_1
    for idx, (i1, j1) in enumerate(boxes):
        length: dict[tuple[int, int], int] = {(i1, j1): 1}
        chain = [(i1, j1)]
        for i, j in boxes[idx + 1:]:
            if not (i1 < i < j1 and j > j1):
                continue
            cur = 1 + max((length[b] for b in chain if b[0] < i and b[1] < j), default=0)
            length[(i, j)] = cur
            chain.append((i, j))
        best = max(best, max(length.values()))
    return best


def long_cycle_order(ctx: GonContext) -> list[Edge]:
    """For ``n = 2k+3``: the relevant edges (all of length k+1) in cycle order.

    Consecutive edges share a vertex; the vertex sequence is ``0, k+1, 2(k+1), ...``.
    """
    n, k = ctx.n, ctx.k
    if n != 2 * k + 3:
        raise ValueError(f"the long cycle needs n = 2k+3, got n={n}, k={k}")
    verts = [(i * (k + 1)) % n for i in range(n)]
    return [ctx.edge(verts[i], verts[(i + 1) % n]) for i in range(n)]


def gale_even(chosen: set[int], size: int) -> bool:
    """Gale's evenness condition for a subset of the cyclic sequence ``0..size-1``:
    every maximal run of non-chosen positions is flanked by an even number of
    chosen positions (cyclic version: between two non-chosen positions the
    chosen block has even length).
    """
    if len(chosen) in (0, size):
        return True
    start = next(i for i in range(size) if i not in chosen)
    run = 0
    for step in range(1, size + 1):
        i = (start + step) % size
        if i in chosen:
            run += 1
        else:
            if run % 2:
                return False
            run = 0
    return True


def gale_families(ctx: GonContext) -> tuple[set[frozenset[Edge]], set[frozenset[Edge]]]:
    """(triangulation relevant sets, Gale-even 2k-subsets of the long cycle)."""
    cycle = long_cycle_order(ctx)
    tri = {frozenset(T.relevant_edges) for T in enumerate_triangulations(ctx)}
    m = ctx.num_relevant
    gale = set()
    for subset in combinations(range(len(cycle)), m):
        if gale_even(set(subset), len(cycle)):
            gale.add(frozenset(cycle[i] for i in subset))
    return tri, gale


def gale_evenness_check(ctx: GonContext) -> bool:
    tri, gale = gale_families(ctx)
    return tri == gale


def colorable_upper_bound(ctx: GonContext) -> int:
    return comb(ctx.n, ctx.k) * 2 ** (ctx.k * (ctx.n - 2 * ctx.k - 2))


def count_all(ctx: GonContext, with_bfs: bool = True) -> dict[str, int]:
    from .flips import build_flip_graph

    out = {"determinant": catalan_determinant(ctx), "backtracking": count_by_backtracking(ctx)}
    if with_bfs:
        out["bfs"] = len(build_flip_graph(ctx))
    return out


def brute_force_count(ctx: GonContext) -> int:
    """Slow oracle: test every subset of relevant edges of the right size."""
    edges = ctx.relevant_edges()
    return sum(1 for sub in combinations(edges, ctx.num_relevant) if is_k_triangulation(ctx, sub))
