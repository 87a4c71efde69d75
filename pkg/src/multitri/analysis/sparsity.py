"""(p, q)-sparsity of the full edge graph of a k-triangulation.

For ``0 <= q < 2p`` the pebble game decides sparsity exactly.  Beyond that
range the literal count fails on a single edge (``1 > 2p - q``), so the check
follows the rigidity convention instead: only vertex sets of at least
``min_vertices`` vertices (default ``p``) are constrained.  That version is
decided by one max-closure min cut per seed set of ``min_vertices`` vertices.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import networkx as nx

from ..core import Edge, KTriangulation


def pebble_game_sparse(n: int, edges: Iterable[Edge], p: int, q: int) -> bool:
    """Lee-Streinu (p, q)-pebble game; requires ``0 <= q < 2p``."""
    if p < 1 or not 0 <= q < 2 * p:
        raise ValueError(f"the pebble game needs p >= 1 and 0 <= q < 2p, got p={p}, q={q}")
    pebbles = [p] * n
    out: list[list[int]] = [[] for _ in range(n)]

    def fetch(root: int, blocked: int) -> bool:
        # depth-first search for a free pebble along out-edges
        parent = {root: None, blocked: None}
        stack = [root]
        while stack:
            w = stack.pop()
            for x in out[w]:
                if x in parent:
                    continue
                parent[x] = w
                if pebbles[x] > 0:
                    # reverse the path root -> ... -> x
                    pebbles[x] -= 1
                    while parent[x] is not None:
                        w = parent[x]
                        out[w].remove(x)
                        out[x].append(w)
                        x = w
                    pebbles[root] += 1
                    return True
                stack.append(x)
        return False

    for u, v in edges:
        while pebbles[u] + pebbles[v] < q + 1:
            if pebbles[u] < p and fetch(u, v):
                continue
            if pebbles[v] < p and fetch(v, u):
                continue
            return False
        if pebbles[u] == 0:
            u, v = v, u
        pebbles[u] -= 1
        out[u].append(v)
    return True


def _max_excess(n: int, edges: list[Edge], p: int, seed: tuple[int, ...]) -> int:
    """max over vertex sets V' containing ``seed`` of ``|E(V')| - p|V'|``."""
    g = nx.DiGraph()
    big = len(edges) + p * n + 1
    g.add_node("s")
    g.add_node("t")
    for idx, (a, b) in enumerate(edges):
        g.add_edge("s", ("e", idx), capacity=1)
        g.add_edge(("e", idx), ("v", a), capacity=big)
        g.add_edge(("e", idx), ("v", b), capacity=big)
    for v in range(n):
        g.add_edge(("v", v), "t", capacity=p)
    for v in seed:
        g.add_edge("s", ("v", v), capacity=big)
    cut, _ = nx.minimum_cut(g, "s", "t")
    # cut = (edges left out) + p * (vertices taken) + 0 for the forced seeds
    return len(edges) - cut


def flow_sparse(n: int, edges: Iterable[Edge], p: int, q: int, min_vertices: int | None = None) -> bool:
    """Every vertex set with at least ``min_vertices`` vertices spans at most ``p|V'| - q`` edges."""
    es = list(edges)
    m = p if min_vertices is None else min_vertices
    if m > n:
        return True
    for seed in combinations(range(n), m):
        if _max_excess(n, es, p, seed) > -q:
            return False
    return True


def brute_force_sparse(n: int, edges: Iterable[Edge], p: int, q: int, min_vertices: int | None = None) -> bool:
    """Oracle over all vertex subsets with their induced edges."""
    es = list(edges)
    lo = 1 if min_vertices is None else min_vertices
    for size in range(max(lo, 1), n + 1):
        for sub in combinations(range(n), size):
            s = set(sub)
            count = sum(1 for a, b in es if a in s and b in s)
            if min_vertices is None and count == 0:
                continue
            if count > p * size - q:
                return False
    return True


def sparsity_check(T: KTriangulation, p: int, q: int, method: str = "auto", min_vertices: int | None = None) -> bool:
    """(p, q)-sparsity of all edges of T.

    ``method`` is ``"pebble"`` (only for ``q < 2p``), ``"flow"`` (vertex sets
    of at least ``min_vertices``, default p) or ``"auto"`` (pebble game when
    it applies, flow otherwise).
    """
    edges = T.edges()
    if method == "auto":
        method = "pebble" if q < 2 * p else "flow"
    if method == "pebble":
        return pebble_game_sparse(T.n, edges, p, q)
    if method == "flow":
        return flow_sparse(T.n, edges, p, q, min_vertices)
    raise ValueError(f"unknown sparsity method {method!r}")
