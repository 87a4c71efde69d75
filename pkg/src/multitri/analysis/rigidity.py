"""Generic rigidity rank over a large prime field."""

from __future__ import annotations

import random
from math import comb

from ..core import Edge, KTriangulation

PRIME = 2**31 - 1


def rank_mod_p(rows: list[list[int]], prime: int = PRIME) -> int:
    """Row rank of an integer matrix modulo ``prime``."""
    a = [[x % prime for x in row] for row in rows]
    if not a:
        return 0
    cols = len(a[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][c], prime - 2, prime)
        a[rank] = [x * inv % prime for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % prime for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == len(a):
            break
    return rank


def rigidity_matrix(n: int, edges: list[Edge], points: list[list[int]]) -> list[list[int]]:
    """Row of ``[u, v]``: ``p_u - p_v`` in u's block, ``p_v - p_u`` in v's block."""
    dim = len(points[0])
    rows = []
    for u, v in edges:
        row = [0] * (dim * n)
        for c in range(dim):
            d = points[u][c] - points[v][c]
            row[dim * u + c] = d
            row[dim * v + c] = -d
        rows.append(row)
    return rows


def rigidity_target(n: int, dim: int) -> int:
    """Rank of a generically rigid framework on n >= dim vertices."""
    return dim * n - comb(dim + 1, 2)


def rigidity_rank(T: KTriangulation, dim: int | None = None, trials: int = 5, seed: int = 0, prime: int = PRIME) -> int:
    """Maximum rank over ``trials`` random placements in ``F_prime^dim`` (dim defaults to 2k)."""
    dim = 2 * T.k if dim is None else dim
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    rng = random.Random(seed)
    edges = T.edges()
    best = 0
    for _ in range(trials):
        points = [[rng.randrange(prime) for _ in range(dim)] for _ in range(T.n)]
        best = max(best, rank_mod_p(rigidity_matrix(T.n, edges, points), prime))
    return best
