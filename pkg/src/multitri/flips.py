"""Flips between k-triangulations and the flip graph G(n, k).

Flipping a relevant edge ``f`` of ``T`` replaces it by the common bisector of
the two k-stars that contain ``f``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .core import Edge, EdgeKind, GonContext, KTriangulation, classify_edge
from .stars import common_bisector, relevant_star_pairs, stars_containing

DIAMETER_NODE_LIMIT = 100_000


class FlipGraphBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Flip:
    removed: Edge
    inserted: Edge
    source: tuple[Edge, ...] = ()

    @property
    def is_slope_decreasing(self) -> bool:
        a, b = self.inserted
        c, d = self.removed
        return a < c < b < d

    @property
    def is_slope_increasing(self) -> bool:
        a, b = self.inserted
        c, d = self.removed
        return c < a < d < b

    def to_dict(self) -> dict:
        return {"removed": list(self.removed), "inserted": list(self.inserted)}


def flip(T: KTriangulation, f: Edge) -> tuple[KTriangulation, Edge]:
    """Flip the relevant edge ``f``; returns the new triangulation and the inserted edge."""
    f = T.ctx.edge(*f)
    R, S = stars_containing(T, f)
    e = common_bisector(R, S)
    return T.replace(f, e), e


def all_flips(T: KTriangulation) -> list[Flip]:
    """Every flip of T, one per relevant edge, using a single star extraction."""
    pairs = relevant_star_pairs(T)
    out = []
    for f in T.relevant_edges:
        R, S = pairs[f]
        out.append(Flip(f, common_bisector(R, S), T.key))
    return out


def t_min(ctx: GonContext) -> KTriangulation:
    """The fan-like triangulation with every relevant edge incident to ``0..k-1``."""
    n, k = ctx.n, ctx.k
    es = set()
    for i in range(k):
        for step in range(k, n - k + 1):
            e = ctx.edge(i, (i + step) % n)
            if classify_edge(ctx, e) is EdgeKind.RELEVANT:
                es.add(e)
    return KTriangulation(ctx, tuple(es))


def reflect(T: KTriangulation) -> KTriangulation:
    """Image under ``v -> n-1-v``."""
    n = T.n
    return KTriangulation(T.ctx, tuple((n - 1 - a, n - 1 - b) for a, b in T.relevant_edges))


def rotate(T: KTriangulation, r: int = 1) -> KTriangulation:
    n = T.n
    return KTriangulation(T.ctx, tuple(((a + r) % n, (b + r) % n) for a, b in T.relevant_edges))


def t_max(ctx: GonContext) -> KTriangulation:
    return reflect(t_min(ctx))


def total_slope(T: KTriangulation, include_implicit: bool = False) -> int:
    """Sum of ``u + v`` over the edges (relevant ones unless asked otherwise)."""
    es = T.edges() if include_implicit else T.relevant_edges
    return sum(a + b for a, b in es)


def descend_to_min(T: KTriangulation) -> list[Flip]:
    """Greedy flips toward ``t_min``; each one inserts an edge of ``t_min``."""
    target = set(t_min(T.ctx).relevant_edges)
    path = []
    bound = T.ctx.num_relevant
    while set(T.relevant_edges) != target:
        best = None
        for fl in all_flips(T):
            if fl.removed in target or fl.inserted not in target:
                continue
            if best is None or fl.inserted < best.inserted:
                best = fl
        if best is None:
            raise RuntimeError(f"no flip toward t_min from {list(T.relevant_edges)}")
        T = T.replace(best.removed, best.inserted)
        path.append(best)
        if len(path) > bound:
            raise RuntimeError("descent exceeded k(n-2k-1) flips")
    return path


def zigzag(ctx: GonContext, rotation: int = 0) -> list[Edge]:
    """The k-zigzag rotated by ``rotation``: n-2k-1 relevant edges, no 2-crossing."""
    n, k = ctx.n, ctx.k
    if n < 4 * k:
        raise ValueError(f"zigzags need n >= 4k, got n={n}, k={k}")
    es = []
    for q in range(1, (n - 2 * k) // 2 + 1):
        es.append(((q - 1) % n, (-q - k) % n))
    for q in range(1, (n - 1 - 2 * k) // 2 + 1):
        es.append((q % n, (-q - k) % n))
    return sorted(ctx.edge((a + rotation) % n, (b + rotation) % n) for a, b in es)


def zigzag_union(ctx: GonContext, rotations) -> KTriangulation:
    es = set()
    for r in rotations:
        es.update(zigzag(ctx, r))
    return KTriangulation(ctx, tuple(es))


@dataclass
class FlipGraph:
    ctx: GonContext
    nodes: list[KTriangulation] = field(default_factory=list)
    adjacency: list[list[tuple[int, Flip]]] = field(default_factory=list)
    index: dict[tuple[Edge, ...], int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.nodes)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbours(self, i: int) -> list[int]:
        return [j for j, _ in self.adjacency[i]]

    def bfs_distances(self, source: int) -> list[int]:
        dist = [-1] * len(self.nodes)
        dist[source] = 0
        queue = deque([source])
        while queue:
            i = queue.popleft()
            for j, _ in self.adjacency[i]:
                if dist[j] < 0:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist

    def is_connected(self) -> bool:
        return bool(self.nodes) and min(self.bfs_distances(0)) >= 0

    def iter_jsonl(self) -> Iterator[str]:
        for i, adj in enumerate(self.adjacency):
            yield json.dumps(
                {
                    "node": i,
                    "relevant_edges": [list(e) for e in self.nodes[i].relevant_edges],
                    "edges": [{"to": j, **fl.to_dict()} for j, fl in adj],
                },
                separators=(",", ":"),
            )

    def to_dot(self) -> str:
        lines = [f'graph "G_{self.ctx.n}_{self.ctx.k}" {{']
        for i, T in enumerate(self.nodes):
            label = " ".join(f"{a}-{b}" for a, b in T.relevant_edges)
            lines.append(f'  {i} [label="{label}"];')
        for i, adj in enumerate(self.adjacency):
            for j, fl in adj:
                if i < j:
                    lines.append(f'  {i} -- {j} [label="{fl.removed[0]}-{fl.removed[1]}/{fl.inserted[0]}-{fl.inserted[1]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_flip_graph(ctx: GonContext, max_nodes: int = 1_000_000) -> FlipGraph:
    """Breadth-first search from ``t_min``; node ids follow discovery order."""
    g = FlipGraph(ctx)
    start = t_min(ctx)
    g.nodes.append(start)
    g.index[start.key] = 0
    head = 0
    while head < len(g.nodes):
        T = g.nodes[head]
        adj = []
        for fl in all_flips(T):
            key = tuple(sorted((set(T.relevant_edges) - {fl.removed}) | {fl.inserted}))
            j = g.index.get(key)
            if j is None:
                if len(g.nodes) >= max_nodes:
                    raise FlipGraphBudgetExceeded(f"more than {max_nodes} triangulations for {ctx}")
                j = len(g.nodes)
                g.index[key] = j
                g.nodes.append(KTriangulation(ctx, key))
            adj.append((j, fl))
        g.adjacency.append(adj)
        head += 1
    return g


def diameter(g: FlipGraph) -> int:
    """Exact diameter by a BFS from every node."""
    if len(g) > DIAMETER_NODE_LIMIT:
        raise FlipGraphBudgetExceeded(f"{len(g)} nodes exceeds the exact-diameter limit {DIAMETER_NODE_LIMIT}")
    best = 0
    for i in range(len(g)):
        dist = g.bfs_distances(i)
        if min(dist) < 0:
            raise ValueError("flip graph is disconnected")
        best = max(best, max(dist))
    return best


def diameter_bounds(ctx: GonContext) -> dict:
    """Known bounds: upper 2k(n-2k-1); lower k(n-2k-1) only when n >= 4k."""
    m = ctx.num_relevant
    out = {"upper": 2 * m, "lower": m if ctx.n >= 4 * ctx.k else None}
    if ctx.n > 8 * ctx.k ** 3 + 4 * ctx.k ** 2:
        out["upper_large_n"] = 2 * ctx.k * (ctx.n - 4 * ctx.k - 1)
    return out
