"""Cyclic combinatorics of the convex n-gon.

Vertices are the integers ``0..n-1`` in counterclockwise order.  An edge is a
normalized tuple ``(a, b)`` with ``a < b``; every cyclic question is answered
with arc-membership predicates so callers never deal with the wrap-around.

A :class:`KTriangulation` stores only its relevant edges (length > k); the
boundary (length = k) and irrelevant (length < k) edges belong to every
k-triangulation and are produced on demand by :meth:`KTriangulation.edges`.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

Edge = tuple[int, int]


class InvalidTriangulation(ValueError):
    """Raised when an edge set violates a k-triangulation invariant."""


@dataclass(frozen=True, order=True)
class GonContext:
    """The ambient polygon: ``n`` vertices, crossing order ``k``."""

    n: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.n < 2 * self.k + 1:
            raise ValueError(f"n must be >= 2k+1, got n={self.n}, k={self.k}")

    @property
    def num_relevant(self) -> int:
        return self.k * (self.n - 2 * self.k - 1)

    @property
    def num_edges(self) -> int:
        return self.k * (2 * self.n - 2 * self.k - 1)

    @property
    def num_stars(self) -> int:
        return self.n - 2 * self.k

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for n={self.n}")
        return v

    def edge(self, u: int, v: int) -> Edge:
        """Normalized edge ``(min, max)``; rejects loops and bad labels."""
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise ValueError(f"degenerate edge [{u},{v}]")
        return (u, v) if u < v else (v, u)

    def length(self, e: Edge) -> int:
        return cyclic_distance(self, e[0], e[1])

    def all_edges(self) -> list[Edge]:
        n = self.n
        return [(a, b) for a in range(n) for b in range(a + 1, n)]

    def edges_of_kind(self, kind: "EdgeKind") -> list[Edge]:
        return [e for e in self.all_edges() if classify_edge(self, e) is kind]

    def relevant_edges(self) -> list[Edge]:
        return self.edges_of_kind(EdgeKind.RELEVANT)

    def implicit_edges(self) -> list[Edge]:
        """Boundary and irrelevant edges, present in every k-triangulation."""
        return list(_implicit_edges(self.n, self.k))


@lru_cache(maxsize=256)
def _implicit_edges(n: int, k: int) -> tuple[Edge, ...]:
    return tuple(
        (a, b) for a in range(n) for b in range(a + 1, n) if min(b - a, n - b + a) <= k
    )


def chord_length(n: int, a: int, b: int) -> int:
    """Unchecked cyclic length, for inner loops over known-valid labels."""
    d = (b - a) % n
    return d if d <= n - d else n - d


class EdgeKind(enum.Enum):
    IRRELEVANT = "irrelevant"
    BOUNDARY = "boundary"
    RELEVANT = "relevant"


class Angle(NamedTuple):
    """``u ≺ v ≺ w`` with ``v`` the apex; the gap arc ``]w, u[`` holds no neighbour of v."""

    u: int
    v: int
    w: int


def ccw_offset(n: int, frm: int, to: int) -> int:
    """Number of counterclockwise steps from ``frm`` to ``to``."""
    return (to - frm) % n


def in_open_arc(n: int, x: int, a: int, b: int) -> bool:
    """True iff ``x`` lies strictly inside the counterclockwise arc ``]a, b[``."""
    return 0 < (x - a) % n < (b - a) % n


def in_closed_arc(n: int, x: int, a: int, b: int) -> bool:
    """True iff ``x`` lies in the counterclockwise arc ``[a, b]``."""
    return (x - a) % n <= (b - a) % n


def arc_size(n: int, a: int, b: int) -> int:
    """Cardinality of the half-open cyclic interval ``[a, b[``."""
    return (b - a) % n


def cyclic_distance(ctx: GonContext, u: int, v: int) -> int:
    ctx.check_vertex(u)
    ctx.check_vertex(v)
    d = (v - u) % ctx.n
    return min(d, ctx.n - d)


def classify_edge(ctx: GonContext, e: Edge) -> EdgeKind:
    length = cyclic_distance(ctx, e[0], e[1])
    if length == 0:
        raise ValueError(f"degenerate edge {e}")
    if length < ctx.k:
        return EdgeKind.IRRELEVANT
    if length == ctx.k:
        return EdgeKind.BOUNDARY
    return EdgeKind.RELEVANT


def _cross(e: Edge, f: Edge) -> bool:
    a, b = e
    c, d = f
    return a < c < b < d or c < a < d < b


def crosses(ctx: GonContext, e: Edge, f: Edge) -> bool:
    """True iff the open chords ``]e[`` and ``]f[`` meet inside the polygon."""
    e = ctx.edge(*e)
    f = ctx.edge(*f)
    return _cross(e, f)


def _chain_length(n: int, e: Edge, others: Iterable[Edge]) -> int:
    """Largest crossing containing ``e`` among ``e`` and ``others``.

    Edges crossing ``e = [a, b]`` have one endpoint in ``]a, b[`` and one in
    ``]b, a[``; measuring both from ``a`` and ``b`` respectively, two such edges
    cross iff both coordinates strictly increase.  The answer is one plus the
    longest strictly increasing chain.
    """
    a, b = e
    points = []
    for f in others:
        if not _cross(e, f):
            continue
        x, y = f
        if a < x < b:
            inner, outer = x, y
        else:
            inner, outer = y, x
        points.append(((inner - a) % n, (outer - b) % n))
    if not points:
        return 1
    # equal first coordinates share an endpoint; descending second breaks ties
    points.sort(key=lambda pq: (pq[0], -pq[1]))
    tails: list[int] = []
    for _, q in points:
        i = bisect_left(tails, q)
        if i == len(tails):
            tails.append(q)
        else:
            tails[i] = q
    return 1 + len(tails)


def max_crossing_size(ctx: GonContext, edges: Iterable[Edge]) -> int:
    """Size of the largest set of mutually crossing edges (0 for no edges)."""
    es = sorted({ctx.edge(*e) for e in edges})
    best = 0
    for e in es:
        best = max(best, _chain_length(ctx.n, e, es))
    return best


def has_l_crossing(ctx: GonContext, edges: Iterable[Edge], l: int) -> bool:
    """True iff some ``l`` of the edges mutually cross; stops at the first witness."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    es = sorted({ctx.edge(*e) for e in edges})
    if len(es) < l:
        return False
    return any(_chain_length(ctx.n, e, es) >= l for e in es)


def neighbour_orders(ctx: GonContext, edges: Iterable[Edge]) -> list[list[int]]:
    """For each vertex, its neighbours sorted counterclockwise starting after it."""
    n = ctx.n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    for v in range(n):
        nbrs[v].sort(key=lambda t, v=v: (t - v) % n)
    return nbrs


def angles_of(ctx: GonContext, edges: Iterable[Edge]) -> list[Angle]:
    """Every angle of an edge set, grouped by apex in increasing order."""
    es = {ctx.edge(*e) for e in edges}
    out = []
    for v, order in enumerate(neighbour_orders(ctx, es)):
        for w, u in zip(order, order[1:]):
            out.append(Angle(u, v, w))
    return out


@dataclass(frozen=True)
class KTriangulation:
    """A k-triangulation identified by its sorted relevant edges.

    The constructor normalizes and checks that every edge is relevant; it does
    not check (k+1)-crossing-freeness (see :func:`is_k_triangulation`).
    """

    ctx: GonContext
    relevant_edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        es = sorted({self.ctx.edge(*e) for e in self.relevant_edges})
        for e in es:
            if classify_edge(self.ctx, e) is not EdgeKind.RELEVANT:
                raise ValueError(f"edge {list(e)} is not {self.ctx.k}-relevant for n={self.ctx.n}")
        object.__setattr__(self, "relevant_edges", tuple(es))

    @classmethod
    def from_edges(cls, ctx: GonContext, edges: Iterable[Edge]) -> "KTriangulation":
        """Build from any edge list, dropping boundary and irrelevant edges."""
        rel = [ctx.edge(*e) for e in edges]
        return cls(ctx, tuple(e for e in rel if classify_edge(ctx, e) is EdgeKind.RELEVANT))

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def k(self) -> int:
        return self.ctx.k

    @property
    def key(self) -> tuple[Edge, ...]:
        return self.relevant_edges

    def edges(self) -> list[Edge]:
        """All edges: implicit boundary/irrelevant ones plus the relevant ones."""
        return sorted(self.ctx.implicit_edges() + list(self.relevant_edges))

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def __contains__(self, e) -> bool:
        e = self.ctx.edge(*e)
        return self.ctx.length(e) <= self.ctx.k or e in self.relevant_edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.relevant_edges)

    def __len__(self) -> int:
        return len(self.relevant_edges)

    def replace(self, remove: Edge, insert: Edge) -> "KTriangulation":
        es = set(self.relevant_edges)
        es.discard(self.ctx.edge(*remove))
        es.add(self.ctx.edge(*insert))
        return KTriangulation(self.ctx, tuple(es))


def is_k_triangulation(ctx: GonContext, relevant_edges: Iterable[Edge], method: str = "count") -> bool:
    """Decide whether ``relevant_edges`` is the relevant part of a k-triangulation.

    ``method="count"`` uses the cardinality characterization; ``"maximal"``
    checks maximality directly by trying every absent relevant edge.
    """
    es = {ctx.edge(*e) for e in relevant_edges}
    for e in es:
        if classify_edge(ctx, e) is not EdgeKind.RELEVANT:
            raise ValueError(f"edge {list(e)} is not {ctx.k}-relevant")
    if has_l_crossing(ctx, es, ctx.k + 1):
        return False
    if method == "count":
        return len(es) == ctx.num_relevant
    if method == "maximal":
        for f in ctx.relevant_edges():
            if f in es:
                continue
            if _chain_length(ctx.n, f, es) < ctx.k + 1:
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


def check_triangulation(T: KTriangulation) -> KTriangulation:
    if not is_k_triangulation(T.ctx, T.relevant_edges):
        raise InvalidTriangulation(f"not a {T.k}-triangulation of the {T.n}-gon: {list(T.relevant_edges)}")
    return T
