"""k-stars of a k-triangulation.

A k-star is the star polygon {(2k+1)/k}: vertices ``s_0 ≺ … ≺ s_2k`` in circle
order joined by the edges ``[s_j, s_{j+k}]``.  Every k-relevant angle of a
k-triangulation lies in exactly one k-star, and the star can be traced from
any of its angles: after consecutive star vertices ``(a, b)`` comes the
neighbour of ``b`` immediately clockwise of ``a``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import (
    Angle,
    Edge,
    EdgeKind,
    GonContext,
    InvalidTriangulation,
    KTriangulation,
    chord_length,
    classify_edge,
    in_closed_arc,
    in_open_arc,
    neighbour_orders,
)


class StarWalkError(InvalidTriangulation):
    """An angle walk failed to close into a k-star."""


class Side(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def flipped(self) -> "Side":
        return Side.NEGATIVE if self is Side.POSITIVE else Side.POSITIVE


@dataclass(frozen=True)
class KStar:
    ctx: GonContext
    circle_order: tuple[int, ...]

    def __post_init__(self):
        k = self.ctx.k
        s = tuple(sorted(set(self.circle_order)))
        if len(s) != 2 * k + 1 or len(self.circle_order) != 2 * k + 1:
            raise ValueError(f"a {k}-star needs {2 * k + 1} distinct vertices, got {self.circle_order}")
        for v in s:
            self.ctx.check_vertex(v)
        object.__setattr__(self, "circle_order", s)
        n = self.ctx.n
        for a, b in self.edges():
            if chord_length(n, a, b) < k:
                raise ValueError(f"star edge {list(e)} shorter than k={k}")

    @property
    def key(self) -> tuple[int, ...]:
        return self.circle_order

    @property
    def size(self) -> int:
        return len(self.circle_order)

    def vertex(self, j: int) -> int:
        return self.circle_order[j % self.size]

    def star_order(self, start: int | None = None) -> list[int]:
        """Vertices in the order tracing the star, ``r_i = s_{ik}``.

        ``start`` rotates the sequence so that it begins at that vertex.
        """
        m, k = self.size, self.ctx.k
        r = [self.circle_order[(i * k) % m] for i in range(m)]
        if start is not None:
            i = r.index(start)
            r = r[i:] + r[:i]
        return r

    def edges(self) -> list[Edge]:
        m, k = self.size, self.ctx.k
        s = self.circle_order
        out = []
        for j in range(m):
            a, b = s[j], s[(j + k) % m]
            out.append((a, b) if a < b else (b, a))
        return sorted(out)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def star_cycle(self) -> list[tuple[int, int]]:
        """Oriented edges ``(r_i, r_{i+1})`` around the star."""
        r = self.star_order()
        return [(r[i], r[(i + 1) % len(r)]) for i in range(len(r))]

    @cached_property
    def _gaps(self) -> dict[int, tuple[int, int]]:
        m, k = self.size, self.ctx.k
        s = self.circle_order
        return {s[j]: (s[(j + k) % m], s[(j + k + 1) % m]) for j in range(m)}

    def angle_at(self, v: int) -> Angle:
        m, k = self.size, self.ctx.k
        j = self.circle_order.index(v)
        return Angle(self.vertex(j - k), v, self.vertex(j + k))

    def angles(self) -> list[Angle]:
        return [self.angle_at(v) for v in self.circle_order]

    def bisects(self, v: int, t: int) -> bool:
        """True iff ``[v, t]`` bisects the angle of this star at ``v``."""
        gap = self._gaps.get(v)
        return gap is not None and in_open_arc(self.ctx.n, t, gap[0], gap[1])

    def count_in_closed(self, a: int, b: int) -> int:
        n = self.ctx.n
        return sum(1 for v in self.circle_order if in_closed_arc(n, v, a, b))

    def count_in_open(self, a: int, b: int) -> int:
        n = self.ctx.n
        return sum(1 for v in self.circle_order if in_open_arc(n, v, a, b))

    def boundary_edges(self) -> list[Edge]:
        return [e for e in self.edges() if classify_edge(self.ctx, e) is EdgeKind.BOUNDARY]

    def is_external(self) -> bool:
        return bool(self.boundary_edges())

    def to_dict(self) -> dict:
        return {"vertices": list(self.circle_order)}


def _positions(nbrs: list[list[int]]) -> list[dict[int, int]]:
    return [{t: i for i, t in enumerate(order)} for order in nbrs]


def _walk(ctx: GonContext, nbrs, pos, u: int, v: int, w: int) -> list[int]:
    """Trace the star through the angle ``(u, v, w)``; returns its star order."""
    k = ctx.k
    m = 2 * k + 1
    r = [u, v, w]
    while len(r) < m + 2:
        a, b = r[-2], r[-1]
        i = pos[b].get(a)
        if i is None or i == 0:
            raise StarWalkError(f"no angle at {b} after {a} while tracing from {(u, v, w)}")
        r.append(nbrs[b][i - 1])
    if (r[m], r[m + 1]) != (u, v):
        raise StarWalkError(f"walk from angle {(u, v, w)} did not close after {m} steps: {r}")
    body = r[:m]
    if len(set(body)) != m:
        raise StarWalkError(f"walk from angle {(u, v, w)} revisits a vertex: {body}")
    n = ctx.n
    for a, b in zip(body, body[1:] + body[:1]):
        if chord_length(n, a, b) < k:
            raise StarWalkError(f"walk from angle {(u, v, w)} used short edge [{a},{b}]")
    # consecutive star vertices sit k apart in circle order
    s = sorted(body)
    j0 = s.index(body[0])
    if any(body[i] != s[(j0 + i * k) % m] for i in range(m)):
        raise StarWalkError(f"walk from angle {(u, v, w)} is not a star polygon: {body}")
    return body


def relevant_angles(T: KTriangulation) -> list[Angle]:
    """Angles of T whose two sides both have length >= k."""
    ctx = T.ctx
    out = []
    for v, order in enumerate(neighbour_orders(ctx, T.edges())):
        for w, u in zip(order, order[1:]):
            if ctx.length((v, w)) >= ctx.k and ctx.length((v, u)) >= ctx.k:
                out.append(Angle(u, v, w))
    return out


def extract_stars(T: KTriangulation) -> list[KStar]:
    """All k-stars of ``T`` sorted by vertex set, traced by the angle walk."""
    ctx = T.ctx
    n, k = ctx.n, ctx.k
    nbrs = neighbour_orders(ctx, T.edges())
    pos = _positions(nbrs)
    consumed: set[tuple[int, int]] = set()
    stars: dict[tuple[int, ...], KStar] = {}
    for v in range(ctx.n):
        order = nbrs[v]
        for w, u in zip(order, order[1:]):
            if (u, v) in consumed:
                continue
            if chord_length(n, v, w) < k or chord_length(n, v, u) < k:
                continue
            body = _walk(ctx, nbrs, pos, u, v, w)
            m = len(body)
            for i in range(m):
                key = (body[i], body[(i + 1) % m])
                if key in consumed:
                    raise StarWalkError(f"angle at {key[1]} shared by two stars")
                consumed.add(key)
            star = KStar(ctx, tuple(body))
            stars[star.key] = star
    return [stars[key] for key in sorted(stars)]


def stars_containing(T: KTriangulation, f: Edge, _nbrs=None) -> tuple[KStar, KStar]:
    """The two stars sharing the relevant edge ``f``, found by two local walks."""
    ctx = T.ctx
    f = ctx.edge(*f)
    if classify_edge(ctx, f) is not EdgeKind.RELEVANT or f not in T:
        raise ValueError(f"{list(f)} is not a relevant edge of T")
    nbrs = _nbrs if _nbrs is not None else neighbour_orders(ctx, T.edges())
    pos = _positions(nbrs)
    a, b = f
    i = pos[a][b]
    one = _walk(ctx, nbrs, pos, b, a, nbrs[a][i - 1])
    two = _walk(ctx, nbrs, pos, nbrs[a][i + 1], a, b)
    return KStar(ctx, tuple(one)), KStar(ctx, tuple(two))


def star_edges(S: KStar) -> list[Edge]:
    return S.edges()


def star_side(S: KStar, frm: int, to: int) -> Side:
    """Side of the oriented edge ``frm -> to`` on which ``S`` lies.

    Positive when ``S`` has fewer vertices in ``⟦frm, to⟧`` than in ``⟦to, frm⟧``.
    """
    ctx = S.ctx
    ctx.edge(frm, to)
    a = S.count_in_closed(frm, to)
    b = S.count_in_closed(to, frm)
    if a == b:
        raise InvalidTriangulation(f"star {S.circle_order} splits evenly across [{frm},{to}]")
    return Side.POSITIVE if a < b else Side.NEGATIVE


def common_bisector_endpoints(R: KStar, S: KStar) -> tuple[int, int]:
    """``(r, s)`` with ``r`` in R and ``s`` in S such that ``[r, s]`` bisects an angle of each."""
    if R.key == S.key:
        raise ValueError("common bisector needs two distinct stars")
    found = [
        (r, s)
        for r in R.circle_order
        for s in S.circle_order
        if R.bisects(r, s) and S.bisects(s, r)
    ]
    if len(found) != 1:
        raise InvalidTriangulation(
            f"stars {R.circle_order} and {S.circle_order} have {len(found)} common bisectors"
        )
    return found[0]


def common_bisector(R: KStar, S: KStar) -> Edge:
    r, s = common_bisector_endpoints(R, S)
    return R.ctx.edge(r, s)


def relevant_star_pairs(T: KTriangulation, stars: Iterable[KStar] | None = None) -> dict[Edge, tuple[KStar, KStar]]:
    """Map each relevant edge to its two stars, without the full incidence audit."""
    n, k = T.n, T.k
    stars = extract_stars(T) if stars is None else stars
    owners: dict[Edge, list[KStar]] = {e: [] for e in T.relevant_edges}
    for S in stars:
        for a, b in S.edges():
            if chord_length(n, a, b) > k:
                owners[(a, b)].append(S)
    out = {}
    for e, pair in owners.items():
        if len(pair) != 2:
            raise InvalidTriangulation(f"relevant edge {list(e)} lies in {len(pair)} stars")
        out[e] = (pair[0], pair[1])
    return out


def star_incidences(T: KTriangulation, stars: Iterable[KStar] | None = None) -> dict[Edge, list[KStar]]:
    """Map every edge of T to the stars containing it, checking the 2/1/0 law."""
    ctx = T.ctx
    stars = extract_stars(T) if stars is None else list(stars)
    inc: dict[Edge, list[KStar]] = {e: [] for e in T.edges()}
    for S in stars:
        for e in S.edges():
            if e not in inc:
                raise InvalidTriangulation(f"star edge {list(e)} is not in T")
            inc[e].append(S)
    expected = {EdgeKind.RELEVANT: 2, EdgeKind.BOUNDARY: 1, EdgeKind.IRRELEVANT: 0}
    for e, owners in inc.items():
        kind = classify_edge(ctx, e)
        if len(owners) != expected[kind]:
            raise InvalidTriangulation(f"{kind.value} edge {list(e)} lies in {len(owners)} stars")
        if kind is EdgeKind.RELEVANT:
            sides = {star_side(S, *e) for S in owners}
            if len(sides) != 2:
                raise InvalidTriangulation(f"both stars of {list(e)} lie on one side")
    return inc


def stars_on_positive_side(T: KTriangulation, frm: int, to: int, stars: Iterable[KStar] | None = None) -> int:
    ctx = T.ctx
    e = ctx.edge(frm, to)
    if classify_edge(ctx, e) is EdgeKind.IRRELEVANT or e not in T:
        raise ValueError(f"[{frm},{to}] is not a relevant or boundary edge of T")
    stars = extract_stars(T) if stars is None else stars
    return sum(1 for S in stars if star_side(S, frm, to) is Side.POSITIVE)
