"""Flattening a k-boundary edge and inflating an external k-crossing.

Flattening removes one vertex (n+1 -> n) and inflating inserts one (n -> n+1).
Labels are kept compact: after removing ``s_0`` every label above it drops by
one; when inserting, the new vertex takes the label of its successor ``s_1``
and every label from ``s_1`` on moves up by one.  The one exception is an
insertion between ``n-1`` and ``0`` flagged with ``insert_last``, which gives
the new vertex label ``n`` and shifts nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, EdgeKind, GonContext, KTriangulation, classify_edge, in_closed_arc, is_k_triangulation
from .stars import KStar, extract_stars


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class ExternalCrossing:
    """Edges ``[s_i, s_{k+i}]`` for ``i = 1..k`` with ``s_i = anchor + i - 1``."""

    ctx: GonContext
    anchor: int
    right: tuple[int, ...]
    insert_last: bool = False

    def __post_init__(self):
        n, k = self.ctx.n, self.ctx.k
        self.ctx.check_vertex(self.anchor)
        if len(self.right) != k:
            raise TransformError(f"an external {k}-crossing needs {k} right endpoints, got {self.right}")
        last_left = (self.anchor + k - 1) % n
        offsets = [(y - last_left) % n for y in self.right]
        for y in self.right:
            self.ctx.check_vertex(y)
        # right endpoints strictly increase inside ]s_k, s_1[
        if any(not 1 <= o <= n - k for o in offsets) or offsets != sorted(set(offsets)):
            raise TransformError(f"right endpoints {self.right} are not increasing inside ]{last_left},{self.anchor}[")
        if self.insert_last and self.anchor != 0:
            raise TransformError("insert_last only applies to crossings anchored at vertex 0")

    @classmethod
    def from_edges(cls, ctx: GonContext, edges, anchor: int, insert_last: bool = False) -> "ExternalCrossing":
        """Build from k edges whose left endpoints are ``anchor, ..., anchor+k-1``."""
        n, k = ctx.n, ctx.k
        es = [ctx.edge(*e) for e in edges]
        right = []
        for i in range(k):
            s = (anchor + i) % n
            hits = [b if a == s else a for a, b in es if s in (a, b)]
            if len(hits) != 1:
                raise TransformError(f"vertex {s} must be the left endpoint of exactly one crossing edge")
            right.append(hits[0])
        if len(es) != k:
            raise TransformError(f"expected {k} edges, got {len(es)}")
        return cls(ctx, anchor % n, tuple(right), insert_last)

    def left(self) -> list[int]:
        return [(self.anchor + i) % self.ctx.n for i in range(self.ctx.k)]

    def edges(self) -> list[Edge]:
        return [self.ctx.edge(s, t) for s, t in zip(self.left(), self.right)]

    def to_dict(self) -> dict:
        return {"anchor": self.anchor, "edges": [list(e) for e in self.edges()], "insert_last": self.insert_last}


def boundary_start(ctx: GonContext, e: Edge) -> int:
    """``s_0`` for a boundary edge ``e = [s_0, s_0 + k]``."""
    e = ctx.edge(*e)
    if classify_edge(ctx, e) is not EdgeKind.BOUNDARY:
        raise TransformError(f"{list(e)} is not a {ctx.k}-boundary edge")
    a, b = e
    return a if (b - a) % ctx.n == ctx.k else b


def flatten_star(T: KTriangulation, e: Edge) -> KStar:
    """The unique star of T containing the boundary edge e."""
    e = T.ctx.edge(*e)
    for S in extract_stars(T):
        if e in S.edge_set:
            return S
    raise TransformError(f"no star of T contains {list(e)}")


def _star_from(S: KStar, s0: int) -> list[int]:
    co = list(S.circle_order)
    i = co.index(s0)
    return co[i:] + co[:i]


class _Flattener:
    """Edge-by-edge image of a flattening, in old labels before the relabel."""

    def __init__(self, T: KTriangulation, e: Edge):
        self.ctx = T.ctx
        self.s0 = boundary_start(T.ctx, e)
        self.s = _star_from(flatten_star(T, e), self.s0)
        k = self.ctx.k
        if any(self.s[i] != (self.s0 + i) % self.ctx.n for i in range(k + 1)):
            raise TransformError(f"star {self.s} is not anchored on {list(e)}")

    def image(self, edge: Edge) -> Edge | None:
        """New edge in the old labels, or None when the edge is forgotten."""
        n, k, s = self.ctx.n, self.ctx.k, self.s
        head = {v: i for i, v in enumerate(s[: k + 1])}
        x, y = edge
        if x in head and y in head:
            return None if s[0] in (x, y) else edge
        if x not in head and y not in head:
            return edge
        if y in head:
            x, y = y, x
        i, t = head[x], y
        if i > 0 and in_closed_arc(n, t, (s[k] + 1) % n, s[k + i]):
            return self.ctx.edge(s[i], t)
        if i < k and in_closed_arc(n, t, s[k + i + 1], (s[0] - 1) % n):
            return self.ctx.edge(s[i + 1], t)
        raise TransformError(f"edge {list(edge)} bisects the angle of the flattened star at {s[i]}")

    def relabel(self, v: int) -> int:
        if v == self.s0:
            raise TransformError("removed vertex survived the flattening")
        return v - 1 if v > self.s0 else v

    def map_edge(self, edge: Edge) -> Edge | None:
        img = self.image(edge)
        if img is None:
            return None
        return tuple(sorted((self.relabel(img[0]), self.relabel(img[1]))))


def flatten(T: KTriangulation, e: Edge, check: bool = True) -> KTriangulation:
    """Flatten the boundary edge e of T, going from n+1 to n vertices."""
    big = T.ctx
    if big.n < 2 * big.k + 2:
        raise TransformError(f"flattening needs n+1 >= 2k+2, got {big.n}")
    small = GonContext(big.n - 1, big.k)
    fl = _Flattener(T, e)
    out = set()
    for edge in T.edges():
        img = fl.map_edge(edge)
        if img is not None:
            out.add(img)
    return _finish(small, out, T, -2 * big.k, check)


def flattened_edge(T: KTriangulation, e: Edge, f: Edge) -> Edge:
    """Image of the edge f of T in the flattening of e (new labels)."""
    img = _Flattener(T, e).map_edge(T.ctx.edge(*f))
    if img is None:
        raise TransformError(f"{list(f)} is forgotten by flattening {list(e)}")
    return img


def glued_crossing(T: KTriangulation, e: Edge) -> ExternalCrossing:
    """The k-crossing of the flattening made of edges glued from two edges of T."""
    big = T.ctx
    small = GonContext(big.n - 1, big.k)
    fl = _Flattener(T, e)
    s, k = fl.s, big.k
    anchor = fl.relabel(s[1])
    right = tuple(fl.relabel(s[k + i]) for i in range(1, k + 1))
    return ExternalCrossing(small, anchor, right, insert_last=fl.s0 == big.n - 1)


def _finish(ctx: GonContext, edges: set[Edge], T: KTriangulation, delta: int, check: bool) -> KTriangulation:
    missing = [e for e in ctx.implicit_edges() if e not in edges]
    if missing:
        raise TransformError(f"result lacks boundary/irrelevant edges {missing[:3]}")
    if len(edges) != len(T.edges()) + delta:
        raise TransformError(f"result has {len(edges)} edges, expected {len(T.edges()) + delta}")
    R = KTriangulation.from_edges(ctx, edges)
    if check:
        if not is_k_triangulation(ctx, R.relevant_edges):
            raise TransformError("result is not a k-triangulation")
    return R


def _inflate_images(ctx: GonContext, X: ExternalCrossing, edge: Edge) -> list[tuple[int, int]]:
    """Images of one edge of T, with ``-1`` standing for the new vertex s_0."""
    n, k = ctx.n, ctx.k
    left = X.left()
    # s[1..2k] as in the crossing; s[0] is the new vertex
    s = [-1] + left + list(X.right)
    pos = {v: i + 1 for i, v in enumerate(left)}
    x, y = edge
    if (x in pos) == (y in pos):
        return [edge]
    if y in pos:
        x, y = y, x
    i, t = pos[x], y
    out = []
    if in_closed_arc(n, t, (s[k] + 1) % n, s[k + i]):
        out.append((s[i], t))
    if in_closed_arc(n, t, s[k + i], (s[1] - 1) % n):
        out.append((s[i - 1], t))
    return out


def inflate(T: KTriangulation, X: ExternalCrossing, check: bool = True) -> KTriangulation:
    """Inflate the external k-crossing X of T, going from n to n+1 vertices."""
    ctx = T.ctx
    if X.ctx != ctx:
        raise TransformError("crossing and triangulation live on different polygons")
    es = T.edge_set()
    for f in X.edges():
        if f not in es:
            raise TransformError(f"crossing edge {list(f)} is not in T")
    big = GonContext(ctx.n + 1, ctx.k)
    s1 = X.anchor

    def relabel(v: int) -> int:
        if v == -1:
            return ctx.n if X.insert_last else s1
        return v if X.insert_last or v < s1 else v + 1

    out = set()
    for edge in T.edges():
        for a, b in _inflate_images(ctx, X, edge):
            out.add(big.edge(relabel(a), relabel(b)))
    for v in X.left():
        out.add(big.edge(relabel(-1), relabel(v)))
    return _finish(big, out, T, 2 * ctx.k, check)


def inflated_boundary_edge(X: ExternalCrossing) -> Edge:
    """The edge ``[s_0, s_k]`` of the inflation, whose flattening undoes it."""
    n, k = X.ctx.n, X.ctx.k
    s0 = n if X.insert_last else X.anchor
    sk = X.left()[-1]
    sk = sk if X.insert_last or sk < X.anchor else sk + 1
    return tuple(sorted((s0, sk)))


def external_crossings(T: KTriangulation, anchor: int | None = None) -> list[ExternalCrossing]:
    """All k-crossings of T with left endpoints ``anchor..anchor+k-1`` (every anchor if None)."""
    ctx = T.ctx
    n, k = ctx.n, ctx.k
    es = T.edge_set()
    anchors = range(n) if anchor is None else [ctx.check_vertex(anchor)]
    out = []
    for a in anchors:
        left = [(a + i) % n for i in range(k)]
        # offsets of right endpoints measured from the last left vertex
        span = n - k

        def rec(i: int, lo: int, acc: list[int]):
            if i == k:
                out.append(ExternalCrossing(ctx, a, tuple(acc)))
                return
            for off in range(lo, span + 1):
                y = (left[-1] + off) % n
                if ctx.edge(left[i], y) in es:
                    rec(i + 1, off + 1, acc + [y])

        rec(0, 1, [])
    return out
