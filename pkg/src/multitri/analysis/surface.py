"""The surface obtained by gluing the k-stars of a k-triangulation along shared edges."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

from ..core import Edge, EdgeKind, InvalidTriangulation, KTriangulation, classify_edge
from ..stars import KStar, extract_stars


@dataclass(frozen=True)
class SurfaceStats:
    n: int
    k: int
    v: int
    e: int
    f: int
    chi: int
    b: int
    g: int
    orientable: bool
    traced_boundary_components: int

    def to_dict(self) -> dict:
        return asdict(self)


def closed_form_genus(n: int, k: int) -> int:
    twice = 2 - n + k + k * n - 2 * k * k - gcd(n, k)
    if twice % 2:
        raise ValueError(f"odd genus numerator for n={n}, k={k}")
    return twice // 2


def _norm(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def orientation_conflicts(stars: list[KStar]) -> list[Edge]:
    """Edges traversed in the same direction by both of their stars (star order)."""
    seen: dict[Edge, tuple[int, int]] = {}
    bad = []
    for S in stars:
        for a, b in S.star_cycle():
            e = _norm(a, b)
            if e in seen and seen[e] == (a, b):
                bad.append(e)
            seen[e] = (a, b)
    return bad


def trace_boundary(T: KTriangulation, stars: list[KStar] | None = None) -> list[list[int]]:
    """Boundary cycles of the glued surface, as vertex sequences.

    From a boundary edge ``a -> b`` of a star, turn around ``b`` through the
    stars: take the other star edge at ``b``; if it is relevant, cross into
    its other star and repeat; the first boundary edge reached continues the
    cycle.
    """
    ctx = T.ctx
    stars = extract_stars(T) if stars is None else stars
    owners: dict[Edge, list[int]] = {}
    at: list[dict[int, list[int]]] = []
    for idx, S in enumerate(stars):
        nb: dict[int, list[int]] = {}
        for a, b in S.star_cycle():
            owners.setdefault(_norm(a, b), []).append(idx)
            nb.setdefault(a, []).append(b)
            nb.setdefault(b, []).append(a)
        at.append(nb)
    boundary = [e for e in owners if classify_edge(ctx, e) is EdgeKind.BOUNDARY]

    def successor(a: int, b: int) -> tuple[int, int]:
        star = owners[_norm(a, b)][0]
        came = a
        for _ in range(2 * len(stars) + 2):
            x, y = at[star][b]
            nxt = y if x == came else x
            e = _norm(b, nxt)
            if classify_edge(ctx, e) is EdgeKind.BOUNDARY:
                return b, nxt
            others = [s for s in owners[e] if s != star]
            if len(others) != 1:
                raise InvalidTriangulation(f"edge {list(e)} is not shared by two stars")
            star, came = others[0], nxt
        raise InvalidTriangulation(f"boundary walk around vertex {b} does not terminate")

    # orient each boundary edge as its star traverses it
    oriented = {}
    for e in boundary:
        S = stars[owners[e][0]]
        for a, b in S.star_cycle():
            if _norm(a, b) == e:
                oriented[e] = (a, b)
    cycles = []
    done: set[Edge] = set()
    for e in sorted(boundary):
        if e in done:
            continue
        a, b = oriented[e]
        cycle = [a]
        cur = (a, b)
        while True:
            done.add(_norm(*cur))
            cycle.append(cur[1])
            cur = successor(*cur)
            if _norm(*cur) == e:
                break
            if _norm(*cur) in done:
                raise InvalidTriangulation("boundary walk merged into another cycle")
        cycles.append(cycle[:-1])
    return cycles


def surface_stats(T: KTriangulation) -> SurfaceStats:
    n, k = T.n, T.k
    stars = extract_stars(T)
    v = n
    e = n + k * (n - 2 * k - 1)
    f = len(stars)
    if f != n - 2 * k:
        raise InvalidTriangulation(f"{f} stars, expected {n - 2 * k}")
    chi = v - e + f
    b = gcd(n, k)
    twice = 2 - chi - b
    g = twice // 2
    if twice % 2 or g != closed_form_genus(n, k):
        raise InvalidTriangulation(f"genus mismatch: chi={chi}, b={b}")
    traced = len(trace_boundary(T, stars))
    return SurfaceStats(
        n=n,
        k=k,
        v=v,
        e=e,
        f=f,
        chi=chi,
        b=b,
        g=g,
        orientable=not orientation_conflicts(stars),
        traced_boundary_components=traced,
    )
