"""Ears, internal and external stars, and accordion decompositions.

A k-ear is an edge of length k+1.  A star is external when it owns a boundary
edge.  When no star is internal the relevant edges split into k disjoint
accordions, one per color class of a k-coloring without monochromatic
crossings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import Edge, EdgeKind, GonContext, KTriangulation, _cross, chord_length, classify_edge
from .stars import KStar, Side, extract_stars, star_side


@dataclass(frozen=True)
class Accordion:
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid(self, ctx: GonContext) -> bool:
        """n-2k-1 distinct relevant edges, pairwise non-crossing."""
        es = self.edges
        if len(set(es)) != len(es) or len(es) != ctx.n - 2 * ctx.k - 1:
            return False
        if any(classify_edge(ctx, e) is not EdgeKind.RELEVANT for e in es):
            return False
        return not any(_cross(e, f) for i, e in enumerate(es) for f in es[i + 1:])


@dataclass(frozen=True)
class Coloring:
    colors: dict[Edge, int]

    def classes(self) -> list[list[Edge]]:
        out: dict[int, list[Edge]] = {}
        for e, c in sorted(self.colors.items()):
            out.setdefault(c, []).append(e)
        return [out[c] for c in sorted(out)]

    def is_proper(self) -> bool:
        return all(not _cross(e, f) for cls in self.classes() for i, e in enumerate(cls) for f in cls[i + 1:])


def _ears(T: KTriangulation) -> list[Edge]:
    n, k = T.n, T.k
    return [e for e in T.relevant_edges if chord_length(n, *e) == k + 1]


def k_ears(T: KTriangulation) -> list[Edge]:
    """Edges of T of length k+1."""
    if T.n < 2 * T.k + 3:
        raise ValueError(f"ears need n >= 2k+3, got n={T.n}, k={T.k}")
    return _ears(T)


def classify_stars(T: KTriangulation, stars: list[KStar] | None = None) -> tuple[list[KStar], list[KStar]]:
    """(internal, external) partition of the stars of T."""
    stars = extract_stars(T) if stars is None else stars
    internal = [S for S in stars if not S.is_external()]
    external = [S for S in stars if S.is_external()]
    return internal, external


def _ear_orientation(n: int, k: int, e: Edge) -> tuple[int, int]:
    """``(u, v)`` with ``u = v + k + 1`` (mod n), so ``|⟦v, u⟦| = k+1``."""
    a, b = e
    return (b, a) if (b - a) % n == k + 1 else (a, b)


def positive_ears(S: KStar, T: KTriangulation) -> list[Edge]:
    """Ears of S on whose short side S lies."""
    if T.n < 2 * T.k + 3:
        raise ValueError(f"ears need n >= 2k+3, got n={T.n}, k={T.k}")
    n, k = T.n, T.k
    if not S.edge_set <= T.edge_set():
        raise ValueError(f"star {S.circle_order} is not contained in T")
    out = []
    for e in S.edges():
        if chord_length(n, *e) != k + 1:
            continue
        u, v = _ear_orientation(n, k, e)
        if star_side(S, u, v) is Side.POSITIVE:
            out.append(e)
    return out


def _star_pairs(S: KStar, T: KTriangulation) -> dict[Edge, Edge]:
    """Pairing of the edges along S that are neither boundary nor positive ears.

    Those edges form one path along the star cycle; they are paired
    consecutively along it.
    """
    n, k = T.n, T.k
    removed = set(S.boundary_edges()) | set(positive_ears(S, T))
    cycle = [(a, b) if a < b else (b, a) for a, b in S.star_cycle()]
    m = len(cycle)
    if all(e in removed for e in cycle):
        return {}
    # start the path just after the removed block
    starts = [i for i in range(m) if cycle[i] not in removed and cycle[i - 1] in removed]
    if len(starts) != 1:
        raise ValueError(f"removed edges of star {S.circle_order} do not form a single block")
    path = []
    for step in range(m):
        e = cycle[(starts[0] + step) % m]
        if e in removed:
            break
        path.append(e)
    if len(path) + len(removed) != m or len(path) % 2:
        raise ValueError(f"star {S.circle_order} leaves an odd or broken path {path}")
    pairs = {}
    for i in range(0, len(path), 2):
        pairs[path[i]] = path[i + 1]
        pairs[path[i + 1]] = path[i]
    return pairs


def accordion_decomposition(T: KTriangulation, start_order: list[Edge] | None = None) -> list[Accordion] | None:
    """Split the relevant edges into k disjoint accordions, or None if T has an internal star.

    Each walk starts at an unused ear (lexicographically smallest by default,
    or in ``start_order``), moves to the other star of the current edge, steps
    to the edge paired with it there, and stops on reaching an ear.
    """
    n, k = T.n, T.k
    stars = extract_stars(T)
    internal, _ = classify_stars(T, stars)
    if internal:
        return None
    if n == 2 * k + 1:
        return [Accordion(()) for _ in range(k)]
    ears = set(_ears(T))
    owners: dict[Edge, list[int]] = {e: [] for e in T.relevant_edges}
    for idx, S in enumerate(stars):
        for e in S.edges():
            if e in owners:
                owners[e].append(idx)
    pairs = [_star_pairs(S, T) if n >= 2 * k + 3 else {} for S in stars]
    used: set[Edge] = set()
    out = []
    order = sorted(ears) if start_order is None else list(start_order)
    for ear in order:
        if ear in used:
            continue
        chain = [ear]
        used.add(ear)
        current = ear
        came_from = next((i for i in owners[ear] if ear not in pairs[i]), None)
        while len(chain) < n - 2 * k - 1:
            nxt_star = [i for i in owners[current] if i != came_from]
            if len(nxt_star) != 1 or current not in pairs[nxt_star[0]]:
                raise ValueError(f"accordion walk stuck at {list(current)}")
            star = nxt_star[0]
            nxt = pairs[star][current]
            if nxt in used:
                raise ValueError(f"accordion walk revisits {list(nxt)}")
            chain.append(nxt)
            used.add(nxt)
            current, came_from = nxt, star
        if current not in ears:
            raise ValueError(f"accordion from {list(ear)} ended at non-ear {list(current)}")
        used.add(current)
        out.append(Accordion(tuple(chain)))
    if used != set(T.relevant_edges) or len(out) != k:
        raise ValueError("accordions do not cover the relevant edges")
    return out


def color(T: KTriangulation) -> Coloring | None:
    """Color i for accordion i, or None when T is not k-colorable."""
    if T.k == 1:
        return Coloring({e: 0 for e in T.relevant_edges})
    parts = accordion_decomposition(T)
    if parts is None:
        return None
    return Coloring({e: i for i, acc in enumerate(parts) for e in acc.edges})


def is_k_colorable(T: KTriangulation) -> bool:
    if T.k == 1:
        return True
    return accordion_decomposition(T) is not None


def length_profile(T: KTriangulation) -> dict[int, int]:
    """Number of relevant edges of each length."""
    n = T.n
    return dict(sorted(Counter(chord_length(n, *e) for e in T.relevant_edges).items()))


def p_relevant_count(T: KTriangulation, p: int) -> int:
    """Number of edges of T longer than p."""
    if not T.k <= p <= (T.n - 1) // 2:
        raise ValueError(f"p must satisfy k <= p <= (n-1)/2, got p={p}")
    n = T.n
    return sum(1 for e in T.relevant_edges if chord_length(n, *e) > p)
