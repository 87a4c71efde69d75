"""The sign map on ordered triples of k-stars.

For stars ``S, S1, S2`` let ``[u, v]`` be the common bisector of ``S`` and
``S1`` with ``u`` in ``S``.  The sign is negative when ``S2`` has more
vertices in ``]u, v[`` than in ``]v, u[``.
"""

from __future__ import annotations

import enum

from ..core import InvalidTriangulation, KTriangulation
from ..stars import KStar, common_bisector_endpoints, extract_stars


class ChirotopeSign(enum.IntEnum):
    NEGATIVE = -1
    POSITIVE = 1


def chirotope_sign(T: KTriangulation, S: KStar, S1: KStar, S2: KStar) -> ChirotopeSign:
    if len({S.key, S1.key, S2.key}) != 3:
        raise ValueError("chirotope needs three distinct stars")
    es = T.edge_set()
    for X in (S, S1, S2):
        if X.ctx != T.ctx or not X.edge_set <= es:
            raise ValueError(f"star {X.circle_order} is not a star of T")
    return _sign(S, S1, S2)


def _sign(S: KStar, S1: KStar, S2: KStar) -> ChirotopeSign:
    u, v = common_bisector_endpoints(S, S1)
    inside = S2.count_in_open(u, v)
    outside = S2.count_in_open(v, u)
    if inside == outside:
        raise InvalidTriangulation(f"star {S2.circle_order} splits evenly across bisector [{u},{v}]")
    return ChirotopeSign.NEGATIVE if inside > outside else ChirotopeSign.POSITIVE


def extreme_stars(T: KTriangulation, stars: list[KStar] | None = None) -> list[KStar]:
    """Stars X with a partner B such that ``sign(X, B, Y)`` is the same for every other Y."""
    stars = extract_stars(T) if stars is None else stars
    out = []
    for X in stars:
        for B in stars:
            if B.key == X.key:
                continue
            signs = {_sign(X, B, Y) for Y in stars if Y.key not in (X.key, B.key)}
            if len(signs) <= 1:
                out.append(X)
                break
    return out
