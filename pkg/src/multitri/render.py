"""SVG pictures of a k-triangulation on the regular n-gon."""

from __future__ import annotations

import math

from .core import EdgeKind, KTriangulation, classify_edge
from .stars import extract_stars

PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]
KIND_STYLE = {
    EdgeKind.IRRELEVANT: ("#bbbbbb", 1.0),
    EdgeKind.BOUNDARY: ("#555555", 1.5),
    EdgeKind.RELEVANT: ("#000000", 2.0),
}


def vertex_position(n: int, j: int, radius: float, center: float) -> tuple[float, float]:
    """Vertex j at angle -pi/2 + 2*pi*j/n, counterclockwise on screen."""
    theta = -math.pi / 2 + 2 * math.pi * j / n
    # screen y grows downward, so flip the sign to keep counterclockwise labels
    return center + radius * math.cos(theta), center - radius * math.sin(theta)


def render_svg(T: KTriangulation, stars: bool = False, size: int = 400) -> str:
    n = T.n
    center = size / 2
    radius = size * 0.4
    pos = [vertex_position(n, j, radius, center) for j in range(n)]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for a, b in T.edges():
        color, width = KIND_STYLE[classify_edge(T.ctx, (a, b))]
        (x1, y1), (x2, y2) = pos[a], pos[b]
        parts.append(
            f'<line class="edge {classify_edge(T.ctx, (a, b)).value}" x1="{x1:.2f}" y1="{y1:.2f}" '
            f'x2="{x2:.2f}" y2="{y2:.2f}" stroke="{color}" stroke-width="{width}"/>'
        )
    if stars:
        for idx, S in enumerate(extract_stars(T)):
            pts = " ".join(f"{pos[v][0]:.2f},{pos[v][1]:.2f}" for v in S.star_order())
            color = PALETTE[idx % len(PALETTE)]
            parts.append(
                f'<polygon class="star" data-vertices="{",".join(map(str, S.circle_order))}" points="{pts}" '
                f'fill="none" stroke="{color}" stroke-width="3" stroke-opacity="0.6"/>'
            )
    for j, (x, y) in enumerate(pos):
        lx, ly = vertex_position(n, j, radius + 16, center)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="black"/>')
        parts.append(f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="13" text-anchor="middle" dominant-baseline="middle">{j}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
