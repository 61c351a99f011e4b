"""Deterministic SVG rendering of a Newton diagram.

Layout is a pure function of the hull bounding box, so the output is stable
byte-for-byte and safe to pin in golden-file tests.
"""

from __future__ import annotations

from typing import List

from .geometry import is_exceptional, newton_diagram, side_polygon
from .poly import SparsePoly

_MARGIN = 40.0
_PLOT = 420.0
RIGHT_COLOR = "#c0392b"
TOP_COLOR = "#2471a3"
HULL_COLOR = "#666666"
GRID_COLOR = "#dddddd"


def render_diagram_svg(p: SparsePoly) -> str:
    d = newton_diagram(p)
    support = sorted(p.support())
    max_a = max(a for a, _ in support)
    max_b = max(b for _, b in support)
    span = max(max_a, max_b, 1)
    scale = _PLOT / span
    size = _PLOT + 2 * _MARGIN

    def px(a: int) -> float:
        return _MARGIN + a * scale

    def py(b: int) -> float:
        return size - _MARGIN - b * scale

    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<rect width="{size:.0f}" height="{size:.0f}" fill="white"/>',
    ]
    for k in range(span + 1):
        out.append(
            f'<line x1="{px(k):.2f}" y1="{py(0):.2f}" x2="{px(k):.2f}" y2="{py(span):.2f}" '
            f'stroke="{GRID_COLOR}" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{px(0):.2f}" y1="{py(k):.2f}" x2="{px(span):.2f}" y2="{py(k):.2f}" '
            f'stroke="{GRID_COLOR}" stroke-width="1"/>'
        )
    # Hull outline.
    if len(d.vertices) >= 2:
        points = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in d.vertices)
        tag = "polygon" if len(d.vertices) >= 3 else "polyline"
        out.append(
            f'<{tag} points="{points}" fill="none" stroke="{HULL_COLOR}" stroke-width="2"/>'
        )
    # Side polygons, exceptional segments dashed.
    for side, color in (("right", RIGHT_COLOR), ("top", TOP_COLOR)):
        for s in side_polygon(d, side).segments:
            dash = ' stroke-dasharray="8 5"' if is_exceptional(s, side) else ""
            (a1, b1), (a2, b2) = s.lower, s.upper
            out.append(
                f'<line x1="{px(a1):.2f}" y1="{py(b1):.2f}" x2="{px(a2):.2f}" y2="{py(b2):.2f}" '
                f'stroke="{color}" stroke-width="4"{dash}/>'
            )
    # Support points on top of everything.
    for a, b in support:
        out.append(f'<circle cx="{px(a):.2f}" cy="{py(b):.2f}" r="4" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
