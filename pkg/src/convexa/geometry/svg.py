"""Static SVG rendering of planar realizations.

Display-only: exact constraints are clipped to a viewport, each body's
vertex set is recovered from pairwise line intersections, and the hull
is emitted as a polygon (or a line/point when lower-dimensional).
"""
from __future__ import annotations

from fractions import Fraction

from .bodies import Realization

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)


def _line_intersection(c1, c2):
    a, b = c1.normal, c1.offset
    c, d = c2.normal, c2.offset
    det = a[0] * c[1] - a[1] * c[0]
    if det == 0:
        return None
    x = (b * c[1] - a[1] * d) / det
    y = (a[0] * d - b * c[0]) / det
    return (x, y)


def _body_vertices(body, box):
    rows = list(body.constraints) + list(box)
    pts = set()
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            p = _line_intersection(rows[i], rows[j])
            if p is not None and all(r.holds_at(p) for r in rows):
                pts.add(p)
    return list(pts)


def _hull_order(pts):
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    import math

    return sorted(pts, key=lambda p: math.atan2(float(p[1] - cy), float(p[0] - cx)))


def render_svg(real: Realization, size: int = 480, margin: Fraction | int = 1) -> str:
    """Render a 2-D realization; bodies are translucent colored shapes."""
    if real.dim != 2:
        raise ValueError("SVG rendering is for 2-D realizations only")
    from .bodies import Constraint
    from .linprog import feasible

    # viewport: sample every body for a witness to seed the bounding box
    seeds = []
    for body in real.bodies:
        wit = feasible(body.triples(), 2)
        if wit is not None:
            seeds.append(wit.point)
    lo = Fraction(-2), Fraction(-2)
    hi = Fraction(2), Fraction(2)
    coords = [c for p in seeds for c in p]
    if coords:
        m = Fraction(margin)
        span = max(abs(c) for c in coords) + m
        lo = (-span, -span)
        hi = (span, span)
    box = (
        Constraint((Fraction(1), Fraction(0)), hi[0] + 8, "le"),
        Constraint((Fraction(-1), Fraction(0)), -lo[0] + 8, "le"),
        Constraint((Fraction(0), Fraction(1)), hi[1] + 8, "le"),
        Constraint((Fraction(0), Fraction(-1)), -lo[1] + 8, "le"),
    )
    width = hi[0] - lo[0]
    height = hi[1] - lo[1]
    scale = Fraction(size) / max(width, height)

    def sx(x):
        return float((x - lo[0]) * scale)

    def sy(y):
        return float((hi[1] - y) * scale)  # flip: SVG y grows downward

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    for idx, body in enumerate(real.bodies):
        pts = _body_vertices(body, box)
        color = _PALETTE[idx % len(_PALETTE)]
        if not pts:
            continue
        uniq = list(dict.fromkeys(pts))
        if len(uniq) == 1:
            p = uniq[0]
            parts.append(
                f'<circle cx="{sx(p[0]):.3f}" cy="{sy(p[1]):.3f}" r="3" fill="{color}">'
                f"<title>body {idx + 1}</title></circle>"
            )
            continue
        ordered = _hull_order(uniq)
        coords_attr = " ".join(f"{sx(p[0]):.3f},{sy(p[1]):.3f}" for p in ordered)
        if len(uniq) == 2:
            (x1, y1), (x2, y2) = uniq
            parts.append(
                f'<line x1="{sx(x1):.3f}" y1="{sy(y1):.3f}" x2="{sx(x2):.3f}" '
                f'y2="{sy(y2):.3f}" stroke="{color}" stroke-width="3">'
                f"<title>body {idx + 1}</title></line>"
            )
        else:
            parts.append(
                f'<polygon points="{coords_attr}" fill="{color}" fill-opacity="0.25" '
                f'stroke="{color}" stroke-width="1.5">'
                f"<title>body {idx + 1}</title></polygon>"
            )
    parts.append("</svg>")
    return "\n".join(parts)
