"""SVG figures of covering plans.

Floats appear here only, after all exact work is done.  The equilateral frame
uses the display map (x, y) -> (x + y/2, y*sqrt(3)/2).
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .geometry import CoveringPlan, vertices

FRAMES = ("simplex", "equilateral")
UP_FILL = "#9ecae1"
DOWN_FILL = "#fdae6b"

SQRT3_2 = math.sqrt(3) / 2


def display_point(x, y, frame: str = "simplex") -> tuple[float, float]:
    x, y = float(x), float(y)
    if frame == "equilateral":
        return x + y / 2, y * SQRT3_2
    if frame == "simplex":
        return x, y
    raise ValueError(f"unknown frame {frame!r}; expected one of {FRAMES}")


def _row_labels(plan: CoveringPlan) -> list[tuple[float, str]]:
    """(height, label) for each distinct up-triangle baseline, numbered from the top."""
    bases = sorted({p.anchor.y for p in plan.placements if p.is_up}, reverse=True)
    return [(float(y), str(i)) for i, y in enumerate(bases, 1)]


def render_svg(
    plan: CoveringPlan,
    *,
    show_target: bool = True,
    frame: str = "simplex",
    row_labels: bool = False,
    scale: float = 80.0,
    margin: float = 20.0,
) -> str:
    if frame not in FRAMES:
        raise ValueError(f"unknown frame {frame!r}; expected one of {FRAMES}")
    tris = [
        (p.is_up, [display_point(v.x, v.y, frame) for v in vertices(p)])
        for p in plan.placements
    ]
    target = [display_point(v.x, v.y, frame) for v in plan.target.vertices()]

    pts = [xy for _, tri in tris for xy in tri] + target
    min_x = min(x for x, _ in pts)
    max_x = max(x for x, _ in pts)
    min_y = min(y for _, y in pts)
    max_y = max(y for _, y in pts)
    width = (max_x - min_x) * scale + 2 * margin
    height = (max_y - min_y) * scale + 2 * margin

    def tx(x, y):
        # svg y grows downward
        return (x - min_x) * scale + margin, (max_y - y) * scale + margin

    def poly(points, **attrs):
        coords = " ".join("%.4f,%.4f" % tx(x, y) for x, y in points)
        extra = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
        return f'  <polygon points="{coords}" {extra}/>'

    title = escape(f"{plan.method.value} n={plan.n} d={plan.d} count={plan.count}")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.1f}" height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">',
        f"  <title>{title}</title>",
    ]
    for up, tri in tris:
        out.append(
            poly(
                tri,
                fill=UP_FILL if up else DOWN_FILL,
                fill_opacity="0.55",
                stroke="#333333",
                stroke_width="1",
                **{"class": "up" if up else "down"},
            )
        )
    if show_target:
        out.append(
            poly(target, fill="none", stroke="#d62728", stroke_width="2.5", **{"class": "target"})
        )
    if row_labels:
        for y, label in _row_labels(plan):
            x, ys = tx(*display_point(0, y, frame))
            out.append(
                f'  <text x="{x - 6:.4f}" y="{ys - 4:.4f}" font-size="12" '
                f'text-anchor="end" class="row-label">{label}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
