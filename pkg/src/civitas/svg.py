"""Standalone SVG drawings of layouts, base of the city at the bottom."""

from __future__ import annotations

import math
from typing import List, Optional

from .geometry import Circle
from .layout import Layout

LABEL_LIMIT = 50
TARGET_PX = 800.0
PAD_PX = 20.0

WALL_STYLE = 'fill="#f4efe1" stroke="#5a4632" stroke-width="2"'
HOUSE_FILL = {True: "#c9785d", False: "#d9b77e"}  # rotated / axis-aligned


def _num(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def render_svg(layout: Layout, scale: Optional[float] = None, labels: Optional[bool] = None) -> str:
    """SVG 1.1 text: the wall as one closed ``path`` or ``circle``, one ``rect`` per house."""
    c = layout.instance.container
    x0, y0, x1, y1 = c.bounds
    if scale is None:
        scale = TARGET_PX / max(x1 - x0, y1 - y0)
    if not scale > 0:
        raise ValueError("scale must be positive")
    if labels is None:
        labels = layout.count <= LABEL_LIMIT

    def sx(x: float) -> float:
        return PAD_PX + (x - x0) * scale

    def sy(y: float) -> float:
        # flipped so that larger y is drawn higher
        return PAD_PX + (y1 - y) * scale

    width = 2 * PAD_PX + (x1 - x0) * scale
    height = 2 * PAD_PX + (y1 - y0) * scale
    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f"<title>{layout.instance.id}: {layout.count} houses</title>",
    ]
    if isinstance(c, Circle):
        out.append(f'<circle cx="{_num(sx(c.center.x))}" cy="{_num(sy(c.center.y))}" '
                   f'r="{_num(c.radius * scale)}" {WALL_STYLE}/>')
    else:
        d = " ".join(f"{'M' if k == 0 else 'L'} {_num(sx(v.x))} {_num(sy(v.y))}"
                     for k, v in enumerate(c.vertices))
        out.append(f'<path d="{d} Z" {WALL_STYLE}/>')

    stroke = max(0.2, min(1.0, 0.05 * layout.instance.house.width * scale))
    out.append(f'<g stroke="#3b2a1a" stroke-width="{_num(stroke)}">')
    for h in layout.houses:
        cx, cy = sx(h.center.x), sy(h.center.y)
        w, hh = h.length * scale, h.width * scale
        rotated = min(h.theta, abs(h.theta - math.pi / 2)) > 1e-6
        deg = -math.degrees(h.theta)
        out.append(f'<rect x="{_num(cx - w / 2)}" y="{_num(cy - hh / 2)}" width="{_num(w)}" '
                   f'height="{_num(hh)}" fill="{HOUSE_FILL[rotated]}" '
                   f'transform="rotate({_num(deg)} {_num(cx)} {_num(cy)})"/>')
    out.append("</g>")
    if labels and layout.count:
        size = max(6.0, 0.45 * layout.instance.house.width * scale)
        out.append(f'<g font-family="sans-serif" font-size="{_num(size)}" text-anchor="middle" '
                   f'dominant-baseline="central" fill="#1a1a1a">')
        for k, h in enumerate(layout.houses, start=1):
            out.append(f'<text x="{_num(sx(h.center.x))}" y="{_num(sy(h.center.y))}">{k}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
