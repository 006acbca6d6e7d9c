"""Render a point set, and optionally a cross, as a standalone SVG document."""

from __future__ import annotations

from typing import Optional
from xml.sax.saxutils import quoteattr

from .core import Cross

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)

WIDTH = 600


def color_of(color_id: int) -> str:
    return PALETTE[color_id % len(PALETTE)]


def emit_svg(points, cross: Optional[Cross] = None) -> str:
    pts = list(points)
    head = '<?xml version="1.0" encoding="UTF-8"?>\n'
    if not pts:
        return head + f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{WIDTH}" viewBox="0 0 1 1"></svg>\n'

    # floats are for drawing only
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    if cross is not None:
        xs.append(float(cross.center[0]))
        ys.append(float(cross.center[1]))
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = (x1 - x0) or 1.0
    h = (y1 - y0) or 1.0
    mx, my = 0.05 * w, 0.05 * h
    vx, vw = x0 - mx, w + 2 * mx
    vy, vh = -(y1 + my), h + 2 * my  # y is flipped so north is up
    r = 0.006 * max(vw, vh)
    stroke = r / 3

    out = [head, f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
                 f'height="{round(WIDTH * vh / vw)}" viewBox="{vx:g} {vy:g} {vw:g} {vh:g}">\n']
    if cross is not None:
        cx, cy = float(cross.center[0]), -float(cross.center[1])
        out.append(f'<line class="cross" x1="{cx:g}" y1="{vy:g}" x2="{cx:g}" y2="{vy + vh:g}" '
                   f'stroke="black" stroke-width="{stroke:g}"/>\n')
        out.append(f'<line class="cross" x1="{vx:g}" y1="{cy:g}" x2="{vx + vw:g}" y2="{cy:g}" '
                   f'stroke="black" stroke-width="{stroke:g}"/>\n')
    for p, x, y in zip(pts, xs, ys):
        out.append(f'<circle cx="{x:g}" cy="{-y:g}" r="{r:g}" fill={quoteattr(color_of(p.color))}>'
                   f'<title>{p.color}</title></circle>\n')
    if cross is not None:
        for q, p in enumerate(cross.witnesses, start=1):
            out.append(f'<rect class="witness" data-quadrant="Q{q}" x="{float(p.x) - 2 * r:g}" '
                       f'y="{-float(p.y) - 2 * r:g}" width="{4 * r:g}" height="{4 * r:g}" fill="none" '
                       f'stroke="black" stroke-width="{stroke:g}"/>\n')
    out.append("</svg>\n")
    return "".join(out)
