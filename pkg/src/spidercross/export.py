"""SVG and TikZ text for coordinate drawings."""

from __future__ import annotations

from typing import Optional
from xml.sax.saxutils import escape

from .geometry import CoordinateDrawing

SVG_SIZE = 400
SVG_MARGIN = 40


def _bbox(d: CoordinateDrawing):
    xs = [float(p.x) for p in d.positions.values()]
    ys = [float(p.y) for p in d.positions.values()]
    return min(xs), max(xs), min(ys), max(ys)


def export_svg(d: CoordinateDrawing, crossings: Optional[int] = None) -> str:
    x0, x1, y0, y1 = _bbox(d)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (SVG_SIZE - 2 * SVG_MARGIN) / span
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2

    def to_px(p):
        # SVG y axis points down
        x = SVG_SIZE / 2 + (float(p.x) - cx) * scale
        y = SVG_SIZE / 2 - (float(p.y) - cy) * scale
        return x, y

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        '<g stroke="black" stroke-width="1">',
    ]
    for e in d.spider.edges:
        (ax, ay), (bx, by) = to_px(d.positions[e.a]), to_px(d.positions[e.b])
        lines.append(
            f'<line class="edge" data-edge="{e}" x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}"/>'
        )
    lines.append("</g>")
    for v in d.spider.vertices:
        x, y = to_px(d.positions[v])
        # push the label away from the drawing's centre
        dx, dy = x - SVG_SIZE / 2, y - SVG_SIZE / 2
        norm = max((dx * dx + dy * dy) ** 0.5, 1e-9)
        lx, ly = x + 14 * dx / norm, y + 14 * dy / norm
        lines.append(
            f'<g class="vertex"><circle cx="{x:.3f}" cy="{y:.3f}" r="3"/>'
            f'<text x="{lx:.3f}" y="{ly:.3f}" font-size="10" text-anchor="middle" '
            f'dominant-baseline="middle">{escape(str(v))}</text></g>'
        )
    if crossings is not None:
        lines.append(f'<text x="8" y="{SVG_SIZE - 8}" font-size="12">crossings: {crossings}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_tikz(d: CoordinateDrawing, crossings: Optional[int] = None) -> str:
    x0, x1, y0, y1 = _bbox(d)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = 6.0 / span
    pts = {v: (float(p.x) * scale, float(p.y) * scale) for v, p in d.positions.items()}
    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}",
    ]
    for v in d.spider.vertices:
        x, y = pts[v]
        lines.append(rf"\fill ({x:.4f},{y:.4f}) circle (2pt) node[above right] {{\tiny $({v.i},{v.j})$}};")
    for e in d.spider.edges:
        (ax, ay), (bx, by) = pts[e.a], pts[e.b]
        lines.append(rf"\draw ({ax:.4f},{ay:.4f}) -- ({bx:.4f},{by:.4f});")
    if crossings is not None:
        lines.append(rf"\node at ({(x0 + x1) / 2 * scale:.4f},{y0 * scale - 0.8:.4f}) {{crossings: {crossings}}};")
    lines += [r"\end{tikzpicture}", r"\end{document}"]
    return "\n".join(lines) + "\n"
