"""Static SVG drawings of node sets and their node lines."""

from __future__ import annotations

from fractions import Fraction

from .geometry import Line
from .nodeset import NodeSet


def _num(q) -> str:
    return f"{float(q):.4f}".rstrip("0").rstrip(".")


def render_svg(X: NodeSet, distinguished: Line | None = None, size: int = 600) -> str:
    """Nodes as circles, node lines as segments between their extreme nodes.

    Maximal lines are drawn heavier, the distinguished line dashed.  The
    viewBox is the node bounding box with a 10% margin; y points up.
    """
    xs = [p.x for p in X]
    ys = [p.y for p in X]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, Fraction(1))
    pad = span / 10
    vx, vy = x0 - pad, -(y1 + pad)
    vw, vh = (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad
    r = span / 80
    stroke = span / 400
    maximal = set(X.maximal)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_num(vx)} {_num(vy)} {_num(vw)} {_num(vh)}">',
        '<g id="lines" fill="none">',
    ]
    for nl in X.node_lines:
        pts = sorted(X[i] for i in nl.incident_nodes)
        a, b = pts[0], pts[-1]
        cls, width, extra = "node-line", stroke, ""
        if nl.line in maximal:
            cls, width = "maximal", 3 * stroke
        if nl.line == distinguished:
            cls, width = "distinguished", 2 * stroke
            extra = f' stroke-dasharray="{_num(4 * r)} {_num(2 * r)}"'
        colour = {"maximal": "#1f4e9a", "distinguished": "#c0392b"}.get(cls, "#999999")
        out.append(
            f'<line class="{cls}" x1="{_num(a.x)}" y1="{_num(-a.y)}" x2="{_num(b.x)}" '
            f'y2="{_num(-b.y)}" stroke="{colour}" stroke-width="{_num(width)}"{extra}/>'
        )
    out.append("</g>")
    out.append('<g id="nodes" fill="#000000">')
    for i, p in enumerate(X):
        out.append(f'<circle class="node" data-index="{i}" cx="{_num(p.x)}" cy="{_num(-p.y)}" r="{_num(r)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
