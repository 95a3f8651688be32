"""Deterministic SVG pictures of rectangular layouts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .layout import COPIES, PRIME, RectLayout

ALPHA_COLOR = "#c0392b"
BETA_COLOR = "#1f4e9c"
FAVOURITE_COLOR = "#1e8449"


@dataclass(frozen=True)
class SvgOptions:
    scale: int = 200
    margin: int = 20
    labels: bool = True
    arrows: bool = True
    stroke: float = 2.0


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(l: RectLayout, options: SvgOptions | None = None) -> str:
    o = options or SvgOptions()
    r = l.rect
    k = o.scale
    width = float(r.xmax - r.xmin) * k + 2 * o.margin
    height = float(r.ymax - r.ymin) * k + 2 * o.margin

    def x(v: Fraction) -> str:
        return _fmt(float(v - r.xmin) * k + o.margin)

    def y(v: Fraction) -> str:
        # SVG y grows downwards
        return _fmt(float(r.ymax - v) * k + o.margin)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    if o.arrows and l.alpha:
        out.append(
            '<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" '
            'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker></defs>'
        )
    out.append(
        f'<rect x="{x(r.xmin)}" y="{y(r.ymax)}" width="{_fmt(float(r.xmax - r.xmin) * k)}" '
        f'height="{_fmt(float(r.ymax - r.ymin) * k)}" fill="none" stroke="black" stroke-width="{_fmt(o.stroke)}"/>'
    )
    for a in l.alpha:
        for copy in COPIES:
            c = a.circle(copy)
            out.append(
                f'<circle cx="{x(c.center[0])}" cy="{y(c.center[1])}" r="{_fmt(float(c.radius) * k)}" '
                f'fill="none" stroke="{ALPHA_COLOR}" stroke-width="{_fmt(o.stroke)}"/>'
            )
            if o.arrows:
                # orientation mark at the bottom of the circle
                cx, cy, rad = c.center[0], c.center[1], c.radius
                step = rad / 4 if copy == PRIME else -rad / 4
                out.append(
                    f'<path d="M{x(cx - step)},{y(cy - rad)} L{x(cx)},{y(cy - rad)}" '
                    f'stroke="{ALPHA_COLOR}" stroke-width="{_fmt(o.stroke)}" marker-end="url(#arrow)"/>'
                )
            if o.labels:
                mark = "′" if copy == PRIME else "″"
                out.append(
                    f'<text x="{x(c.center[0])}" y="{y(c.center[1])}" font-size="12" text-anchor="middle" '
                    f'fill="{ALPHA_COLOR}">α{mark}{a.index}</text>'
                )
    for curve in l.beta:
        for arc in curve.arcs:
            pts = " ".join(f"{x(p[0])},{y(p[1])}" for p in l.arc_points(arc))
            marker = ' marker-mid="url(#arrow)"' if o.arrows and arc.via else ""
            out.append(
                f'<polyline points="{pts}" fill="none" stroke="{BETA_COLOR}" '
                f'stroke-width="{_fmt(o.stroke)}"{marker}/>'
            )
    fav = set(l.matching)
    dot = 0.03 * k
    for cid in sorted(l.crossings):
        c = l.crossings[cid]
        colour = FAVOURITE_COLOR if cid in fav else "black"
        for copy in COPIES:
            p = c.point(copy)
            px, py = float(p[0] - r.xmin) * k + o.margin, float(r.ymax - p[1]) * k + o.margin
            out.append(
                f'<path d="M{_fmt(px - dot)},{_fmt(py)} a{_fmt(dot)},{_fmt(dot)} 0 1,0 {_fmt(2 * dot)},0 '
                f'a{_fmt(dot)},{_fmt(dot)} 0 1,0 {_fmt(-2 * dot)},0" fill="{colour}"/>'
            )
            if o.labels:
                circle = l.alpha_pair(c.alpha).circle(copy)
                side = 1 if p[0] >= circle.center[0] else -1
                anchor = "start" if side > 0 else "end"
                out.append(
                    f'<text x="{_fmt(px + side * 2 * dot)}" y="{_fmt(py - dot)}" font-size="11" '
                    f'text-anchor="{anchor}" fill="{colour}">{escape(cid)}</text>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
