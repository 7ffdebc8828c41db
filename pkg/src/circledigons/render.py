"""Static SVG drawings of an arrangement: circles, shaded digons, red/blue center graph."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .arrangement import CircleFamily, DigonKind, DigonRecord
from .geom import Circle, arc_inside_disc
from .graph import Color, ColoredGraph

LAYERS = ("circles", "digons", "graph")
LENS_FILL = "#f4a582"
LUNE_FILL = "#92c5de"
EDGE_STROKE = {Color.RED: "#d6604d", Color.BLUE: "#4393c3"}


def _f(v: float) -> str:
    out = f"{v:.10g}"
    return "0" if out == "-0" else out


def _xy(p) -> str:
    # SVG's y axis points down
    return f"{_f(p[0])} {_f(-p[1])}"


def _arc_cmd(c: Circle, to_angle: float, extent: float, ccw: bool) -> str:
    large = 1 if extent > math.pi else 0
    sweep = 0 if ccw else 1
    return f"A {_f(c.radius)} {_f(c.radius)} 0 {large} {sweep} {_xy(c.point_at(to_angle))}"


def digon_path(fam: CircleFamily, d: DigonRecord) -> str:
    """Closed path around the digon: an arc of one supporting circle, then one of the other."""
    ci, cj = fam.circles[d.i], fam.circles[d.j]
    if d.kind is DigonKind.LENS:
        first, fc = arc_inside_disc(ci, cj, fam.tol), ci
        second, sc = arc_inside_disc(cj, ci, fam.tol), cj
    else:
        inner, outer = (d.i, d.j) if d.inside == d.i else (d.j, d.i)
        fc, sc = fam.circles[inner], fam.circles[outer]
        first = arc_inside_disc(fc, sc, fam.tol).complement()
        second = arc_inside_disc(sc, fc, fam.tol)
    start = first.start
    end = first.start + first.extent
    parts = [f"M {_xy(fc.point_at(start))}", _arc_cmd(fc, end, first.extent, True)]
    # continue along the second arc from wherever the first one ended
    here = fc.point_at(end)
    s_pt = sc.point_at(second.start)
    if math.dist(here, s_pt) < math.dist(here, sc.point_at(second.start + second.extent)):
        parts.append(_arc_cmd(sc, second.start + second.extent, second.extent, True))
    else:
        parts.append(_arc_cmd(sc, second.start, second.extent, False))
    parts.append("Z")
    return " ".join(parts)


def render_svg(fam: CircleFamily, digons: Sequence[DigonRecord] = (), graph: ColoredGraph = None,
               layers: Iterable[str] = LAYERS, size: int = 800) -> str:
    layers = set(layers)
    unknown = layers - set(LAYERS)
    if unknown:
        raise ValueError(f"unknown layers: {sorted(unknown)}")
    xmin = min(c.x - c.radius for c in fam.circles)
    xmax = max(c.x + c.radius for c in fam.circles)
    ymin = min(c.y - c.radius for c in fam.circles)
    ymax = max(c.y + c.radius for c in fam.circles)
    w, h = xmax - xmin, ymax - ymin
    mx, my = 0.1 * w, 0.1 * h
    vb = (xmin - mx, -(ymax + my), w + 2 * mx, h + 2 * my)
    stroke = 0.003 * max(vb[2], vb[3])
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{int(round(size * vb[3] / vb[2]))}" viewBox="{" ".join(_f(v) for v in vb)}">',
        f'<rect x="{_f(vb[0])}" y="{_f(vb[1])}" width="{_f(vb[2])}" height="{_f(vb[3])}" fill="white"/>',
    ]
    if "digons" in layers:
        out.append('<g id="digons" stroke="none">')
        for d in digons:
            fill = LENS_FILL if d.kind is DigonKind.LENS else LUNE_FILL
            out.append(f'<path class="{d.kind.value}" data-pair="{d.i},{d.j}" fill="{fill}" '
                       f'd="{digon_path(fam, d)}"/>')
        out.append("</g>")
    if "circles" in layers:
        out.append(f'<g id="circles" fill="none" stroke="black" stroke-width="{_f(stroke)}">')
        for k, c in enumerate(fam.circles):
            out.append(f'<circle data-index="{k}" cx="{_f(c.x)}" cy="{_f(-c.y)}" r="{_f(c.radius)}"/>')
        out.append("</g>")
    if "graph" in layers and graph is not None:
        out.append(f'<g id="graph" stroke-width="{_f(2 * stroke)}">')
        for e in graph.edges:
            a, b = e.segment.a, e.segment.b
            out.append(f'<line class="{e.color.value}" x1="{_f(a[0])}" y1="{_f(-a[1])}" '
                       f'x2="{_f(b[0])}" y2="{_f(-b[1])}" stroke="{EDGE_STROKE[e.color]}"/>')
        for k, p in enumerate(graph.centers):
            out.append(f'<circle class="center" cx="{_f(p[0])}" cy="{_f(-p[1])}" '
                       f'r="{_f(2.5 * stroke)}" fill="black"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
