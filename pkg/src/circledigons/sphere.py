"""Doubling the center graph onto the unit sphere.

The plane sits at z = -1 under a unit sphere centred at the origin. Centres are
projected centrally onto the southern hemisphere and every vertex gets its
antipode. A blue edge (u, v) becomes the arcs (u, v) and (-u, -v); a red edge
becomes (u, -v) and (-u, v), i.e. the rest of its great circle once the
projected segment and its reflection are removed. Vertex ``k + n`` is the
antipode of vertex ``k``.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from .geom import DEFAULT_TOL, Point, Segment, SegmentRelation, segment_relation
from .graph import Color, ColoredGraph, Label


class UnitVec3(NamedTuple):
    x: float
    y: float
    z: float

    def __neg__(self):
        return UnitVec3(-self.x, -self.y, -self.z)


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def unit(v) -> UnitVec3:
    s = math.sqrt(_dot(v, v))
    if s == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return UnitVec3(v[0] / s, v[1] / s, v[2] / s)


def project_to_sphere(p: Point) -> UnitVec3:
    return unit((p[0], p[1], -1.0))


@dataclass(frozen=True)
class GreatArc:
    """Minor great-circle arc between two non-antipodal unit vectors."""

    a: UnitVec3
    b: UnitVec3

    def __post_init__(self):
        a, b = unit(self.a), unit(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        n = _cross(a, b)
        if math.sqrt(_dot(n, n)) <= DEFAULT_TOL:
            raise ValueError("arc endpoints coincide or are antipodal")

    @property
    def angle(self) -> float:
        n = _cross(self.a, self.b)
        return math.atan2(math.sqrt(_dot(n, n)), _dot(self.a, self.b))

    def point_at(self, t: float) -> UnitVec3:
        """Point at fraction ``t`` of the way from ``a`` to ``b`` (spherical interpolation)."""
        th = self.angle
        s = math.sin(th)
        wa, wb = math.sin((1 - t) * th) / s, math.sin(t * th) / s
        return unit(tuple(wa * self.a[k] + wb * self.b[k] for k in range(3)))


class ArcRelation(enum.Enum):
    DISJOINT = "disjoint"     # includes touching at endpoints
    CROSS = "cross"
    OVERLAP = "overlap"       # same great circle, shared piece of positive length


_CODES = {0: ArcRelation.DISJOINT, 1: ArcRelation.CROSS, 2: ArcRelation.OVERLAP}


def arc_relation(p: GreatArc, q: GreatArc, tol: float = DEFAULT_TOL) -> ArcRelation:
    return _CODES[kernels.active.arc_pair_code(p.a, p.b, q.a, q.b, tol)]


def great_arcs_cross(p: GreatArc, q: GreatArc, tol: float = DEFAULT_TOL) -> bool:
    """Minor arcs meet at a point interior to both (overlap on one great circle also counts)."""
    return arc_relation(p, q, tol) is not ArcRelation.DISJOINT


# six gnomonic charts, one per cube face
_AXES = [(1.0, 0.0, 0.0), (-1.0, 0.0, 0.0), (0.0, 1.0, 0.0),
         (0.0, -1.0, 0.0), (0.0, 0.0, 1.0), (0.0, 0.0, -1.0)]


def _chart(axis, x):
    u = (axis[1], axis[2], axis[0])   # any two vectors orthogonal to the axis
    w = _cross(axis, u)
    d = _dot(axis, x)
    return Point(_dot(x, u) / d, _dot(x, w) / d)


def arcs_cross_by_subdivision(p: GreatArc, q: GreatArc, pieces: int = 64, tol: float = DEFAULT_TOL) -> bool:
    """Slow check of ``great_arcs_cross``: split both arcs into sub-arcs and test them as straight
    segments in the gnomonic chart of each cube face (great circles map to lines there)."""
    ps = [p.point_at(t / pieces) for t in range(pieces + 1)]
    qs = [q.point_at(t / pieces) for t in range(pieces + 1)]
    originals = (p.a, p.b, q.a, q.b)

    def is_original(x):
        return any(math.dist(x, o) < 1e-9 for o in originals)

    # sub-arcs can only meet if their midpoints are within the sum of their half-lengths
    mp = np.array([p.point_at((t + 0.5) / pieces) for t in range(pieces)])
    mq = np.array([q.point_at((t + 0.5) / pieces) for t in range(pieces)])
    reach = (p.angle + q.angle) / (2 * pieces) + 1e-6
    near = np.linalg.norm(mp[:, None, :] - mq[None, :, :], axis=2) <= reach
    candidates = list(zip(*np.nonzero(near)))

    for axis in _AXES:
        for s, t in candidates:
            a0, a1, b0, b1 = ps[s], ps[s + 1], qs[t], qs[t + 1]
            if min(_dot(axis, x) for x in (a0, a1, b0, b1)) <= 0.5:
                continue
            e = Segment(_chart(axis, a0), _chart(axis, a1))
            f = Segment(_chart(axis, b0), _chart(axis, b1))
            rel = segment_relation(e, f, tol)
            if rel is SegmentRelation.CROSS or rel is SegmentRelation.OVERLAP:
                return True
            if rel is SegmentRelation.TOUCH:
                # touching at a sub-arc joint is an interior meeting; at an original endpoint it is not
                for x, seg in ((a0, f), (a1, f), (b0, e), (b1, e)):
                    if _point_on(_chart(axis, x), seg, tol) and not is_original(x):
                        return True
    return False


def _point_on(x: Point, s: Segment, tol: float) -> bool:
    dx, dy = s.b[0] - s.a[0], s.b[1] - s.a[1]
    t = min(1.0, max(0.0, ((x[0] - s.a[0]) * dx + (x[1] - s.a[1]) * dy) / (dx * dx + dy * dy)))
    return math.hypot(x[0] - s.a[0] - t * dx, x[1] - s.a[1] - t * dy) <= tol


# --- doubled graph -------------------------------------------------------


@dataclass(frozen=True)
class SphereEdge:
    u: int
    v: int
    color: Color


@dataclass(frozen=True)
class SphereGraph:
    vertices: tuple     # 2n UnitVec3, vertex k + n is the antipode of vertex k
    edges: tuple
    parts: tuple        # two frozensets of vertex ids
    tol: float = DEFAULT_TOL

    @property
    def n(self) -> int:
        return len(self.vertices) // 2

    def arc(self, e: SphereEdge) -> GreatArc:
        return GreatArc(self.vertices[e.u], self.vertices[e.v])


def build_doubled_graph(g: ColoredGraph) -> SphereGraph:
    if g.degenerate or g.n < 3:
        raise ValueError("doubling needs a labelled graph on at least three vertices")
    n = g.n
    for e in g.edges:
        for v in (e.i, e.j):
            if g.labels[v] is Label.UNCLASSIFIED:
                raise ValueError(f"vertex {v} has an edge but no internal/external label")
    south = [project_to_sphere(c) for c in g.centers]
    vertices = tuple(south + [-v for v in south])

    edges = []
    for e in g.edges:
        if e.color is Color.BLUE:
            edges += [SphereEdge(e.i, e.j, Color.BLUE), SphereEdge(e.i + n, e.j + n, Color.BLUE)]
        else:
            edges += [SphereEdge(e.i, e.j + n, Color.RED), SphereEdge(e.i + n, e.j, Color.RED)]
            # the rerouted arcs continue the projected segment's great circle beyond its ends
            original = GreatArc(vertices[e.i], vertices[e.j])
            for u, v in ((e.i, e.j + n), (e.i + n, e.j)):
                rel = arc_relation(original, GreatArc(vertices[u], vertices[v]), g.tol)
                if rel is not ArcRelation.DISJOINT:
                    raise RuntimeError(f"rerouted red arc ({u}, {v}) meets the original segment arc")

    internal = {v for v in range(n) if g.labels[v] is Label.INTERNAL}
    rest = set(range(n)) - internal
    part_a = frozenset(rest | {v + n for v in internal})        # A u -B
    part_b = frozenset(internal | {v + n for v in rest})        # B u -A
    return SphereGraph(vertices, tuple(edges), (part_a, part_b), g.tol)


@dataclass
class GPrimeReport:
    n: int
    edges: int
    crossings: list = field(default_factory=list)
    bipartite_violations: list = field(default_factory=list)

    @property
    def edge_bound(self) -> int:
        return 2 * (2 * self.n) - 4

    @property
    def noncrossing(self) -> bool:
        return not self.crossings

    @property
    def bipartite(self) -> bool:
        return not self.bipartite_violations

    @property
    def within_edge_bound(self) -> bool:
        return self.edges <= self.edge_bound

    @property
    def passed(self) -> bool:
        return self.noncrossing and self.bipartite and self.within_edge_bound

    def as_dict(self) -> dict:
        return {
            "noncrossing": {"pass": self.noncrossing, "violations": self.crossings},
            "bipartite": {"pass": self.bipartite, "violations": self.bipartite_violations},
            "edge_bound": {"pass": self.within_edge_bound, "edges": self.edges, "max": self.edge_bound},
            "pass": self.passed,
        }


def _two_coloring(nv: int, edges):
    """BFS 2-colouring; returns (colour, component id, odd-cycle witnesses) per vertex."""
    adj = [[] for _ in range(nv)]
    for e in edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    color, comp, odd = {}, {}, []
    for s in range(nv):
        if s in color or not adj[s]:
            continue
        color[s], comp[s] = 0, s
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y], comp[y] = 1 - color[x], s
                    queue.append(y)
                elif color[y] == color[x]:
                    odd.append((x, y))
    return color, comp, odd


def verify_gprime(sg: SphereGraph, backend=None) -> GPrimeReport:
    rep = GPrimeReport(sg.n, len(sg.edges))
    if sg.edges:
        ends = np.array([[*sg.vertices[e.u], *sg.vertices[e.v]] for e in sg.edges])
        ids = np.array([[e.u, e.v] for e in sg.edges], dtype=np.int64)
        for p, q, code in kernels.get(backend).arc_crossings(ends, ids, sg.tol):
            ep, eq = sg.edges[p], sg.edges[q]
            rep.crossings.append({"arcs": [[ep.u, ep.v, ep.color.value], [eq.u, eq.v, eq.color.value]],
                                  "relation": _CODES[code].value})

    part_a, part_b = sg.parts
    for e in sg.edges:
        if not ((e.u in part_a and e.v in part_b) or (e.u in part_b and e.v in part_a)):
            rep.bipartite_violations.append({"arc": [e.u, e.v, e.color.value], "reason": "same part"})
    color, comp, odd = _two_coloring(len(sg.vertices), sg.edges)
    for x, y in odd:
        rep.bipartite_violations.append({"arc": [x, y], "reason": "odd cycle"})
    # per component the BFS colouring must equal the declared parts up to a swap
    flips = {}
    for v, c in sorted(color.items()):
        flip = c ^ (0 if v in part_a else 1)
        if flips.setdefault(comp[v], flip) != flip:
            rep.bipartite_violations.append({"vertex": v, "reason": "coloring disagrees with parts"})
    return rep
