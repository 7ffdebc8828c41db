"""Planar primitives: circles, arcs as angular intervals, segment predicates, inversion.

Every predicate takes an absolute tolerance ``tol`` (default ``DEFAULT_TOL``).
Inputs are double precision; nothing here attempts exact arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

TAU = 2.0 * math.pi
DEFAULT_TOL = 1e-9


def check_tol(tol: float) -> float:
    if not (0.0 < tol < 1e-3) or not math.isfinite(tol):
        raise ValueError(f"tolerance must satisfy 0 < tol < 1e-3, got {tol!r}")
    return float(tol)


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        x, y = self.center
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"circle center must be finite, got {self.center!r}")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"radius must be positive and finite, got {self.radius!r}")
        object.__setattr__(self, "center", Point(float(x), float(y)))
        object.__setattr__(self, "radius", float(self.radius))

    @classmethod
    def at(cls, x: float, y: float, r: float) -> "Circle":
        return cls(Point(x, y), r)

    @property
    def x(self) -> float:
        return self.center.x

    @property
    def y(self) -> float:
        return self.center.y

    def point_at(self, angle: float) -> Point:
        return Point(self.x + self.radius * math.cos(angle), self.y + self.radius * math.sin(angle))

    def angle_of(self, p: Point) -> float:
        """Angle of ``p`` seen from the center, normalized to [0, 2*pi)."""
        return normalize_angle(math.atan2(p[1] - self.y, p[0] - self.x))

    def signed_distance(self, p: Point) -> float:
        """Distance from ``p`` to the curve; negative inside the disc."""
        return math.hypot(p[0] - self.x, p[1] - self.y) - self.radius


def normalize_angle(a: float) -> float:
    a = math.fmod(a, TAU)
    if a < 0.0:
        a += TAU
    if a >= TAU:
        a = 0.0
    return a


def dist(p: Point, q: Point) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


# --- circle/circle -------------------------------------------------------


class IntersectionKind(enum.Enum):
    TWO_POINTS = "two_points"
    TANGENT = "tangent"
    DISJOINT = "disjoint"
    NESTED = "nested"
    IDENTICAL = "identical"


@dataclass(frozen=True)
class CircleIntersection:
    kind: IntersectionKind
    points: tuple = ()

    @property
    def crossing(self) -> bool:
        return self.kind is IntersectionKind.TWO_POINTS


def circle_circle_intersection(c1: Circle, c2: Circle, tol: float = DEFAULT_TOL) -> CircleIntersection:
    """Classify a pair of circles and return their crossing points.

    For two crossing circles the point to the left of the directed line
    from ``c1.center`` to ``c2.center`` comes first. Internal tangency is
    reported as NESTED, external tangency as TANGENT.
    """
    dx = c2.x - c1.x
    dy = c2.y - c1.y
    d = math.hypot(dx, dy)
    r1, r2 = c1.radius, c2.radius
    if d <= tol and abs(r1 - r2) <= tol:
        return CircleIntersection(IntersectionKind.IDENTICAL)
    if d > r1 + r2 + tol:
        return CircleIntersection(IntersectionKind.DISJOINT)
    if d >= r1 + r2 - tol:
        return CircleIntersection(IntersectionKind.TANGENT)
    if d <= abs(r1 - r2) + tol:
        return CircleIntersection(IntersectionKind.NESTED)
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    ux, uy = dx / d, dy / d
    mx, my = c1.x + a * ux, c1.y + a * uy
    left = Point(mx - h * uy, my + h * ux)
    right = Point(mx + h * uy, my - h * ux)
    return CircleIntersection(IntersectionKind.TWO_POINTS, (left, right))


# --- arcs ----------------------------------------------------------------


@dataclass(frozen=True)
class AngularInterval:
    """Open counterclockwise arc from ``start`` to ``start + extent`` on circle ``circle_index``."""

    circle_index: int
    start: float
    extent: float

    def __post_init__(self):
        if not (0.0 < self.extent < TAU):
            raise ValueError(f"arc extent must lie in (0, 2*pi), got {self.extent!r}")
        object.__setattr__(self, "start", normalize_angle(self.start))

    @property
    def end(self) -> float:
        return normalize_angle(self.start + self.extent)

    @property
    def mid(self) -> float:
        return normalize_angle(self.start + 0.5 * self.extent)

    def contains_angle(self, a: float, eps: float = 0.0) -> bool:
        """True if ``a`` is strictly inside the arc, by more than ``eps`` radians."""
        off = normalize_angle(a - self.start)
        return eps < off < self.extent - eps

    def complement(self) -> "AngularInterval":
        return AngularInterval(self.circle_index, self.end, TAU - self.extent)


def arc_inside_disc(c: Circle, d: Circle, tol: float = DEFAULT_TOL, index: int = -1) -> AngularInterval:
    """The open arc of ``c`` lying strictly inside the disc bounded by ``d``.

    The arc is symmetric about the ray from ``c``'s center towards ``d``'s center.
    """
    hit = circle_circle_intersection(c, d, tol)
    if not hit.crossing:
        raise ValueError(f"circles do not cross ({hit.kind.value}); no arc inside disc")
    dx, dy = d.x - c.x, d.y - c.y
    sep = math.hypot(dx, dy)
    cos_half = (c.radius * c.radius + sep * sep - d.radius * d.radius) / (2.0 * c.radius * sep)
    half = math.acos(min(1.0, max(-1.0, cos_half)))
    toward = math.atan2(dy, dx)
    return AngularInterval(index, toward - half, 2.0 * half)


def arc_midpoint(c: Circle, iv: AngularInterval) -> Point:
    return c.point_at(iv.start + 0.5 * iv.extent)


def intervals_disjoint(a: AngularInterval, b: AngularInterval, eps: float = 0.0) -> bool:
    """Open arcs on the same circle share no point (overlaps shorter than ``eps`` ignored)."""
    return (normalize_angle(b.start - a.start) >= a.extent - eps
            and normalize_angle(a.start - b.start) >= b.extent - eps)


def interval_within(a: AngularInterval, b: AngularInterval, eps: float = 0.0) -> bool:
    """Open arc ``a`` lies inside the closure of ``b`` (up to ``eps`` radians)."""
    off = normalize_angle(a.start - b.start)
    if off > TAU - eps:
        off -= TAU
    return off + a.extent <= b.extent + eps


# --- segments ------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", Point(*map(float, self.a)))
        object.__setattr__(self, "b", Point(*map(float, self.b)))
        if dist(self.a, self.b) <= DEFAULT_TOL:
            raise ValueError("degenerate segment: endpoints coincide")

    @property
    def length(self) -> float:
        return dist(self.a, self.b)


def _side(a: Point, b: Point, p: Point, tol: float) -> int:
    """Which side of line ab the point p is on: +1 left, -1 right, 0 within tol of the line."""
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    if abs(cross) <= tol * dist(a, b):
        return 0
    return 1 if cross > 0 else -1


def _param(s: Segment, p: Point) -> float:
    dx, dy = s.b[0] - s.a[0], s.b[1] - s.a[1]
    return ((p[0] - s.a[0]) * dx + (p[1] - s.a[1]) * dy) / (dx * dx + dy * dy)


class SegmentRelation(enum.Enum):
    DISJOINT = "disjoint"
    CROSS = "cross"        # interiors meet in exactly one point
    TOUCH = "touch"        # meet only at an endpoint of at least one segment
    OVERLAP = "overlap"    # collinear with a shared piece of positive length


def segment_relation(e: Segment, f: Segment, tol: float = DEFAULT_TOL) -> SegmentRelation:
    s1 = _side(e.a, e.b, f.a, tol)
    s2 = _side(e.a, e.b, f.b, tol)
    s3 = _side(f.a, f.b, e.a, tol)
    s4 = _side(f.a, f.b, e.b, tol)
    if s1 == s2 == 0:
        # collinear: compare parameter ranges along e
        t0, t1 = sorted((_param(e, f.a), _param(e, f.b)))
        lo, hi = max(t0, 0.0), min(t1, 1.0)
        slack = tol / e.length
        if hi - lo > slack:
            return SegmentRelation.OVERLAP
        if hi - lo >= -slack:
            return SegmentRelation.TOUCH
        return SegmentRelation.DISJOINT
    if s1 * s2 < 0 and s3 * s4 < 0:
        return SegmentRelation.CROSS
    if s1 * s2 > 0 or s3 * s4 > 0:
        return SegmentRelation.DISJOINT
    # some endpoint is on the other segment's line: touching iff it also lies within the segment
    for p, s in ((f.a, e), (f.b, e), (e.a, f), (e.b, f)):
        if _point_segment_distance(p, s) <= tol:
            return SegmentRelation.TOUCH
    return SegmentRelation.DISJOINT


def _point_segment_distance(p: Point, s: Segment) -> float:
    t = min(1.0, max(0.0, _param(s, p)))
    return dist(p, Point(s.a[0] + t * (s.b[0] - s.a[0]), s.a[1] + t * (s.b[1] - s.a[1])))


def segment_distance(e: Segment, f: Segment, tol: float = DEFAULT_TOL) -> float:
    if segment_relation(e, f, tol) in (SegmentRelation.CROSS, SegmentRelation.OVERLAP):
        return 0.0
    return min(_point_segment_distance(e.a, f), _point_segment_distance(e.b, f),
               _point_segment_distance(f.a, e), _point_segment_distance(f.b, e))


def segments_properly_cross(e: Segment, f: Segment, tol: float = DEFAULT_TOL) -> bool:
    """Interiors meet in one point. Collinear overlap also counts (see ``segment_relation``)."""
    return segment_relation(e, f, tol) in (SegmentRelation.CROSS, SegmentRelation.OVERLAP)


def line_intersection_params(e: Segment, f: Segment, tol: float = DEFAULT_TOL) -> Optional[tuple[float, float]]:
    """Parameters (t, u) with e.a + t(e.b-e.a) = f.a + u(f.b-f.a); None for parallel lines."""
    ex, ey = e.b[0] - e.a[0], e.b[1] - e.a[1]
    fx, fy = f.b[0] - f.a[0], f.b[1] - f.a[1]
    den = ex * fy - ey * fx
    if abs(den) <= tol * e.length * f.length:
        return None
    gx, gy = f.a[0] - e.a[0], f.a[1] - e.a[1]
    return (gx * fy - gy * fx) / den, (gx * ey - gy * ex) / den


def segments_avoiding(e: Segment, f: Segment, tol: float = DEFAULT_TOL) -> bool:
    """Supporting lines meet in a point outside both closed segments."""
    params = line_intersection_params(e, f, tol)
    if params is None:
        return False
    t, u = params
    te, uf = tol / e.length, tol / f.length
    return (t < -te or t > 1.0 + te) and (u < -uf or u > 1.0 + uf)


def line_of_first_hits_second(e: Segment, f: Segment, tol: float = DEFAULT_TOL) -> bool:
    """``e`` and ``f`` are disjoint and the full line through ``e`` meets the closed segment ``f``."""
    if segment_relation(e, f, tol) is not SegmentRelation.DISJOINT:
        return False
    if segment_distance(e, f, tol) <= tol:
        return False
    s1 = _side(e.a, e.b, f.a, tol)
    s2 = _side(e.a, e.b, f.b, tol)
    return s1 * s2 <= 0


# --- inversion -----------------------------------------------------------


def invert_point(p: Point, center: Point, k: float) -> Point:
    dx, dy = p[0] - center[0], p[1] - center[1]
    q = dx * dx + dy * dy
    if q == 0.0:
        raise ValueError("cannot invert the inversion center")
    return Point(center[0] + k * dx / q, center[1] + k * dy / q)


def invert_circle(c: Circle, center: Point, k: float, tol: float = DEFAULT_TOL) -> Circle:
    """Image of ``c`` under p -> center + k (p - center) / |p - center|^2."""
    if not k > 0:
        raise ValueError(f"inversion power must be positive, got {k!r}")
    dx, dy = c.x - center[0], c.y - center[1]
    d2 = dx * dx + dy * dy
    if abs(math.sqrt(d2) - c.radius) <= tol:
        raise ValueError("inversion center lies on the circle; the image would be a line")
    s = k / (d2 - c.radius * c.radius)
    return Circle(Point(center[0] + s * dx, center[1] + s * dy), abs(s) * c.radius)


# --- disc separation -----------------------------------------------------


class PreconditionError(ValueError):
    pass


def discs_separate_segments(A: Point, B: Point, Ap: Point, Bp: Point, D: Circle, Dp: Circle,
                            tol: float = DEFAULT_TOL) -> bool:
    """Whether [AB] and [A'B'] are disjoint, given discs D (holding A, B only) and D' (holding A', B' only).

    Raises PreconditionError if the discs do not separate the point pairs as required.
    """
    for name, p in (("A", A), ("B", B)):
        if D.signed_distance(p) > tol:
            raise PreconditionError(f"{name} is not inside D")
        if Dp.signed_distance(p) <= tol:
            raise PreconditionError(f"{name} is inside D'")
    for name, p in (("A'", Ap), ("B'", Bp)):
        if Dp.signed_distance(p) > tol:
            raise PreconditionError(f"{name} is not inside D'")
        if D.signed_distance(p) <= tol:
            raise PreconditionError(f"{name} is inside D")
    e, f = Segment(A, B), Segment(Ap, Bp)
    return segment_relation(e, f, tol) is SegmentRelation.DISJOINT
