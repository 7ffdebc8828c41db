"""Simple arrangements of pairwise crossing circles: validation, digon detection, census.

Two independent digon detectors live here. ``detect_digons_pairwise`` works on
angular intervals only and is what the rest of the package uses;
``build_arrangement`` + ``enumerate_digon_faces`` walk the faces of a
half-edge structure and serve as its oracle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .geom import (
    DEFAULT_TOL,
    TAU,
    Circle,
    IntersectionKind,
    Point,
    check_tol,
    circle_circle_intersection,
    normalize_angle,
)


class FailureKind(enum.Enum):
    NOT_INTERSECTING = "NotIntersecting"
    TANGENT = "Tangent"
    NESTED = "Nested"
    TRIPLE_POINT = "TriplePoint"
    NEAR_DEGENERATE = "NearDegenerate"


class ValidationError(ValueError):
    """A circle list that is not a simple arrangement of pairwise crossing circles."""

    def __init__(self, kind: FailureKind, indices: tuple, detail: str = ""):
        self.kind = kind
        self.indices = tuple(indices)
        self.detail = detail
        msg = f"{kind.value}{self.indices}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


_PAIR_FAILURES = {
    IntersectionKind.DISJOINT: FailureKind.NOT_INTERSECTING,
    IntersectionKind.TANGENT: FailureKind.TANGENT,
    IntersectionKind.NESTED: FailureKind.NESTED,
    IntersectionKind.IDENTICAL: FailureKind.NEAR_DEGENERATE,
}


@dataclass(frozen=True)
class CircleFamily:
    """A validated family. Build it with ``validate_family``, not directly."""

    circles: tuple
    tol: float = DEFAULT_TOL
    # vertex table: pair (i, j) -> (left point, right point)
    crossings: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.circles)

    def __len__(self):
        return len(self.circles)

    def __iter__(self):
        return iter(self.circles)

    def __getitem__(self, i):
        return self.circles[i]

    def arrays(self):
        cx = np.array([c.x for c in self.circles])
        cy = np.array([c.y for c in self.circles])
        r = np.array([c.radius for c in self.circles])
        return cx, cy, r


def validate_family(circles: Iterable[Circle], tol: float = DEFAULT_TOL) -> CircleFamily:
    circles = tuple(circles)
    tol = check_tol(tol)
    n = len(circles)
    if n < 2:
        raise ValueError(f"a family needs at least two circles, got {n}")
    crossings = {}
    for i, j in combinations(range(n), 2):
        hit = circle_circle_intersection(circles[i], circles[j], tol)
        if not hit.crossing:
            raise ValidationError(_PAIR_FAILURES[hit.kind], (i, j), hit.kind.value)
        crossings[(i, j)] = hit.points

    pairs = list(crossings)
    pts = np.array([p for pair in pairs for p in crossings[pair]])
    owners = [pair for pair in pairs for _ in range(2)]
    cx = np.array([c.x for c in circles])
    cy = np.array([c.y for c in circles])
    r = np.array([c.radius for c in circles])

    # distance of every crossing point to every curve
    gap = np.abs(np.hypot(pts[:, 0:1] - cx[None, :], pts[:, 1:2] - cy[None, :]) - r[None, :])
    for v, (i, j) in enumerate(owners):
        gap[v, i] = gap[v, j] = np.inf
    bad = np.argwhere(gap <= tol)
    if len(bad):
        v, k = bad[0]
        i, j = owners[v]
        raise ValidationError(FailureKind.TRIPLE_POINT, tuple(sorted((i, j, int(k)))),
                              f"crossing of {i},{j} lies within tol of circle {k}")

    sep = np.hypot(pts[:, None, 0] - pts[None, :, 0], pts[:, None, 1] - pts[None, :, 1])
    np.fill_diagonal(sep, np.inf)
    close = np.argwhere(sep <= tol)
    if len(close):
        a, b = close[0]
        raise ValidationError(FailureKind.NEAR_DEGENERATE, owners[a] + owners[b],
                              "two crossing points closer than tol")
    return CircleFamily(circles, tol, crossings)


# --- digon records -------------------------------------------------------


class DigonKind(enum.Enum):
    LENS = "lens"
    LUNE = "lune"


@dataclass(frozen=True)
class DigonRecord:
    """A digon supported by circles ``i < j``. For a lune, ``inside`` is the disc holding it."""

    i: int
    j: int
    kind: DigonKind
    inside: Optional[int] = None

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError(f"digon indices must satisfy i < j, got {self.i}, {self.j}")
        if self.kind is DigonKind.LENS and self.inside is not None:
            raise ValueError("a lens lies inside both discs; 'inside' must be None")
        if self.kind is DigonKind.LUNE and self.inside not in (self.i, self.j):
            raise ValueError("a lune must name which of its two discs holds it")

    @property
    def outside(self) -> Optional[int]:
        if self.kind is DigonKind.LENS:
            return None
        return self.j if self.inside == self.i else self.i

    @property
    def sort_key(self):
        rank = 0 if self.kind is DigonKind.LENS else (1 if self.inside == self.i else 2)
        return (self.i, self.j, rank)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        if self.kind is DigonKind.LENS:
            return f"Lens({self.i},{self.j})"
        return f"Lune({self.i},{self.j} inside {self.inside})"


def _record(i: int, j: int, code: int) -> DigonRecord:
    if code == 0:
        return DigonRecord(i, j, DigonKind.LENS)
    return DigonRecord(i, j, DigonKind.LUNE, i if code == 1 else j)


def detect_digons_pairwise(fam: CircleFamily, backend: Optional[str] = None) -> list[DigonRecord]:
    """Digons found pair by pair from arcs of third circles; sorted by (i, j, kind)."""
    cx, cy, r = fam.arrays()
    found = kernels.get(backend).pairwise_digons(cx, cy, r, fam.tol)
    return sorted(_record(i, j, code) for i, j, code in found)


# --- half-edge structure -------------------------------------------------


@dataclass
class HalfEdge:
    circle: int
    origin: int
    dest: int
    ccw: bool          # traverses its circle counterclockwise, so the disc is on the left
    twin: int = -1
    next: int = -1
    face: int = -1


@dataclass
class Face:
    half_edges: tuple
    unbounded: bool = False


@dataclass
class Arrangement:
    vertices: list        # Point per vertex
    vertex_pairs: list    # (i, j) circle pair per vertex
    half_edges: list
    faces: list
    n_circles: int

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.half_edges) // 2

    @property
    def F(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return sum(1 for h in self.half_edges if h.origin == v)


def _tangent_angle(circle: Circle, p: Point, ccw: bool) -> float:
    theta = math.atan2(p[1] - circle.y, p[0] - circle.x)
    return normalize_angle(theta + (0.5 if ccw else -0.5) * math.pi)


def build_arrangement(fam: CircleFamily) -> Arrangement:
    circles = fam.circles
    n = fam.n
    vertices, vertex_pairs = [], []
    on_circle = [[] for _ in range(n)]
    for (i, j), pts in sorted(fam.crossings.items()):
        for p in pts:
            v = len(vertices)
            vertices.append(p)
            vertex_pairs.append((i, j))
            on_circle[i].append((circles[i].angle_of(p), v))
            on_circle[j].append((circles[j].angle_of(p), v))

    half_edges: list[HalfEdge] = []
    # per circle, the (angle interval start, length, ccw half-edge id) of every edge
    circle_edges = [[] for _ in range(n)]
    for c, entries in enumerate(on_circle):
        entries.sort()
        m = len(entries)
        for s in range(m):
            a0, v0 = entries[s]
            a1, v1 = entries[(s + 1) % m]
            h = len(half_edges)
            half_edges.append(HalfEdge(c, v0, v1, True, twin=h + 1))
            half_edges.append(HalfEdge(c, v1, v0, False, twin=h))
            circle_edges[c].append((a0, normalize_angle(a1 - a0) or TAU, h))

    outgoing = [[] for _ in vertices]
    for h, he in enumerate(half_edges):
        ang = _tangent_angle(circles[he.circle], vertices[he.origin], he.ccw)
        outgoing[he.origin].append((ang, h))
    rank = {}
    for v, out in enumerate(outgoing):
        out.sort()
        for pos, (_, h) in enumerate(out):
            rank[h] = (v, pos)

    # face on the left: after arriving at v, leave along the clockwise neighbour of the twin
    for h, he in enumerate(half_edges):
        v, pos = rank[he.twin]
        out = outgoing[v]
        he.next = out[(pos - 1) % len(out)][1]

    faces = []
    for h in range(len(half_edges)):
        if half_edges[h].face != -1:
            continue
        cycle, g = [], h
        while half_edges[g].face == -1:
            half_edges[g].face = -2
            cycle.append(g)
            g = half_edges[g].next
        if g != h:
            raise RuntimeError("half-edge next pointers do not close into a cycle")
        faces.append(cycle)

    # leftmost point of the whole picture sits on the unbounded face
    c_left = min(range(n), key=lambda c: circles[c].x - circles[c].radius)
    unbounded_he = None
    for a0, length, h in circle_edges[c_left]:
        if normalize_angle(math.pi - a0) < length:
            unbounded_he = half_edges[h].twin
            break

    faces.sort(key=lambda cyc: sorted(half_edges[g].origin for g in cyc))
    face_objs = []
    for f, cycle in enumerate(faces):
        for g in cycle:
            half_edges[g].face = f
        face_objs.append(Face(tuple(cycle), unbounded=unbounded_he in cycle))
    return Arrangement(vertices, vertex_pairs, half_edges, face_objs, n)


class FaceClassificationError(RuntimeError):
    pass


def enumerate_digon_faces(arr: Arrangement) -> list[DigonRecord]:
    """Bounded faces with exactly two edges, classified by the discs they lie in."""
    out = []
    for f, face in enumerate(arr.faces):
        if face.unbounded or len(face.half_edges) != 2:
            continue
        h1, h2 = (arr.half_edges[g] for g in face.half_edges)
        if h1.circle == h2.circle:
            raise FaceClassificationError(f"face {f} is bounded by one circle twice")
        inside = {h1.circle: h1.ccw, h2.circle: h2.ccw}
        i, j = sorted(inside)
        if inside[i] and inside[j]:
            out.append(DigonRecord(i, j, DigonKind.LENS))
        elif inside[i] or inside[j]:
            out.append(DigonRecord(i, j, DigonKind.LUNE, i if inside[i] else j))
        else:
            raise FaceClassificationError(f"bounded two-edge face {f} lies inside neither disc {i}, {j}")
    return sorted(out)


# --- census --------------------------------------------------------------


@dataclass(frozen=True)
class Census:
    n: int
    lenses: int
    lunes: int

    @property
    def digons(self) -> int:
        return self.lenses + self.lunes

    @property
    def digon_bound(self) -> int:
        return 2 * self.n - 2

    @property
    def lune_bound(self) -> int:
        return 2 * self.n - 4

    @property
    def lens_bound(self) -> int:
        return 2 * self.n - 2

    @property
    def bounds_apply(self) -> bool:
        return self.n > 2

    @property
    def violations(self) -> list[str]:
        if not self.bounds_apply:
            return []
        out = []
        if self.digons > self.digon_bound:
            out.append(f"digons {self.digons} > 2n-2 = {self.digon_bound}")
        if self.lunes > self.lune_bound:
            out.append(f"lunes {self.lunes} > 2n-4 = {self.lune_bound}")
        if self.lenses > self.lens_bound:
            out.append(f"lenses {self.lenses} > 2n-2 = {self.lens_bound}")
        return out

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "lenses": self.lenses,
            "lunes": self.lunes,
            "digons": self.digons,
            "bounds": {
                "applicable": self.bounds_apply,
                "note": None if self.bounds_apply else "n <= 2",
                "digons_max": self.digon_bound,
                "lunes_max": self.lune_bound,
                "lunes_max_weak": 2 * self.n - 2,
                "lenses_max": self.lens_bound,
            },
            "violations": self.violations,
            "ok": self.ok,
        }


def census_of(n: int, digons: Sequence[DigonRecord]) -> Census:
    lenses = sum(1 for d in digons if d.kind is DigonKind.LENS)
    return Census(n, lenses, len(digons) - lenses)


def digon_census(fam: CircleFamily, digons: Optional[Sequence[DigonRecord]] = None) -> Census:
    if digons is None:
        digons = detect_digons_pairwise(fam)
    return census_of(fam.n, digons)
