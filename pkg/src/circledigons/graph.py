"""Red/blue geometric graph on circle centers and the forbidden-configuration checks.

Red edges join circles that create a lens, blue edges circles that create a
lune. Each ``verify_*`` function scans one forbidden pattern and returns a
``LemmaReport`` listing every offending pair it finds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .arrangement import CircleFamily, DigonKind, DigonRecord
from .geom import (
    DEFAULT_TOL,
    Point,
    Segment,
    SegmentRelation,
    line_of_first_hits_second,
    segment_relation,
    segments_avoiding,
)


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"


class Label(enum.Enum):
    INTERNAL = "internal"
    EXTERNAL = "external"
    UNCLASSIFIED = "unclassified"


class BothInternalAndExternal(RuntimeError):
    """A circle supports a digon inside its disc and a lune outside it."""

    def __init__(self, circles):
        self.circles = tuple(circles)
        super().__init__(f"circles both internal and external: {list(self.circles)}")


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    color: Color
    segment: Segment

    def shares_vertex(self, other: "Edge") -> bool:
        return bool({self.i, self.j} & {other.i, other.j})

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "color": self.color.value,
                "a": list(self.segment.a), "b": list(self.segment.b)}


@dataclass(frozen=True)
class ColoredGraph:
    centers: tuple          # Point per vertex, indexed like the family
    edges: tuple
    labels: tuple           # Label per vertex
    tol: float = DEFAULT_TOL
    degenerate: bool = False   # n <= 2: the lone pair is both red and blue, labels meaningless
    both_colors: tuple = ()    # vertex pairs carrying a red and a blue edge

    @property
    def n(self) -> int:
        return len(self.centers)

    def colored(self, color: Color) -> list[Edge]:
        return [e for e in self.edges if e.color is color]

    @property
    def red(self) -> list[Edge]:
        return self.colored(Color.RED)

    @property
    def blue(self) -> list[Edge]:
        return self.colored(Color.BLUE)


@dataclass
class LemmaReport:
    lemma: str
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"lemma": self.lemma, "pass": self.passed, "violations": self.violations}


def classify_circles(n: int, digons: Sequence[DigonRecord]) -> tuple:
    """Internal/external/unclassified label per circle.

    Raises BothInternalAndExternal if some circle earns both labels.
    """
    internal, external = set(), set()
    for d in digons:
        if d.kind is DigonKind.LENS:
            internal.update((d.i, d.j))
        else:
            internal.add(d.inside)
            external.add(d.outside)
    clash = internal & external
    if clash:
        raise BothInternalAndExternal(sorted(clash))
    return tuple(
        Label.INTERNAL if c in internal else Label.EXTERNAL if c in external else Label.UNCLASSIFIED
        for c in range(n)
    )


def build_colored_graph(fam: CircleFamily, digons: Sequence[DigonRecord]) -> ColoredGraph:
    n = fam.n
    for d in digons:
        if not (0 <= d.i < n and 0 <= d.j < n):
            raise IndexError(f"digon {d} refers to a circle outside the family of {n}")
    centers = tuple(c.center for c in fam.circles)
    red = sorted({(d.i, d.j) for d in digons if d.kind is DigonKind.LENS})
    blue = sorted({(d.i, d.j) for d in digons if d.kind is DigonKind.LUNE})
    edges = tuple(
        Edge(i, j, color, Segment(centers[i], centers[j]))
        for color, pairs in ((Color.RED, red), (Color.BLUE, blue))
        for i, j in pairs
    )
    degenerate = n <= 2
    labels = (Label.UNCLASSIFIED,) * n if degenerate else classify_circles(n, digons)
    return ColoredGraph(centers, edges, labels, fam.tol, degenerate,
                        tuple(sorted(set(red) & set(blue))))


def _violation(e: Edge, f: Edge, **extra) -> dict:
    return {"edges": [e.as_dict(), f.as_dict()], **extra}


def verify_lemma_lunes(g: ColoredGraph) -> LemmaReport:
    """No two blue edges cross."""
    rep = LemmaReport("lunes_noncrossing")
    for e, f in combinations(g.blue, 2):
        if e.shares_vertex(f):
            continue
        rel = segment_relation(e.segment, f.segment, g.tol)
        if rel in (SegmentRelation.CROSS, SegmentRelation.OVERLAP):
            rep.violations.append(_violation(e, f, relation=rel.value))
    return rep


def verify_lemma_lenses(g: ColoredGraph) -> LemmaReport:
    """No two red edges are avoiding."""
    rep = LemmaReport("lenses_no_avoiding_pair")
    for e, f in combinations(g.red, 2):
        if e.shares_vertex(f):
            continue
        if segments_avoiding(e.segment, f.segment, g.tol):
            rep.violations.append(_violation(e, f))
    return rep


def verify_lemma_mixed(g: ColoredGraph) -> LemmaReport:
    """No red edge whose line hits a blue edge disjoint from it."""
    rep = LemmaReport("red_line_misses_blue")
    for e in g.red:
        for f in g.blue:
            if e.shares_vertex(f):
                continue
            if line_of_first_hits_second(e.segment, f.segment, g.tol):
                rep.violations.append(_violation(e, f))
    return rep


def verify_bipartite_structure(g: ColoredGraph) -> LemmaReport:
    """Blue edges join internal to external circles; red edges join two internal circles."""
    rep = LemmaReport("internal_external_structure")
    if g.degenerate:
        return rep
    for e in g.edges:
        pair = {g.labels[e.i], g.labels[e.j]}
        want = {Label.INTERNAL, Label.EXTERNAL} if e.color is Color.BLUE else {Label.INTERNAL}
        if pair != want:
            rep.violations.append({"edge": e.as_dict(),
                                   "labels": [g.labels[e.i].value, g.labels[e.j].value]})
    return rep


def synthetic_graph(points: Sequence, red=(), blue=(), labels=None, tol: float = DEFAULT_TOL) -> ColoredGraph:
    """Hand-built graph for exercising the verifiers on planted configurations."""
    centers = tuple(Point(*map(float, p)) for p in points)
    edges = tuple(
        Edge(i, j, color, Segment(centers[i], centers[j]))
        for color, pairs in ((Color.RED, red), (Color.BLUE, blue))
        for i, j in pairs
    )
    if labels is None:
        labels = (Label.UNCLASSIFIED,) * len(centers)
    return ColoredGraph(centers, edges, tuple(labels), tol)
