import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from circledigons.arrangement import detect_digons_pairwise
from circledigons.generators import GeneratorParams, free_family, random_family, tight_family
from circledigons.geom import Point
from circledigons.graph import Color, Label, build_colored_graph, synthetic_graph
from circledigons.sphere import (
    ArcRelation,
    GreatArc,
    SphereEdge,
    SphereGraph,
    UnitVec3,
    arc_relation,
    arcs_cross_by_subdivision,
    build_doubled_graph,
    great_arcs_cross,
    project_to_sphere,
    verify_gprime,
)

I, E, U = Label.INTERNAL, Label.EXTERNAL, Label.UNCLASSIFIED
R2 = 1 / math.sqrt(2)


@pytest.mark.parametrize("p, expected", [
    ((0, 0), (0, 0, -1)),
    ((1, 0), (R2, 0, -R2)),
    ((3, 4), tuple(v / math.sqrt(26) for v in (3, 4, -1))),
])
def test_projection(p, expected):
    assert project_to_sphere(Point(*p)) == pytest.approx(expected, abs=1e-15)


@given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
def test_projection_lands_on_southern_hemisphere(x, y):
    v = project_to_sphere(Point(x, y))
    assert v.z < 0
    assert math.fsum(c * c for c in v) == pytest.approx(1.0, abs=1e-12)


def arc(a, b):
    return GreatArc(UnitVec3(*a), UnitVec3(*b))


def test_orthogonal_arcs_cross_at_shared_midpoint():
    p = arc((1, 0, 0), (0, 1, 0))
    q = arc((0.5, 0.5, R2), (0.5, 0.5, -R2))
    assert great_arcs_cross(p, q)
    assert arcs_cross_by_subdivision(p, q)
    assert p.point_at(0.5) == pytest.approx(q.point_at(0.5), abs=1e-12)


def test_antipodal_quarter_arcs_do_not_cross():
    p, q = arc((1, 0, 0), (0, 1, 0)), arc((-1, 0, 0), (0, -1, 0))
    assert not great_arcs_cross(p, q)
    assert not arcs_cross_by_subdivision(p, q)


def test_skew_quarter_arcs_do_not_cross():
    p, q = arc((1, 0, 0), (0, 0, 1)), arc((0, 1, 0), (0, 0, -1))
    assert not great_arcs_cross(p, q)
    t = np.linspace(0, 1, 10_000)
    sp = np.array([p.point_at(s) for s in t])
    sq = np.array([q.point_at(s) for s in t])
    # the nearest pair of sample points stays far apart (true minimum is sqrt(2))
    gram = sp @ sq.T
    assert math.sqrt(2 - 2 * gram.max()) > 1.0


def test_shared_endpoint_is_not_a_crossing():
    p, q = arc((1, 0, 0), (0, 1, 0)), arc((1, 0, 0), (0, 0, 1))
    assert arc_relation(p, q) is ArcRelation.DISJOINT


def test_overlap_on_one_great_circle_is_flagged():
    p = arc((1, 0, 0), (0, 1, 0))
    q = arc((R2, R2, 0), (-R2, R2, 0))
    assert arc_relation(p, q) is ArcRelation.OVERLAP
    assert great_arcs_cross(p, q)


def test_antipodal_endpoints_rejected():
    with pytest.raises(ValueError):
        arc((1, 0, 0), (-1, 0, 0))


def _random_arc(rng, max_angle):
    a = rng.normal(size=3)
    a /= np.linalg.norm(a)
    d = rng.normal(size=3)
    d -= d.dot(a) * a
    d /= np.linalg.norm(d)
    th = rng.uniform(0.05, max_angle)
    return GreatArc(UnitVec3(*a), UnitVec3(*(math.cos(th) * a + math.sin(th) * d)))


def test_production_matches_subdivision_oracle():
    rng = np.random.default_rng(2024)
    hits = 0
    for _ in range(3000):
        p, q = _random_arc(rng, 3.0), _random_arc(rng, 3.0)
        fast = great_arcs_cross(p, q)
        assert fast == arcs_cross_by_subdivision(p, q)
        hits += fast
    assert 200 < hits < 2800


def test_projection_fidelity():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b = rng.uniform(-20, 20, (2, 2))
        g = GreatArc(project_to_sphere(Point(*a)), project_to_sphere(Point(*b)))
        normal = np.cross(g.a, g.b)
        normal /= np.linalg.norm(normal)
        for t in np.linspace(0, 1, 64):
            v = np.array(project_to_sphere(Point(*(a + t * (b - a)))))
            assert abs(normal.dot(v)) < 1e-9
            ang = lambda x, y: math.atan2(np.linalg.norm(np.cross(x, y)), np.dot(x, y))
            assert ang(g.a, v) + ang(v, g.b) - g.angle < 1e-9


# --- doubling -------------------------------------------------------------


PTS = [(0, 0), (1, 0), (0, 1)]


def test_blue_edge_doubling():
    # vertex 0 internal (B1), vertex 1 external (A1)
    sg = build_doubled_graph(synthetic_graph(PTS, blue=[(0, 1)], labels=[I, E, U]))
    assert [(e.u, e.v, e.color) for e in sg.edges] == [(0, 1, Color.BLUE), (3, 4, Color.BLUE)]
    part_a, part_b = sg.parts
    assert {1, 3} <= part_a and {0, 4} <= part_b
    assert verify_gprime(sg).passed


def test_red_edge_doubling():
    sg = build_doubled_graph(synthetic_graph(PTS, red=[(0, 1)], labels=[I, I, U]))
    assert [(e.u, e.v) for e in sg.edges] == [(0, 4), (3, 1)]
    part_a, part_b = sg.parts
    for e in sg.edges:
        assert (e.u in part_a) != (e.v in part_a)
    assert verify_gprime(sg).passed


def test_vertex_layout():
    sg = build_doubled_graph(synthetic_graph(PTS, red=[(0, 1)], labels=[I, I, U]))
    for k in range(3):
        assert sg.vertices[k + 3] == pytest.approx(tuple(-c for c in sg.vertices[k]))
        assert sg.vertices[k].z < 0
    assert sorted(sg.parts[0] | sg.parts[1]) == list(range(6))
    assert not sg.parts[0] & sg.parts[1]


def test_tight_five_doubled():
    fam = tight_family(5)
    sg = build_doubled_graph(build_colored_graph(fam, detect_digons_pairwise(fam)))
    assert len(sg.vertices) == 10 and len(sg.edges) == 16
    assert all(e.color is Color.RED for e in sg.edges)
    rep = verify_gprime(sg)
    assert rep.passed and rep.edges == rep.edge_bound == 16


def test_doubling_preconditions():
    with pytest.raises(ValueError):
        build_doubled_graph(synthetic_graph(PTS, red=[(0, 1)], labels=[I, U, U]))
    with pytest.raises(ValueError):
        build_doubled_graph(synthetic_graph(PTS[:2], red=[(0, 1)], labels=[I, I]))


def test_planted_crossing_reported():
    verts = (UnitVec3(1, 0, 0), UnitVec3(0, 1, 0), UnitVec3(0.5, 0.5, R2), UnitVec3(0.5, 0.5, -R2))
    verts = verts + tuple(-v for v in verts)
    edges = (SphereEdge(0, 1, Color.BLUE), SphereEdge(2, 3, Color.BLUE))
    sg = SphereGraph(verts, edges, (frozenset({0, 2, 5, 7}), frozenset({1, 3, 4, 6})))
    rep = verify_gprime(sg)
    assert not rep.noncrossing
    assert rep.crossings[0]["arcs"] == [[0, 1, "blue"], [2, 3, "blue"]]


def test_wrong_parts_reported():
    verts = (UnitVec3(1, 0, 0), UnitVec3(0, 1, 0), UnitVec3(0, 0, 1))
    verts = verts + tuple(-v for v in verts)
    edges = (SphereEdge(0, 1, Color.BLUE), SphereEdge(1, 2, Color.BLUE), SphereEdge(0, 2, Color.BLUE))
    sg = SphereGraph(verts, edges, (frozenset({0, 1, 2}), frozenset({3, 4, 5})))
    rep = verify_gprime(sg)
    assert not rep.bipartite
    reasons = {v["reason"] for v in rep.bipartite_violations}
    assert {"same part", "odd cycle"} <= reasons


def doubled_corpus():
    for seed in range(60):
        yield free_family(3 + seed % 6, seed=500 + seed)
        yield random_family(GeneratorParams(3 + seed % 10, seed=seed))
    for n in range(4, 13):
        yield tight_family(n)


def test_doubled_graphs_pass_and_are_antipodally_symmetric():
    for fam in doubled_corpus():
        sg = build_doubled_graph(build_colored_graph(fam, detect_digons_pairwise(fam)))
        n = sg.n
        flip = lambda v: v + n if v < n else v - n
        edges = {frozenset((e.u, e.v)) for e in sg.edges}
        assert {frozenset(map(flip, e)) for e in edges} == edges
        rep = verify_gprime(sg)
        assert rep.passed, rep.as_dict()
