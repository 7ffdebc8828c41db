import math

import numpy as np
import pytest

from circledigons.arrangement import (
    Census,
    DigonKind,
    DigonRecord,
    FailureKind,
    ValidationError,
    build_arrangement,
    census_of,
    detect_digons_pairwise,
    digon_census,
    enumerate_digon_faces,
    validate_family,
)
from circledigons.generators import GeneratorParams, free_family, random_family, tight_family
from circledigons.geom import Circle, Point, circle_circle_intersection, invert_circle

S3 = math.sqrt(3) / 2

PAIR = [Circle.at(0, 0, 1), Circle.at(1, 0, 1)]
VENN = [Circle.at(0, 0, 1), Circle.at(1, 0, 1), Circle.at(0.5, S3, 1)]
LENS_UNDER_BIG = [Circle.at(0, 0, 1), Circle.at(1.8, 0, 1), Circle.at(0.9, 10, 10.6)]


def lens(i, j):
    return DigonRecord(i, j, DigonKind.LENS)


def lune(i, j, inside):
    return DigonRecord(i, j, DigonKind.LUNE, inside)


def faces_oracle(circles):
    return enumerate_digon_faces(build_arrangement(validate_family(circles)))


# --- validation ----------------------------------------------------------


def test_two_unit_circles_are_valid():
    fam = validate_family(PAIR)
    assert fam.n == 2 and len(fam) == 2


def test_venn_is_valid_and_has_no_triple_points():
    fam = validate_family(VENN)
    assert fam.n == 3
    # every crossing point of a pair stays well away from the third circle
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        for p in circle_circle_intersection(VENN[i], VENN[j]).points:
            assert abs(VENN[k].signed_distance(p)) > 0.1


@pytest.mark.parametrize("circles, kind, indices", [
    ([Circle.at(0, 0, 1), Circle.at(3, 0, 1)], FailureKind.NOT_INTERSECTING, (0, 1)),
    ([Circle.at(0, 0, 1), Circle.at(2, 0, 1)], FailureKind.TANGENT, (0, 1)),
    ([Circle.at(0, 0, 3), Circle.at(0.5, 0, 1)], FailureKind.NESTED, (0, 1)),
    ([Circle.at(0, 0, 1), Circle.at(0, 0, 1)], FailureKind.NEAR_DEGENERATE, (0, 1)),
    # all three pass through (0, 1) and (0, -1)
    ([Circle.at(-1, 0, math.sqrt(2)), Circle.at(1, 0, math.sqrt(2)), Circle.at(0, 0, 1)],
     FailureKind.TRIPLE_POINT, (0, 1, 2)),
])
def test_validation_failures(circles, kind, indices):
    with pytest.raises(ValidationError) as info:
        validate_family(circles)
    assert info.value.kind is kind
    assert info.value.indices == indices


def test_near_triple_point_rejected():
    circles = [Circle.at(-1, 0, math.sqrt(2)), Circle.at(1, 0, math.sqrt(2)), Circle.at(0, 0, 1 + 1e-11)]
    with pytest.raises(ValidationError) as info:
        validate_family(circles)
    assert info.value.kind in (FailureKind.TRIPLE_POINT, FailureKind.NEAR_DEGENERATE)


def test_single_circle_rejected():
    with pytest.raises(ValueError):
        validate_family([Circle.at(0, 0, 1)])


# --- the examples, pairwise vs face oracle --------------------------------


def test_pair_digons():
    expected = [lens(0, 1), lune(0, 1, 0), lune(0, 1, 1)]
    assert detect_digons_pairwise(validate_family(PAIR)) == expected
    assert faces_oracle(PAIR) == expected
    assert [str(d) for d in expected] == ["Lens(0,1)", "Lune(0,1 inside 0)", "Lune(0,1 inside 1)"]


def test_venn_has_no_digons():
    arr = build_arrangement(validate_family(VENN))
    bounded = [f for f in arr.faces if not f.unbounded]
    assert all(len(f.half_edges) >= 3 for f in bounded)
    assert enumerate_digon_faces(arr) == []
    assert detect_digons_pairwise(validate_family(VENN)) == []


def test_lens_untouched_by_large_circle():
    assert lens(0, 1) in faces_oracle(LENS_UNDER_BIG)
    assert lens(0, 1) in detect_digons_pairwise(validate_family(LENS_UNDER_BIG))


@pytest.mark.parametrize("circles, vef", [(PAIR, (2, 4, 4)), (VENN, (6, 12, 8))])
def test_small_arrangement_counts(circles, vef):
    arr = build_arrangement(validate_family(circles))
    assert (arr.V, arr.E, arr.F) == vef
    assert sum(f.unbounded for f in arr.faces) == 1


def test_random_five_circle_counts():
    arr = build_arrangement(random_family(GeneratorParams(5, seed=7)))
    assert (arr.V, arr.E, arr.F) == (20, 40, 22)


def test_tight_five_faces_are_eight_lenses():
    got = enumerate_digon_faces(build_arrangement(tight_family(5)))
    assert len(got) == 8
    assert all(d.kind is DigonKind.LENS for d in got)


# --- structural invariants -----------------------------------------------


def corpus():
    for seed in range(60):
        yield random_family(GeneratorParams(3 + seed % 8, seed=seed))
        yield free_family(3 + seed % 6, seed=seed)
    for n in range(4, 13):
        yield tight_family(n)


@pytest.mark.parametrize("fam", list(corpus()), ids=lambda f: f"n{f.n}")
def test_arrangement_invariants_and_oracle_agreement(fam):
    arr = build_arrangement(fam)
    n = fam.n
    assert arr.V == n * (n - 1)
    assert arr.E == 2 * arr.V
    assert arr.V - arr.E + arr.F == 2
    assert all(arr.degree(v) == 4 for v in range(arr.V))
    seen = [f for face in arr.faces for f in face.half_edges]
    assert sorted(seen) == list(range(len(arr.half_edges)))
    for k, h in enumerate(arr.half_edges):
        assert arr.half_edges[h.twin].twin == k
        assert arr.half_edges[h.next].origin == h.dest
    assert enumerate_digon_faces(arr) == detect_digons_pairwise(fam)


def _inside(c, pts, sign=1):
    return sign * (np.hypot(pts[:, 0] - c.x, pts[:, 1] - c.y) - c.radius) < -1e-9


@pytest.mark.parametrize("seed", range(30))
def test_reported_digons_are_empty_of_other_curves(seed):
    fam = free_family(3 + seed % 5, seed=seed)
    t = np.linspace(0, 2 * np.pi, 4000, endpoint=False)
    for d in detect_digons_pairwise(fam):
        ci, cj = fam[d.i], fam[d.j]
        for k, ck in enumerate(fam):
            if k in (d.i, d.j):
                continue
            pts = np.column_stack([ck.x + ck.radius * np.cos(t), ck.y + ck.radius * np.sin(t)])
            if d.kind is DigonKind.LENS:
                bad = _inside(ci, pts) & _inside(cj, pts)
            else:
                inner, outer = (ci, cj) if d.inside == d.i else (cj, ci)
                bad = _inside(inner, pts) & _inside(outer, pts, sign=-1)
            assert not bad.any(), f"{d} entered by circle {k}"


def _outside_all(fam, rng):
    lo = min(c.x - c.radius for c in fam) - 1, min(c.y - c.radius for c in fam) - 1
    hi = max(c.x + c.radius for c in fam) + 1, max(c.y + c.radius for c in fam) + 1
    while True:
        z = Point(*rng.uniform(lo, hi))
        if all(c.signed_distance(z) > 1e-3 * c.radius for c in fam):
            return z


@pytest.mark.parametrize("seed", range(20))
def test_inversion_preserves_digons(seed):
    rng = np.random.default_rng(seed)
    fam = free_family(3 + seed % 5, seed=seed) if seed % 2 else tight_family(4 + seed % 9)
    z = _outside_all(fam, rng)
    # keep the image at roughly the original scale
    cx, cy = np.mean([c.x for c in fam]), np.mean([c.y for c in fam])
    k = ((z.x - cx) ** 2 + (z.y - cy) ** 2) * rng.uniform(0.5, 2)
    image = validate_family([invert_circle(c, z, k) for c in fam])
    assert detect_digons_pairwise(image) == detect_digons_pairwise(fam)


def test_center_inside_a_disc_can_change_kinds():
    fam = free_family(3, seed=0)
    z = Point(fam[0].x + 0.3 * fam[0].radius, fam[0].y)
    assert fam[0].signed_distance(z) < 0
    image = validate_family([invert_circle(c, z, 1.0) for c in fam])
    assert [str(d) for d in detect_digons_pairwise(fam)] == ["Lune(0,1 inside 1)", "Lune(0,2 inside 2)", "Lens(1,2)"]
    assert [str(d) for d in detect_digons_pairwise(image)] == ["Lens(0,1)", "Lens(0,2)", "Lens(1,2)"]


# --- census ---------------------------------------------------------------


def test_tight_five_census():
    c = digon_census(tight_family(5))
    assert (c.lenses, c.lunes, c.digons) == (8, 0, 8)
    assert c.ok and c.digon_bound == 8


def test_pair_census_flags_small_n():
    c = digon_census(validate_family(PAIR))
    assert c.digons == 3 and not c.bounds_apply and c.ok
    doc = c.as_dict()
    assert doc["bounds"]["note"] == "n <= 2"
    assert doc["bounds"]["lunes_max"] == 0 and doc["bounds"]["lunes_max_weak"] == 2


def test_census_reports_each_violated_bound():
    c = Census(4, lenses=7, lunes=5)
    assert not c.ok
    assert len(c.violations) == 3
    assert census_of(3, [lens(0, 1), lune(0, 2, 0)]) == Census(3, 1, 1)


def test_digon_record_contract():
    with pytest.raises(ValueError):
        DigonRecord(1, 0, DigonKind.LENS)
    with pytest.raises(ValueError):
        DigonRecord(0, 1, DigonKind.LUNE)
    with pytest.raises(ValueError):
        DigonRecord(0, 1, DigonKind.LUNE, 2)
    assert lune(0, 1, 0).outside == 1
    assert sorted([lune(0, 1, 1), lens(0, 2), lens(0, 1)]) == [lens(0, 1), lune(0, 1, 1), lens(0, 2)]


def test_oracle_agreement_on_mixed_families():
    # free families mix lenses and lunes far more than the bounded-radius generator
    kinds = set()
    for seed in range(1000):
        fam = free_family(3 + seed % 5, seed=10_000 + seed)
        digons = detect_digons_pairwise(fam)
        assert enumerate_digon_faces(build_arrangement(fam)) == digons, seed
        kinds |= {(d.kind, fam.n) for d in digons}
    assert {k for k, _ in kinds} == {DigonKind.LENS, DigonKind.LUNE}
