import math

import numpy as np
import pytest

from cubeslice.errors import DegenerateTriangleError, NotUnitError
from cubeslice.spherical import (
    angle_from_arcs,
    arc_from_angles,
    arc_length,
    girard_area,
    hexagon_region_triangle,
    lhuilier_area,
    triangle_from_vertices,
)

H = 1 / math.sqrt(2)
A, B, C = (H, H, 0.0), (0.0, H, H), (H, 0.0, H)
E1, E2, E3 = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)
# 3*arccos(1/3) - pi at 40 digits
REGION_AREA = 0.5512855984325308079421441514644592429338


def random_rotation(rng):
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_triangles(count, seed, min_side=0.2, min_angle=0.05):
    """Random unit-vector triangles, skipping ill-conditioned slivers."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        v = rng.standard_normal((3, 3))
        v /= np.linalg.norm(v, axis=1)[:, None]
        try:
            t = triangle_from_vertices(*v)
        except DegenerateTriangleError:
            continue
        if min(t.arcs) < min_side or min(t.angles) < min_angle \
                or max(t.angles) > math.pi - min_angle:
            continue
        out.append(t)
    return out


# -- arc_length -----------------------------------------------------------------

def test_arc_length_region_points():
    assert arc_length(A, B) == pytest.approx(math.pi / 3, abs=1e-15)


def test_arc_length_identical_and_antipodal():
    assert arc_length(E1, E1) == 0.0
    assert arc_length(E1, (-1.0, 0.0, 0.0)) == math.pi


def test_arc_length_symmetric():
    for t in random_triangles(50, 1):
        u, w, _ = t.vertices
        assert arc_length(u, w) == arc_length(w, u)


def test_arc_length_rejects_non_unit():
    with pytest.raises(NotUnitError):
        arc_length((1.0, 1.0, 0.0), E1)


# -- angle_from_arcs ------------------------------------------------------------

def test_angle_equilateral_third():
    angle = angle_from_arcs(math.pi / 3, math.pi / 3, math.pi / 3)
    assert angle == pytest.approx(math.acos(1 / 3), abs=1e-15)
    assert angle == pytest.approx(1.230959, abs=1e-6)


def test_angle_octant_right():
    assert angle_from_arcs(math.pi / 2, math.pi / 2, math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)


def test_angle_small_triangle_near_planar():
    # 40-digit value of the law-of-cosines angle at side 0.1: 1.04864273349827...
    angle = angle_from_arcs(0.1, 0.1, 0.1)
    assert angle == pytest.approx(math.pi / 3, abs=0.01)
    assert angle == pytest.approx(1.048642733498272949, abs=1e-12)


@pytest.mark.parametrize("arcs", [(0.5, 0.0, 0.5), (0.5, 0.5, math.pi), (1.0, 1e-15, 1e-15)])
def test_angle_degenerate(arcs):
    with pytest.raises(DegenerateTriangleError):
        angle_from_arcs(*arcs)


# -- triangles ------------------------------------------------------------------

def test_region_triangle():
    t = hexagon_region_triangle()
    for v, ref in zip(t.vertices, (A, B, C)):
        assert tuple(v) == ref
    for arc in t.arcs:
        assert abs(arc - math.pi / 3) <= 1e-15
    for angle in t.angles:
        assert abs(math.cos(angle) - 1 / 3) <= 1e-15
    assert abs(girard_area(t) - (3 * math.acos(1 / 3) - math.pi)) <= 1e-15
    assert girard_area(t) == pytest.approx(REGION_AREA, abs=1e-15)


def test_octant_triangle():
    t = triangle_from_vertices(E1, E2, E3)
    assert t.arcs == pytest.approx((math.pi / 2,) * 3, abs=1e-15)
    assert t.angles == pytest.approx((math.pi / 2,) * 3, abs=1e-15)
    assert girard_area(t) == pytest.approx(math.pi / 2, abs=1e-15)
    assert t.area == girard_area(t)


def test_near_degenerate_triangle_area_vanishes():
    eps = 1e-6
    p = np.array([H, H, eps])
    t = triangle_from_vertices(E1, p / np.linalg.norm(p), E2)
    area = girard_area(t)
    assert 0 < area < 1e-5
    assert area == pytest.approx(lhuilier_area(*t.arcs), abs=1e-9)


@pytest.mark.parametrize("verts", [
    (E1, E1, E2),
    (E1, (-1.0, 0.0, 0.0), E2),
    (E1, E2, (H, H, 0.0)),
])
def test_degenerate_triangles(verts):
    with pytest.raises(DegenerateTriangleError):
        triangle_from_vertices(*verts)


def test_triangle_invariants():
    for t in random_triangles(200, 2, min_side=0.0, min_angle=0.0):
        assert all(0 < a < math.pi for a in t.arcs)
        assert all(0 < a < math.pi for a in t.angles)
        assert sum(t.angles) > math.pi


def test_rotation_invariance():
    rng = np.random.default_rng(3)
    for t in random_triangles(200, 4):
        rot = random_rotation(rng)
        r = triangle_from_vertices(*(rot @ v for v in t.vertices))
        assert r.arcs == pytest.approx(t.arcs, abs=1e-12)
        assert r.angles == pytest.approx(t.angles, abs=1e-12)
        assert girard_area(r) == pytest.approx(girard_area(t), abs=1e-12)


def test_vertex_relabeling():
    for t in random_triangles(50, 5):
        a, b, c = t.vertices
        r = triangle_from_vertices(b, c, a)
        assert r.arcs == pytest.approx(t.arcs[1:] + t.arcs[:1], abs=1e-14)
        assert r.angles == pytest.approx(t.angles[1:] + t.angles[:1], abs=1e-14)


# -- area routes ------------------------------------------------------------------

def test_lhuilier_examples():
    assert lhuilier_area(math.pi / 3, math.pi / 3, math.pi / 3) == pytest.approx(REGION_AREA, abs=1e-15)
    assert lhuilier_area(math.pi / 2, math.pi / 2, math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)


def test_lhuilier_rejects_bad_sides():
    with pytest.raises(DegenerateTriangleError):
        lhuilier_area(0.1, 0.1, 1.0)
    with pytest.raises(DegenerateTriangleError):
        lhuilier_area(3.0, 3.0, 3.0)


def test_girard_lhuilier_agree():
    for t in random_triangles(2000, 6):
        assert abs(girard_area(t) - lhuilier_area(*t.arcs)) <= 1e-12


def test_law_of_cosines_round_trip():
    cases = [(math.pi / 3,) * 3, (math.pi / 2,) * 3, (0.3,) * 3, (1.0, 1.2, 0.9)]
    for arcs in cases:
        a, b, c = arcs
        angles = (angle_from_arcs(a, b, c), angle_from_arcs(b, a, c), angle_from_arcs(c, a, b))
        back = (arc_from_angles(*angles),
                arc_from_angles(angles[1], angles[0], angles[2]),
                arc_from_angles(angles[2], angles[0], angles[1]))
        assert back == pytest.approx(arcs, abs=1e-10)
