import math

from cubeslice.probability import closed_form_probability, probability_from_region

# (6/pi) arccos(1/3) - 2 and 3 arccos(1/3) - pi at 40 digits
P_HEX = 0.3509593121836436210251333553345854678998
REGION_AREA = 0.5512855984325308079421441514644592429338


def test_closed_form_value():
    p = closed_form_probability()
    assert abs(p - 0.350959) < 1e-6
    assert abs(p - P_HEX) < 1e-15
    assert 0.35 < p < 0.352


def test_closed_form_inverts():
    p = closed_form_probability()
    assert abs((p + 2) * math.pi / 6 - math.acos(1 / 3)) < 1e-15


def test_region_route():
    r = probability_from_region()
    assert abs(r.probability - P_HEX) < 1e-14
    assert abs(r.triangle_area - REGION_AREA) < 1e-15
    assert r.octant_count == 8
    assert r.sphere_area == 4 * math.pi
    assert 8 * r.triangle_area <= 4 * math.pi
    assert abs(r.probability - r.octant_count * r.triangle_area / r.sphere_area) <= 1e-15
    assert 0 < r.probability < 1


def test_two_routes_agree():
    assert abs(closed_form_probability() - probability_from_region().probability) <= 1e-14
