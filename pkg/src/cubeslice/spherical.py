"""
Spherical triangles on the unit sphere.

Arcs come from dot products of unit vectors, interior angles from the
spherical law of cosines, and area from the angular excess (angle sum
minus pi).  L'Huilier's formula gives a second route to the area that
uses the arcs only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import DegenerateTriangleError, NotUnitError

UNIT_TOL = 1e-12
# sin(b) * sin(c) at or below this leaves the law-of-cosines angle meaningless
DEGENERATE_SIN = 1e-14


def _clamp(x: float) -> float:
    return min(1.0, max(-1.0, x))


def _unit(v, name: str = "vector") -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (3,):
        raise ValueError(f"{name} must have shape (3,), got {v.shape}")
    if abs(float(np.linalg.norm(v)) - 1.0) > UNIT_TOL:
        raise NotUnitError(f"{name} is not unit length: |v| = {np.linalg.norm(v)!r}")
    return v


def arc_length(u, w) -> float:
    """Great-circle distance between two unit vectors (radians)."""
    u = _unit(u, "u")
    w = _unit(w, "w")
    return math.acos(_clamp(float(np.dot(u, w))))


def angle_from_arcs(alpha: float, beta: float, gamma: float) -> float:
    """Interior angle opposite the side ``alpha``, given all three sides.

    Solves cos(alpha) = cos(beta)cos(gamma) + sin(beta)sin(gamma)cos(A) for A.
    """
    for side in (alpha, beta, gamma):
        if not 0.0 < side < math.pi:
            raise DegenerateTriangleError(f"side {side!r} outside (0, pi)")
    denom = math.sin(beta) * math.sin(gamma)
    if denom <= DEGENERATE_SIN:
        raise DegenerateTriangleError("adjacent sides too close to 0 or pi")
    return math.acos(_clamp((math.cos(alpha) - math.cos(beta) * math.cos(gamma)) / denom))


def arc_from_angles(a: float, b: float, c: float) -> float:
    """Side opposite angle ``a`` from the three interior angles (dual law of cosines)."""
    denom = math.sin(b) * math.sin(c)
    if denom <= DEGENERATE_SIN:
        raise DegenerateTriangleError("adjacent angles too close to 0 or pi")
    return math.acos(_clamp((math.cos(a) + math.cos(b) * math.cos(c)) / denom))


@dataclass(frozen=True)
class SphericalTriangle:
    """Triangle on the unit sphere.

    ``arcs[i]`` is the side opposite ``vertices[i]`` and ``angles[i]`` the
    interior angle at it.
    """

    vertices: Tuple[np.ndarray, np.ndarray, np.ndarray]
    arcs: Tuple[float, float, float]
    angles: Tuple[float, float, float]

    @property
    def area(self) -> float:
        return girard_area(self)


def triangle_from_vertices(va, vb, vc) -> SphericalTriangle:
    va, vb, vc = _unit(va, "vA"), _unit(vb, "vB"), _unit(vc, "vC")
    alpha = arc_length(vb, vc)
    beta = arc_length(va, vc)
    gamma = arc_length(va, vb)
    for side in (alpha, beta, gamma):
        if side < UNIT_TOL or side > math.pi - UNIT_TOL:
            raise DegenerateTriangleError("vertices coincide or are antipodal")
    if abs(float(np.linalg.det(np.stack([va, vb, vc])))) <= 1e-15:
        raise DegenerateTriangleError("vertices lie on one great circle")
    angles = (angle_from_arcs(alpha, beta, gamma),
              angle_from_arcs(beta, alpha, gamma),
              angle_from_arcs(gamma, alpha, beta))
    return SphericalTriangle((va, vb, vc), (alpha, beta, gamma), angles)


def girard_area(t: SphericalTriangle) -> float:
    """Area as the angular excess: sum of interior angles minus pi."""
    return sum(t.angles) - math.pi


def lhuilier_area(alpha: float, beta: float, gamma: float) -> float:
    """Area from the three sides alone (L'Huilier's theorem)."""
    sides = (alpha, beta, gamma)
    for side in sides:
        if not 0.0 < side < math.pi:
            raise DegenerateTriangleError(f"side {side!r} outside (0, pi)")
    s = 0.5 * sum(sides)
    if s >= math.pi:
        raise DegenerateTriangleError("perimeter must be below 2*pi")
    prod = math.tan(s / 2)
    for side in sides:
        prod *= math.tan((s - side) / 2)
    if prod < -1e-15:
        raise DegenerateTriangleError("sides violate the triangle inequality")
    return 4.0 * math.atan(math.sqrt(max(prod, 0.0)))


def hexagon_region_triangle() -> SphericalTriangle:
    """First-octant triangle of normals that cut the cube in a hexagon.

    Its corners are where the great circles a = b + c, b = a + c and
    c = a + b meet: A = (1, 1, 0)/sqrt(2), B = (0, 1, 1)/sqrt(2),
    C = (1, 0, 1)/sqrt(2).
    """
    h = 1.0 / math.sqrt(2.0)
    return triangle_from_vertices((h, h, 0.0), (0.0, h, h), (h, 0.0, h))
