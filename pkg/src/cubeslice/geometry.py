"""
Cross-sections of the cube [-1, 1]^3 by planes through its center.

A central plane ``a*x + b*y + c*z = 0`` cuts the cube in either a
quadrilateral or a hexagon.  The section is a hexagon exactly when the
absolute normal components obey the strict triangle inequalities
``|a| < |b| + |c|`` (and permutations).

Pure Python on 3-tuples; a vectorized classifier for bulk sampling lives
alongside the scalar one and follows the same arithmetic step for step.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from .errors import DegeneratePolygonError, DomainError, ZeroNormalError

Point3D = Tuple[float, float, float]

# Components smaller than this (relative to the largest) are routed through
# edge clipping instead of the closed-form vertices, which divide by them.
SMALL_COMPONENT = 1e-9


# =============================================================================
# VECTOR HELPERS
# =============================================================================

def dot(u: Sequence[float], w: Sequence[float]) -> float:
    return u[0] * w[0] + u[1] * w[1] + u[2] * w[2]


def cross(u: Sequence[float], w: Sequence[float]) -> Point3D:
    return (u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0])


def norm(u: Sequence[float]) -> float:
    return math.sqrt(dot(u, u))


def _scale(u: Sequence[float], s: float) -> Point3D:
    return (u[0] * s, u[1] * s, u[2] * s)


def _neg(u: Sequence[float]) -> Point3D:
    return (-u[0], -u[1], -u[2])


def _chebyshev(u: Sequence[float], w: Sequence[float]) -> float:
    return max(abs(u[0] - w[0]), abs(u[1] - w[1]), abs(u[2] - w[2]))


# =============================================================================
# TYPES
# =============================================================================

class SectionKind(str, Enum):
    QUADRILATERAL = "Quadrilateral"
    HEXAGON = "Hexagon"
    # Plane passes through two opposite cube corners; section is a quadrilateral.
    BOUNDARY_QUADRILATERAL = "BoundaryQuadrilateral"

    @property
    def is_hexagon(self) -> bool:
        return self is SectionKind.HEXAGON

    @property
    def vertex_count(self) -> int:
        return 6 if self is SectionKind.HEXAGON else 4


# Integer codes used by the vectorized classifier.
KIND_CODES = (SectionKind.QUADRILATERAL, SectionKind.HEXAGON,
              SectionKind.BOUNDARY_QUADRILATERAL)
QUAD, HEX, BOUNDARY = 0, 1, 2


@dataclass(frozen=True)
class Normal:
    """Direction (a, b, c) of the plane a*x + b*y + c*z = 0.

    Need not be unit length; ``unit()`` returns the normalized direction.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        comps = (self.a, self.b, self.c)
        if not all(math.isfinite(v) for v in comps):
            raise ZeroNormalError(f"normal has non-finite components: {comps}")
        if max(abs(v) for v in comps) == 0.0:
            raise ZeroNormalError("normal has zero magnitude")

    @classmethod
    def of(cls, value: Union["Normal", Iterable[float]]) -> "Normal":
        if isinstance(value, Normal):
            return value
        comps = tuple(float(v) for v in value)
        if len(comps) != 3:
            raise ValueError(f"normal needs 3 components, got {len(comps)}")
        return cls(*comps)

    def as_tuple(self) -> Point3D:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter(self.as_tuple())

    def __neg__(self) -> "Normal":
        return Normal(-self.a, -self.b, -self.c)

    @property
    def magnitude(self) -> float:
        # math.hypot avoids overflow/underflow for extreme scales
        return math.hypot(self.a, self.b, self.c)

    def unit(self) -> "Normal":
        m = self.magnitude
        return Normal(self.a / m, self.b / m, self.c / m)

    def is_unit(self, tol: float = 1e-12) -> bool:
        v = self.as_tuple()
        return abs(dot(v, v) - 1.0) <= tol


@dataclass(frozen=True)
class Tolerance:
    """Tolerances for boundary classification and point matching."""

    eps_boundary: float = 1e-12
    eps_geometry: float = 1e-9

    def __post_init__(self):
        if not (self.eps_boundary > 0 and self.eps_geometry > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.eps_boundary > self.eps_geometry:
            raise ValueError("eps_boundary must not exceed eps_geometry")


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class SectionPolygon:
    """Ordered vertex loop of a central cube section.

    Vertices run counterclockwise when viewed from the tip of ``normal``.
    """

    vertices: Tuple[Point3D, ...]
    kind: SectionKind
    normal: Normal

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def count(self) -> int:
        return len(self.vertices)


NormalLike = Union[Normal, Sequence[float]]


# =============================================================================
# CLASSIFICATION
# =============================================================================

def sorted_abs(n: NormalLike) -> Point3D:
    """Absolute components scaled by the largest, in descending order.

    The first entry is always exactly 1.0.
    """
    n = Normal.of(n)
    m = max(abs(n.a), abs(n.b), abs(n.c))
    p, q, r = sorted((abs(n.a) / m, abs(n.b) / m, abs(n.c) / m), reverse=True)
    return (p, q, r)


def triangle_slack(n: NormalLike) -> float:
    """``p - (q + r)`` for the sorted scaled components; negative inside the
    hexagon region, zero on its boundary."""
    p, q, r = sorted_abs(n)
    return p - (q + r)


def classify(n: NormalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> SectionKind:
    """Kind of polygon cut from the cube by the central plane with normal ``n``.

    Invariant under scaling of ``n`` and under all signed permutations of
    its components.
    """
    d = triangle_slack(n)
    if d < -tol.eps_boundary:
        return SectionKind.HEXAGON
    if abs(d) <= tol.eps_boundary:
        return SectionKind.BOUNDARY_QUADRILATERAL
    return SectionKind.QUADRILATERAL


def classify_many(normals, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Vectorized ``classify`` over an (N, 3) array.

    Returns integer codes indexing ``KIND_CODES`` (QUAD, HEX, BOUNDARY).
    Uses the same floating-point operations as the scalar path, so the
    two agree bit for bit.
    """
    m = np.abs(np.asarray(normals, dtype=np.float64))
    if m.ndim != 2 or m.shape[1] != 3:
        raise ValueError(f"expected an (N, 3) array, got shape {m.shape}")
    mx = m.max(axis=1)
    if not np.all(np.isfinite(m)) or np.any(mx == 0.0):
        raise ZeroNormalError("zero or non-finite normal in batch")
    s = np.sort(m / mx[:, None], axis=1)
    d = s[:, 2] - (s[:, 1] + s[:, 0])
    codes = np.full(len(m), QUAD, dtype=np.int8)
    codes[np.abs(d) <= tol.eps_boundary] = BOUNDARY
    codes[d < -tol.eps_boundary] = HEX
    return codes


# =============================================================================
# POLYGON CONSTRUCTION
# =============================================================================

def plane_basis(n: NormalLike) -> Tuple[Point3D, Point3D, Point3D]:
    """Right-handed orthonormal frame (u, v, n_hat) with u, v spanning the plane.

    u is the axis of the smallest |component| crossed with n, normalized.
    """
    nh = Normal.of(n).unit().as_tuple()
    k = min(range(3), key=lambda i: abs(nh[i]))
    e = [0.0, 0.0, 0.0]
    e[k] = 1.0
    u = cross(e, nh)
    u = _scale(u, 1.0 / norm(u))
    v = cross(nh, u)
    return u, v, nh


def order_ccw(points: Iterable[Sequence[float]], n: NormalLike) -> Tuple[Point3D, ...]:
    """Sort points lying in the plane by angle about ``n`` (counterclockwise)."""
    u, v, _ = plane_basis(n)
    pts = [tuple(float(x) for x in p) for p in points]
    return tuple(sorted(pts, key=lambda p: math.atan2(dot(v, p), dot(u, p))))


def dedupe(points: Iterable[Point3D], eps: float) -> list:
    out: list = []
    for p in points:
        if all(_chebyshev(p, q) > eps for q in out):
            out.append(p)
    return out


def _first_octant_hexagon(a: float, b: float, c: float) -> list:
    pts = [((b - c) / a, -1.0, 1.0),
           (-1.0, (a - c) / b, 1.0),
           (-1.0, 1.0, (a - b) / c)]
    return pts + [_neg(p) for p in pts]


def _dominant_face_quad(m: Sequence[float]) -> list:
    """Quadrilateral for nonnegative ``m`` whose largest entry dominates.

    The section projects onto the full square face normal to the dominant
    axis, so its vertices sit over the four corners of that face.
    """
    k = max(range(3), key=lambda i: m[i])
    i, j = [x for x in range(3) if x != k]
    pts = []
    for si, sj in ((1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0)):
        p = [0.0, 0.0, 0.0]
        p[i], p[j] = si, sj
        p[k] = -(m[i] * si + m[j] * sj) / m[k]
        pts.append(tuple(p))
    return pts


def section_vertices_first_octant(n: NormalLike) -> SectionPolygon:
    """Hexagon vertices from the closed-form edge intersections.

    Only valid for a, b, c > 0 with a hexagonal section.
    """
    n = Normal.of(n)
    a, b, c = n.as_tuple()
    if min(a, b, c) <= 0:
        raise DomainError(f"all components must be positive, got {n.as_tuple()}")
    if classify(n) is not SectionKind.HEXAGON:
        raise DomainError(f"section for {n.as_tuple()} is not a hexagon")
    return SectionPolygon(order_ccw(_first_octant_hexagon(a, b, c), n),
                          SectionKind.HEXAGON, n)


def _formula_vertices(n: Normal, kind: SectionKind) -> list:
    # Reduce to the first octant by flipping coordinate signs, then map back.
    signs = tuple(-1.0 if x < 0 else 1.0 for x in n.as_tuple())
    m = tuple(abs(x) for x in n.as_tuple())
    if kind is SectionKind.HEXAGON:
        pts = _first_octant_hexagon(*m)
    else:
        pts = _dominant_face_quad(m)
    return [(p[0] * signs[0], p[1] * signs[1], p[2] * signs[2]) for p in pts]


def section_polygon(n: NormalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> SectionPolygon:
    """Full section polygon of the cube for any nonzero normal.

    Six vertices when ``classify`` says hexagon, four otherwise; the
    vertex count always matches the kind.
    """
    n = Normal.of(n)
    kind = classify(n, tol)
    pts = None
    m = [abs(x) for x in n.as_tuple()]
    if min(m) < SMALL_COMPONENT * max(m):
        clipped = _clip_points(n, tol)
        if len(clipped) == kind.vertex_count:
            pts = clipped
        # otherwise the clip merged or split vertices inside a tolerance band
        # that classify resolved the other way; fall through to the formulas
    if pts is None:
        pts = _formula_vertices(n, kind)
    return SectionPolygon(order_ccw(pts, n), kind, n)


def cube_edges() -> list:
    """The 12 edges of [-1, 1]^3 as (p0, p1) endpoint pairs."""
    edges = []
    for axis in range(3):
        i, j = [x for x in range(3) if x != axis]
        for si in (-1.0, 1.0):
            for sj in (-1.0, 1.0):
                p0 = [0.0, 0.0, 0.0]
                p0[i], p0[j] = si, sj
                p1 = list(p0)
                p0[axis], p1[axis] = -1.0, 1.0
                edges.append((tuple(p0), tuple(p1)))
    return edges


_EDGES = cube_edges()


def _clip_points(n: Normal, tol: Tolerance) -> list:
    nh = n.unit().as_tuple()
    pts = []
    for p0, p1 in _EDGES:
        s0, s1 = dot(nh, p0), dot(nh, p1)
        if abs(s0) <= tol.eps_geometry:
            pts.append(p0)
        if abs(s1) <= tol.eps_geometry:
            pts.append(p1)
        if s0 * s1 < 0:
            t = s0 / (s0 - s1)
            pts.append(tuple(p0[k] + t * (p1[k] - p0[k]) for k in range(3)))
    return dedupe(pts, tol.eps_geometry)


def oracle_edge_clip(n: NormalLike, tol: Tolerance = DEFAULT_TOLERANCE) -> SectionPolygon:
    """Brute-force section by intersecting the plane with all 12 cube edges.

    Independent of ``classify``: the kind comes from the vertex count, and a
    4-vertex section through cube corners is reported as a boundary case.
    """
    n = Normal.of(n)
    pts = _clip_points(n, tol)
    if len(pts) == 6:
        kind = SectionKind.HEXAGON
    elif any(min(abs(x) for x in p) >= 1.0 - tol.eps_geometry for p in pts):
        # passes through a cube corner
        kind = SectionKind.BOUNDARY_QUADRILATERAL
    else:
        kind = SectionKind.QUADRILATERAL
    return SectionPolygon(order_ccw(pts, n), kind, n)


def polygon_area(poly: Union[SectionPolygon, Sequence[Sequence[float]]]) -> float:
    """Area of an ordered planar polygon, by summing origin-fan cross products."""
    verts = [tuple(map(float, v)) for v in getattr(poly, "vertices", poly)]
    if len(dedupe(verts, 1e-12)) < 3:
        raise DegeneratePolygonError(f"need 3 distinct vertices, got {len(verts)}")
    sx = sy = sz = 0.0
    for k, p in enumerate(verts):
        cx, cy, cz = cross(p, verts[(k + 1) % len(verts)])
        sx += cx
        sy += cy
        sz += cz
    return 0.5 * math.sqrt(sx * sx + sy * sy + sz * sz)


def signed_permutations() -> list:
    """All 48 signed permutations as functions on 3-tuples."""
    ops = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1.0, -1.0), repeat=3):
            ops.append(lambda v, perm=perm, signs=signs:
                       tuple(signs[k] * v[perm[k]] for k in range(3)))
    return ops
