"""Randomized self-checks of the section construction and classifier."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    DEFAULT_TOLERANCE,
    SectionKind,
    SectionPolygon,
    Tolerance,
    classify,
    classify_many,
    cross,
    dot,
    oracle_edge_clip,
    polygon_area,
    section_polygon,
    signed_permutations,
    triangle_slack,
)
from .montecarlo import draw_normals

SCALE_FACTORS = (-2.0, 0.5, 1e6)
AREA_MIN = 4.0
AREA_MAX = 4.0 * math.sqrt(2.0)


@dataclass
class VerifyReport:
    trials: int
    seed: int
    oracle_compared: int = 0
    oracle_mismatches: int = 0
    symmetry_violations: int = 0
    invariant_failures: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.oracle_mismatches or self.symmetry_violations
                    or self.invariant_failures)


def same_vertex_set(p: SectionPolygon, q: SectionPolygon, eps: float) -> bool:
    if p.count != q.count:
        return False
    unmatched = list(q.vertices)
    for v in p.vertices:
        for k, w in enumerate(unmatched):
            if max(abs(v[i] - w[i]) for i in range(3)) <= eps:
                del unmatched[k]
                break
        else:
            return False
    return True


def polygon_invariant_errors(poly: SectionPolygon, tol: Tolerance = DEFAULT_TOLERANCE) -> list:
    """Names of the section-polygon invariants that ``poly`` breaks."""
    eps = tol.eps_geometry
    nh = poly.normal.unit().as_tuple()
    errors = []
    if poly.count != poly.kind.vertex_count:
        errors.append("count")
    if any(abs(dot(nh, v)) > eps for v in poly.vertices):
        errors.append("on_plane")
    if any(abs(max(abs(x) for x in v) - 1.0) > eps for v in poly.vertices):
        errors.append("on_surface")
    negated = SectionPolygon(tuple((-v[0], -v[1], -v[2]) for v in poly.vertices),
                             poly.kind, poly.normal)
    if not same_vertex_set(poly, negated, eps):
        errors.append("central_symmetry")
    verts = poly.vertices
    if any(dot(nh, cross(verts[k], verts[(k + 1) % len(verts)])) <= 0
           for k in range(len(verts))):
        errors.append("ccw_order")
    area = polygon_area(poly)
    if not AREA_MIN - eps <= area <= AREA_MAX + eps:
        errors.append("area_bounds")
    return errors


def run_checks(trials: int, seed: int, tol: Tolerance = DEFAULT_TOLERANCE) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = VerifyReport(trials, seed)
    normals = draw_normals(seed, 0, trials)

    base = classify_many(normals, tol)
    for op in signed_permutations():
        for k in SCALE_FACTORS:
            moved = _apply(op, normals) * k
            bad = np.flatnonzero(classify_many(moved, tol) != base)
            report.symmetry_violations += int(bad.size)
            report.failures.extend(("symmetry", int(i)) for i in bad[:5])

    for i, row in enumerate(normals):
        n = tuple(float(x) for x in row)
        poly = section_polygon(n, tol)
        errs = polygon_invariant_errors(poly, tol)
        if errs:
            report.invariant_failures += 1
            report.failures.append(("invariant", i, errs))
        if abs(triangle_slack(n)) <= 10 * tol.eps_boundary:
            continue
        report.oracle_compared += 1
        ref = oracle_edge_clip(n, tol)
        kind = classify(n, tol)
        if (not same_vertex_set(poly, ref, tol.eps_geometry)
                or (ref.count == 6) != (kind is SectionKind.HEXAGON)):
            report.oracle_mismatches += 1
            report.failures.append(("oracle", i))
    return report


def _apply(op, normals: np.ndarray) -> np.ndarray:
    # a signed permutation is linear, so apply it to the basis and multiply
    m = np.array([op(e) for e in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))])
    return normals @ m
