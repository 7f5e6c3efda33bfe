"""Exact probability that a uniformly random central plane cuts a hexagon."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .spherical import girard_area, hexagon_region_triangle

OCTANTS = 8
SPHERE_AREA = 4.0 * math.pi


@dataclass(frozen=True)
class ExactResult:
    triangle_area: float
    octant_count: int
    sphere_area: float
    probability: float


def closed_form_probability() -> float:
    """(6/pi) * arccos(1/3) - 2, about 0.351."""
    return 6.0 / math.pi * math.acos(1.0 / 3.0) - 2.0


def probability_from_region() -> ExactResult:
    """Hexagon probability as the area fraction of the hexagon region.

    One spherical triangle per octant, eight octants, over the full sphere.
    """
    area = girard_area(hexagon_region_triangle())
    return ExactResult(
        triangle_area=area,
        octant_count=OCTANTS,
        sphere_area=SPHERE_AREA,
        probability=OCTANTS * area / SPHERE_AREA,
    )
