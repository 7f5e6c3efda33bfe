"""Central cross-sections of a cube and the probability that a random one is a hexagon."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CubeSliceError,
    DegeneratePolygonError,
    DegenerateTriangleError,
    DomainError,
    InvalidConfigError,
    NotUnitError,
    SymmetryViolationError,
    ZeroNormalError,
)
from .geometry import (  # noqa: E402
    Normal,
    SectionKind,
    SectionPolygon,
    Tolerance,
    classify,
    classify_many,
    oracle_edge_clip,
    polygon_area,
    section_polygon,
    section_vertices_first_octant,
)
from .montecarlo import (  # noqa: E402
    Estimate,
    RunConfig,
    estimate,
    estimate_with_negation_antithetic,
    sample_unit_vector,
)
from .probability import ExactResult, closed_form_probability, probability_from_region  # noqa: E402
from .spherical import (  # noqa: E402
    SphericalTriangle,
    angle_from_arcs,
    arc_length,
    girard_area,
    hexagon_region_triangle,
    lhuilier_area,
    triangle_from_vertices,
)
