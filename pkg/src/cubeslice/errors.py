"""Exception types raised across the package."""


class CubeSliceError(Exception):
    """Base class for all package errors."""


class ZeroNormalError(CubeSliceError, ValueError):
    """A plane normal with zero magnitude (or non-finite components)."""


class DomainError(CubeSliceError, ValueError):
    """Input lies outside the domain an operation is defined on."""


class DegeneratePolygonError(CubeSliceError, ValueError):
    pass


class NotUnitError(CubeSliceError, ValueError):
    pass


class DegenerateTriangleError(CubeSliceError, ValueError):
    pass


class InvalidConfigError(CubeSliceError, ValueError):
    pass


class SymmetryViolationError(CubeSliceError, AssertionError):
    """Classification of ``n`` and ``-n`` disagreed."""
