"""This module contains all exceptions of the geometry package."""

from tripoly.util.exceptions import TripolyError


class GeometryError(TripolyError):
    """Base class for geometry related exceptions."""


class DegeneracyError(GeometryError):
    """Raise if three points are collinear where general position is required."""

    def __init__(self, triple, message: str = None):
        self.triple = tuple(triple)
        super().__init__(message or f"Points {self.triple} are collinear")


class DuplicateCoordinateError(GeometryError):
    """Raise if two points share an x-coordinate where distinct ones are required."""


class RealizationError(GeometryError):
    """Raise if no shrink factor on the halving ladder stabilizes a realization."""


class InvalidPolylineError(GeometryError):
    """Raise if a polyline does not fit the point set it refers to."""


class InvalidShrinkFactorError(GeometryError):
    """Raise if a shrink factor lies outside of (0, 1]."""


class PointFileError(GeometryError):
    """Raise if a point-list file can not be read."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"Invalid point file '{path}': {message}")
