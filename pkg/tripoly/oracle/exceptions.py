"""This module contains all exceptions of the oracle package."""

from tripoly.util.exceptions import TripolyError


class OracleError(TripolyError):
    """Base class for oracle related exceptions."""


class OracleCapExceededError(OracleError):
    """Raise if a point set is larger than the oracle is allowed to enumerate."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"The oracle enumerates at most {cap} points, got {size}")


class InvalidFloorError(OracleError):
    """Raise if a polyline can not be the floor of a near-edge."""
