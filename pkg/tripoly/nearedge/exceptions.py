"""This module contains all exceptions of the nearedge package."""

from tripoly.util.exceptions import TripolyError


class NearEdgeError(TripolyError):
    """Base class for near-edge related exceptions."""


class ExpressionSyntaxError(NearEdgeError):
    """Raise if a near-edge expression can not be parsed."""

    def __init__(self, text: str, offset: int, reason: str):
        self.text = text
        self.offset = offset
        super().__init__(f"Syntax error in '{text}' at offset {offset}: {reason}")


class ExpressionFileError(NearEdgeError):
    """Raise if a point file referenced by pts(...) can not be loaded."""


class NotAChainError(NearEdgeError):
    """Raise if an operation that needs a chain receives another near-edge."""


class NotANearEdgeError(NearEdgeError):
    """Raise if a point list is not a standalone near-edge."""
