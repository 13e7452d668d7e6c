"""This module contains all exceptions of the algebra package."""

from tripoly.util.exceptions import TripolyError


class AlgebraError(TripolyError):
    """Base class for algebra related exceptions."""


class BasisMismatchError(AlgebraError):
    """Raise if an operation receives polynomials in incompatible bases."""

    def __init__(self, operation: str, expected, received):
        super().__init__(f"{operation}: expected basis {expected}, got {received}")


class DomainError(AlgebraError):
    """Raise if an argument lies outside the domain of an operation."""


class PolynomialParseError(AlgebraError):
    """Raise if a polynomial string can not be parsed."""

    def __init__(self, text: str, offset: int, reason: str):
        self.text = text
        self.offset = offset
        super().__init__(f"Can't parse polynomial '{text}' at offset {offset}: {reason}")
