"""This module contains all exceptions of the fastmod package."""

from tripoly.util.exceptions import TripolyError


class FastModError(TripolyError):
    """Base class for fastmod related exceptions."""


class ModulusMismatchError(FastModError):
    """Raise if polynomials over different prime fields are combined."""

    def __init__(self, expected, received):
        super().__init__(f"Expected polynomial modulo {expected}, got modulo {received}")


class TransformLengthError(FastModError):
    """Raise if a product does not fit into the longest number theoretic transform."""

    def __init__(self, length: int, max_length: int):
        self.length = length
        self.max_length = max_length
        super().__init__(f"Transform length {length} exceeds the supported length {max_length}")


class CharacteristicTooSmallError(FastModError):
    """Raise if factorials up to a degree are not invertible modulo the prime."""

    def __init__(self, degree: int, modulus: int):
        self.degree = degree
        self.modulus = modulus
        super().__init__(f"Degree {degree} needs a modulus larger than it, got {modulus}")
