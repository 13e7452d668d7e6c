"""This module contains dense polynomials over a prime field and the substitutions on them.

The Taylor shift uses a single convolution of factorial-scaled coefficients, so it needs the
characteristic to exceed the degree. The substitution y -> y/(y-1) is reduced to two shifts and a
coefficient reversal.

"""

from functools import lru_cache
from typing import Iterable, List, Union

import numpy as np

from tripoly.algebra.polynomial import BasisTag, TaggedPoly
from tripoly.fastmod.exceptions import (
    CharacteristicTooSmallError,
    FastModError,
    ModulusMismatchError,
)
from tripoly.fastmod.ntt import DEFAULT_FIELD, PrimeField, get_transform


class ModPoly:
    """Polynomial with coefficients in the residues [0, p) of a prime field.

    Instances are immutable and trimmed; the zero polynomial stores no coefficients.

    Parameters
    ----------
    field : PrimeField
        Field of the coefficients.
    coefficients : iterable of int or numpy array
        Coefficients indexed by exponent, reduced on construction.

    """

    def __init__(self, field: PrimeField, coefficients: Union[Iterable[int], np.ndarray] = ()):
        modulus = field.modulus
        if isinstance(coefficients, np.ndarray):
            values = np.mod(coefficients.astype(np.int64), modulus)
        else:
            values = np.array([int(value) % modulus for value in coefficients], dtype=np.int64)
        values = np.trim_zeros(values, "b")
        values.flags.writeable = False
        self._field = field
        self._coefficients = values

    @classmethod
    def from_tagged(cls, poly: TaggedPoly, field: PrimeField = DEFAULT_FIELD) -> "ModPoly":
        """Reduce an exact polynomial; the tag is dropped."""
        return cls(field, [field.residue(value) for value in poly.coefficients])

    def to_tagged(self, tag: BasisTag) -> TaggedPoly:
        """Exact polynomial with the representatives in [0, p) as coefficients."""
        return TaggedPoly(tag, self._coefficients.tolist())

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def modulus(self) -> int:
        return self._field.modulus

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    def is_zero(self) -> bool:
        return len(self._coefficients) == 0

    def coeff(self, exponent: int) -> int:
        if 0 <= exponent < len(self._coefficients):
            return int(self._coefficients[exponent])
        return 0

    def tolist(self) -> List[int]:
        return self._coefficients.tolist()

    def _require_same_field(self, other: "ModPoly"):
        if other.field != self._field:
            raise ModulusMismatchError(self.modulus, other.modulus)

    def _padded(self, length: int) -> np.ndarray:
        padded = np.zeros(length, dtype=np.int64)
        padded[: len(self._coefficients)] = self._coefficients
        return padded

    def __add__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        self._require_same_field(other)
        length = max(len(self._coefficients), len(other.coefficients))
        return ModPoly(self._field, self._padded(length) + other._padded(length))

    def __neg__(self):
        return ModPoly(self._field, -self._coefficients)

    def __sub__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModPoly(self._field, self._coefficients * (other % self.modulus))
        if not isinstance(other, ModPoly):
            return NotImplemented
        return ntt_mul(self, other)

    __rmul__ = __mul__

    def shifted(self, exponent: int) -> "ModPoly":
        """Multiply by var^exponent."""
        padding = np.zeros(exponent, dtype=np.int64)
        return ModPoly(self._field, np.concatenate((padding, self._coefficients)))

    def __call__(self, value: int) -> int:
        result = 0
        for coefficient in reversed(self._coefficients.tolist()):
            result = (result * value + coefficient) % self.modulus
        return result

    def __eq__(self, other):
        if not isinstance(other, ModPoly):
            return False
        return self._field == other.field and np.array_equal(self._coefficients, other.coefficients)

    def __hash__(self):
        return hash((self._field, self._coefficients.tobytes()))

    def __repr__(self):
        terms = ", ".join(str(value) for value in self._coefficients[:8].tolist())
        if len(self._coefficients) > 8:
            terms += ", ..."
        return f"ModPoly(mod {self.modulus}, degree {self.degree}, [{terms}])"


def ntt_mul(left: ModPoly, right: ModPoly) -> ModPoly:
    """Product of two polynomials over the same field.

    Raises
    ------
    ModulusMismatchError
        If the fields differ.
    TransformLengthError
        If the degree sum does not fit into the longest supported transform.

    """
    left._require_same_field(right)  # pylint: disable=protected-access
    transform = get_transform(left.field)
    return ModPoly(left.field, transform.convolve(left.coefficients, right.coefficients))


class FactorialTable:
    """Factorials and their inverses modulo a prime, grown on demand."""

    def __init__(self, field: PrimeField):
        self._field = field
        self.factorials = np.ones(1, dtype=np.int64)
        self.inverse_factorials = np.ones(1, dtype=np.int64)

    def require(self, size: int) -> "FactorialTable":
        """Make sure factorials of 0..size are present.

        Raises
        ------
        CharacteristicTooSmallError
            If size is not smaller than the modulus.

        """
        modulus = self._field.modulus
        if size >= modulus:
            raise CharacteristicTooSmallError(size, modulus)
        if size < len(self.factorials):
            return self
        target = max(size + 1, 2 * len(self.factorials))
        target = min(target, modulus)
        factorials = [1] * target
        for n in range(1, target):
            factorials[n] = factorials[n - 1] * n % modulus
        inverses = [1] * target
        inverses[-1] = self._field.inverse(factorials[-1])
        for n in range(target - 1, 0, -1):
            inverses[n - 1] = inverses[n] * n % modulus
        self.factorials = np.array(factorials, dtype=np.int64)
        self.inverse_factorials = np.array(inverses, dtype=np.int64)
        return self

    def binomials(self, top: np.ndarray, bottom) -> np.ndarray:
        """binom(top, bottom) elementwise, zero where bottom < 0 or bottom > top."""
        modulus = self._field.modulus
        top = np.asarray(top, dtype=np.int64)
        bottom = np.broadcast_to(np.asarray(bottom, dtype=np.int64), top.shape)
        valid = (bottom >= 0) & (bottom <= top)
        safe_top = np.where(valid, top, 0)
        safe_bottom = np.where(valid, bottom, 0)
        values = self.factorials[safe_top] * self.inverse_factorials[safe_bottom] % modulus
        values = values * self.inverse_factorials[safe_top - safe_bottom] % modulus
        return np.where(valid, values, 0)


@lru_cache(maxsize=None)
def factorial_table(field: PrimeField) -> FactorialTable:
    return FactorialTable(field)


def reverse_coefficients(poly: ModPoly, degree: int) -> ModPoly:
    """Return var^degree * poly(1/var).

    Raises
    ------
    FastModError
        If degree is smaller than the degree of poly.

    """
    if degree < poly.degree:
        raise FastModError(f"Can't reverse a polynomial of degree {poly.degree} at degree {degree}")
    return ModPoly(poly.field, poly.coefficients[::-1]).shifted(degree - poly.degree)


def taylor_shift(poly: ModPoly, shift: int) -> ModPoly:
    """Return poly(var + shift).

    With A_i = a_i i! and B_j = shift^j / j!, the coefficient of var^k is
    (1/k!) sum_i A_i B_{i-k}, one convolution of the reversed A with B.

    Raises
    ------
    CharacteristicTooSmallError
        If the degree is not smaller than the modulus.

    """
    if poly.degree < 1:
        return poly
    field, degree = poly.field, poly.degree
    modulus = field.modulus
    table = factorial_table(field).require(degree)
    scaled = poly.coefficients * table.factorials[: degree + 1] % modulus
    powers = [1] * (degree + 1)
    base = shift % modulus
    for j in range(1, degree + 1):
        powers[j] = powers[j - 1] * base % modulus
    weights = np.array(powers, dtype=np.int64) * table.inverse_factorials[: degree + 1] % modulus
    product = get_transform(field).convolve(scaled[::-1].copy(), weights)
    shifted = product[degree::-1] * table.inverse_factorials[: degree + 1] % modulus
    return ModPoly(field, shifted)


def moebius_subst(poly: ModPoly) -> ModPoly:
    """Return (var-1)^d * poly(var/(var-1)) with d the degree of poly.

    With z = var - 1 the substitution is var -> 1 + 1/z, so the result is the reversal of
    poly(z + 1) at degree d, shifted back by -1.

    Raises
    ------
    CharacteristicTooSmallError
        If the degree is not smaller than the modulus.

    """
    if poly.degree < 1:
        return poly
    return taylor_shift(reverse_coefficients(taylor_shift(poly, 1), poly.degree), -1)
