"""This module contains the number theoretic transform over NTT-friendly prime fields.

Residues are stored in numpy int64 arrays. The moduli in use are below 2^31, so the product of two
residues stays below 2^62 and can be reduced without overflow.

"""

from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

import numpy as np

from tripoly.fastmod.exceptions import FastModError, TransformLengthError

SCHOOLBOOK_THRESHOLD = 64


class PrimeField(NamedTuple):
    """Prime modulus together with a generator of its multiplicative group."""

    modulus: int
    primitive_root: int

    @property
    def two_adicity(self) -> int:
        """Largest k with 2^k dividing modulus - 1."""
        value, k = self.modulus - 1, 0
        while value % 2 == 0:
            value //= 2
            k += 1
        return k

    def inverse(self, value: int) -> int:
        return pow(value % self.modulus, self.modulus - 2, self.modulus)

    def residue(self, value) -> int:
        """Reduce an int or a Fraction with invertible denominator."""
        numerator = getattr(value, "numerator", value)
        denominator = getattr(value, "denominator", 1)
        if denominator % self.modulus == 0:
            raise FastModError(f"Denominator of {value} is not invertible modulo {self.modulus}")
        return numerator * self.inverse(denominator) % self.modulus


DEFAULT_FIELD = PrimeField(998244353, 3)


def _bit_reversal(length: int) -> np.ndarray:
    bits = length.bit_length() - 1
    indices = np.arange(length, dtype=np.int64)
    reversed_indices = np.zeros(length, dtype=np.int64)
    for bit in range(bits):
        reversed_indices |= ((indices >> bit) & 1) << (bits - 1 - bit)
    return reversed_indices


class NumberTheoreticTransform:
    """Iterative radix-2 transform of power of two lengths up to 2^two_adicity.

    Parameters
    ----------
    field : PrimeField
        Field with an element of order 2^k for every supported length 2^k.

    Raises
    ------
    FastModError
        If the modulus does not fit into 31 bits or the root has no power of order
        2^two_adicity.

    """

    def __init__(self, field: PrimeField):
        self._field = field
        self.max_length = 1 << field.two_adicity
        if not 2 < field.modulus < 1 << 31:
            raise FastModError(f"Modulus {field.modulus} must be an odd prime below 2^31")
        if pow(field.primitive_root, (field.modulus - 1) // 2, field.modulus) != field.modulus - 1:
            raise FastModError(
                f"{field.primitive_root} is not a primitive root modulo {field.modulus}"
            )
        self._twiddles: Dict[Tuple[int, bool], np.ndarray] = {}
        self._permutations: Dict[int, np.ndarray] = {}

    @property
    def field(self) -> PrimeField:
        return self._field

    def _twiddle(self, length: int, inverse: bool) -> np.ndarray:
        key = (length, inverse)
        if key not in self._twiddles:
            modulus = self._field.modulus
            root = pow(self._field.primitive_root, (modulus - 1) // length, modulus)
            if inverse:
                root = self._field.inverse(root)
            powers = [1] * (length // 2)
            for j in range(1, length // 2):
                powers[j] = powers[j - 1] * root % modulus
            self._twiddles[key] = np.array(powers, dtype=np.int64)
        return self._twiddles[key]

    def _permutation(self, length: int) -> np.ndarray:
        if length not in self._permutations:
            self._permutations[length] = _bit_reversal(length)
        return self._permutations[length]

    def _butterflies(self, values: np.ndarray, inverse: bool) -> np.ndarray:
        length = len(values)
        if length & (length - 1) or length > self.max_length:
            raise TransformLengthError(length, self.max_length)
        modulus = self._field.modulus
        result = values[self._permutation(length)]
        half = 1
        while half < length:
            blocks = result.reshape(-1, 2 * half)
            even = blocks[:, :half]
            odd = blocks[:, half:] * self._twiddle(2 * half, inverse) % modulus
            result = np.concatenate(((even + odd) % modulus, (even - odd) % modulus), axis=1)
            result = result.reshape(-1)
            half *= 2
        return result

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Evaluate at the powers of a primitive root of unity of order len(values)."""
        return self._butterflies(np.asarray(values, dtype=np.int64), inverse=False)

    def inverse(self, values: np.ndarray) -> np.ndarray:
        result = self._butterflies(np.asarray(values, dtype=np.int64), inverse=True)
        return result * self._field.inverse(len(values)) % self._field.modulus

    def convolve(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Cyclic-free product of two residue arrays.

        Raises
        ------
        TransformLengthError
            If the product is longer than the longest supported transform.

        """
        if len(left) == 0 or len(right) == 0:
            return np.zeros(0, dtype=np.int64)
        if min(len(left), len(right)) <= SCHOOLBOOK_THRESHOLD:
            return _schoolbook(left, right, self._field.modulus)
        size = len(left) + len(right) - 1
        length = 1 << (size - 1).bit_length()
        if length > self.max_length:
            raise TransformLengthError(length, self.max_length)
        padded_left = np.zeros(length, dtype=np.int64)
        padded_left[: len(left)] = left
        padded_right = np.zeros(length, dtype=np.int64)
        padded_right[: len(right)] = right
        spectrum = self.forward(padded_left) * self.forward(padded_right) % self._field.modulus
        return self.inverse(spectrum)[:size]


def _schoolbook(left: np.ndarray, right: np.ndarray, modulus: int) -> np.ndarray:
    short, long = (left, right) if len(left) <= len(right) else (right, left)
    result = np.zeros(len(left) + len(right) - 1, dtype=np.int64)
    for i, value in enumerate(short.tolist()):
        if value:
            window = result[i : i + len(long)]
            result[i : i + len(long)] = (window + value * long) % modulus
    return result


@lru_cache(maxsize=None)
def get_transform(field: PrimeField = DEFAULT_FIELD) -> NumberTheoreticTransform:
    """Shared transform of a field; its tables only ever grow."""
    return NumberTheoreticTransform(field)
