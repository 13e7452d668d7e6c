"""This module evaluates the exact formulas behind the modular operations by plain recurrences.

Every step is a vector operation on int64 residues, so a call on degree n costs O(n^2) operations
but never leaves machine integers and never builds rationals. fastcheck compares the fast routes
with these results.

"""

import numpy as np

from tripoly.fastmod.exceptions import ModulusMismatchError
from tripoly.fastmod.mod_poly import ModPoly

SPLIT_BITS = 15


def _same_field(left: ModPoly, right: ModPoly):
    if left.field != right.field:
        raise ModulusMismatchError(left.modulus, right.modulus)


def schoolbook_mul(left: ModPoly, right: ModPoly) -> ModPoly:
    """Product by direct convolution.

    Residues are split into 15-bit halves so that the convolution sums stay below 2^63.
    """
    _same_field(left, right)
    if left.is_zero() or right.is_zero():
        return ModPoly(left.field)
    modulus = left.modulus
    mask = (1 << SPLIT_BITS) - 1
    a, b = left.coefficients, right.coefficients
    a_low, a_high = a & mask, a >> SPLIT_BITS
    b_low, b_high = b & mask, b >> SPLIT_BITS
    low = np.convolve(a_low, b_low) % modulus
    middle = (np.convolve(a_low, b_high) + np.convolve(a_high, b_low)) % modulus
    high = np.convolve(a_high, b_high) % modulus
    combined = low + middle * (1 << SPLIT_BITS) + high * ((1 << 2 * SPLIT_BITS) % modulus)
    return ModPoly(left.field, combined % modulus)


def horner_shift(poly: ModPoly, shift: int) -> ModPoly:
    """poly(y + shift) by Horner's rule."""
    modulus = poly.modulus
    step = shift % modulus
    result = np.zeros(1, dtype=np.int64)
    for coefficient in reversed(poly.tolist()):
        result = (np.concatenate(([0], result)) + step * np.concatenate((result, [0]))) % modulus
        result[0] = (result[0] + coefficient) % modulus
    return ModPoly(poly.field, result)


def moebius_by_recurrence(poly: ModPoly) -> ModPoly:
    """(y - 1)^n poly(y / (y - 1)) for n = deg poly.

    Collects S_k = c_k (y - 1)^(n - k) + y S_(k+1) from the top coefficient down.
    """
    if poly.is_zero():
        return poly
    modulus = poly.modulus
    power = np.ones(1, dtype=np.int64)
    result = np.zeros(0, dtype=np.int64)
    for coefficient in reversed(poly.tolist()):
        result = (np.concatenate(([0], result)) + coefficient * power) % modulus
        power = (np.concatenate(([0], power)) - np.concatenate((power, [0]))) % modulus
    return ModPoly(poly.field, result)


def m_by_recurrence(poly: ModPoly) -> ModPoly:
    """𝓜 of a polynomial in y as the z-coefficient of z·t(z) modulo z² − xz + x.

    With z^k ≡ a_k z + b_k the recurrence is a_k = x a_(k-1) + b_(k-1) and b_k = −x a_(k-1).
    """
    modulus = poly.modulus
    length = poly.degree + 1
    a = np.zeros(length, dtype=np.int64)
    b = np.zeros(length, dtype=np.int64)
    result = np.zeros(length, dtype=np.int64)
    if length:
        b[0] = 1
    for coefficient in poly.tolist():
        shifted = np.zeros(length, dtype=np.int64)
        shifted[1:] = a[:-1]
        a, b = (shifted + b) % modulus, (-shifted) % modulus
        if coefficient:
            result = (result + coefficient * a) % modulus
    return ModPoly(poly.field, result)
