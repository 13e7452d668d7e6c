"""This module contains 𝓜, 𝓣 and the sums ∨ and ∧ over a prime field.

Two routes compute the transforms:

closed_form
    Every monomial is mapped with binomials from a factorial table, O(n²) in total.
divide_and_conquer
    𝓜(t) is read off t(Z) reduced modulo Z² - xZ + x, and 𝓣(m) is the polynomial part of
    m(y²/(y-1))·(y-2)/(y-1). Both are assembled by halving the coefficient list, O(n log² n).

Both routes return identical results.

"""

from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from tripoly.fastmod.mod_poly import ModPoly, factorial_table, taylor_shift

Pair = Tuple[ModPoly, ModPoly]


class FastRoute(Enum):
    """Algorithm used for 𝓜 and 𝓣 modulo p."""

    CLOSED_FORM = "closed_form"
    DIVIDE_AND_CONQUER = "divide_and_conquer"


def _m_closed_form(t: ModPoly) -> ModPoly:
    # y^n -> sum_k (-1)^k binom(n-k, k) x^(n-k)
    degree, modulus = t.degree, t.modulus
    table = factorial_table(t.field).require(degree)
    result = np.zeros(degree + 1, dtype=np.int64)
    for n, value in enumerate(t.tolist()):
        if value:
            k = np.arange(n // 2 + 1, dtype=np.int64)
            entries = table.binomials(n - k, k)
            entries = np.where(k % 2 == 1, (modulus - entries) % modulus, entries)
            result[n - k] = (result[n - k] + value * entries) % modulus
    return ModPoly(t.field, result)


def _t_closed_form(m: ModPoly) -> ModPoly:
    # x^n -> sum_k (binom(2n-k-1, n-1) - binom(2n-k-1, n)) y^k for k = 1..n, 1 -> 1
    degree, modulus = m.degree, m.modulus
    table = factorial_table(m.field).require(max(2 * degree - 2, 0))
    result = np.zeros(degree + 1, dtype=np.int64)
    for n, value in enumerate(m.tolist()):
        if not value:
            continue
        if n == 0:
            result[0] = (result[0] + value) % modulus
            continue
        k = np.arange(1, n + 1, dtype=np.int64)
        top = 2 * n - k - 1
        entries = (table.binomials(top, n - 1) - table.binomials(top, n)) % modulus
        result[k] = (result[k] + value * entries) % modulus
    return ModPoly(m.field, result)


def _pair_product(first: Pair, second: Pair, x: ModPoly) -> Pair:
    # (a1 Z + b1)(a2 Z + b2) with Z² = xZ - x
    a1, b1 = first
    a2, b2 = second
    top = a1 * a2
    return x * top + a1 * b2 + a2 * b1, b1 * b2 - x * top


def _m_divide_and_conquer(t: ModPoly) -> ModPoly:
    field = t.field
    zero = ModPoly(field)
    x = ModPoly(field, [0, 1])
    coefficients = t.tolist()
    length = 1 << (len(coefficients) - 1).bit_length()
    powers: List[Pair] = [(ModPoly(field, [1]), zero)]
    while 1 << len(powers) < length:
        powers.append(_pair_product(powers[-1], powers[-1], x))

    def reduce(start: int, size: int, level: int) -> Pair:
        if size == 1:
            return zero, ModPoly(field, [coefficients[start]])
        half = size // 2
        low = reduce(start, half, level - 1)
        if start + half >= len(coefficients):
            return low
        high = _pair_product(reduce(start + half, half, level - 1), powers[level - 1], x)
        return low[0] + high[0], low[1] + high[1]

    a, b = reduce(0, length, length.bit_length() - 1)
    # Z * (aZ + b) = (xa + b) Z - xa
    return x * a + b


def _t_divide_and_conquer(m: ModPoly) -> ModPoly:
    field = m.field
    coefficients = m.tolist()
    length = 1 << (len(coefficients) - 1).bit_length()
    y_minus_one = ModPoly(field, [-1, 1])
    powers: Dict[int, ModPoly] = {1: y_minus_one}
    size = 1
    while size < length:
        powers[2 * size] = powers[size] * powers[size]
        size *= 2

    def numerator(start: int, size: int) -> ModPoly:
        # sum over the block of m_n y^(2(n-start)) (y-1)^(size-(n-start))
        if size == 1:
            return y_minus_one * coefficients[start]
        half = size // 2
        low = powers[half] * numerator(start, half)
        if start + half >= len(coefficients):
            return low
        return low + numerator(start + half, half).shifted(size)

    # m(y²/(y-1)) (y-2)/(y-1) = numerator * (y-2) / (y-1)^(length+1)
    product = numerator(0, length) * ModPoly(field, [-2, 1])
    in_z = taylor_shift(product, 1)
    return taylor_shift(ModPoly(field, in_z.coefficients[length + 1 :]), -1)


def apply_M_mod(t: ModPoly, route: FastRoute = FastRoute.CLOSED_FORM) -> ModPoly:
    """𝓜 of a polynomial in the concave basis, modulo p.

    Raises
    ------
    CharacteristicTooSmallError
        If the degree is not smaller than the modulus.

    """
    if t.degree < 1:
        return t
    if route == FastRoute.DIVIDE_AND_CONQUER:
        return _m_divide_and_conquer(t)
    return _m_closed_form(t)


def apply_T_mod(m: ModPoly, route: FastRoute = FastRoute.CLOSED_FORM) -> ModPoly:
    """𝓣 of a polynomial in the convex basis, modulo p.

    Raises
    ------
    CharacteristicTooSmallError
        If twice the degree is not smaller than the modulus.

    """
    if m.degree < 1:
        return m
    if route == FastRoute.DIVIDE_AND_CONQUER:
        return _t_divide_and_conquer(m)
    return _t_closed_form(m)


def vee_mod(t1: ModPoly, t2: ModPoly, route: FastRoute = FastRoute.CLOSED_FORM) -> ModPoly:
    """Convex sum 𝓣(𝓜(t1)·𝓜(t2)) of two t-polynomials modulo p.

    Raises
    ------
    ModulusMismatchError
        If the polynomials live in different fields.

    """
    return apply_T_mod(apply_M_mod(t1, route) * apply_M_mod(t2, route), route)


def wedge_mod(m1: ModPoly, m2: ModPoly, route: FastRoute = FastRoute.CLOSED_FORM) -> ModPoly:
    """Concave sum 𝓜(𝓣(m1)·𝓣(m2)) of two m-polynomials modulo p."""
    return apply_M_mod(apply_T_mod(m1, route) * apply_T_mod(m2, route), route)
