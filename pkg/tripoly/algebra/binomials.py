"""Memoized binomial coefficients, Catalan numbers and binomial series."""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Tuple

from tripoly.algebra.exceptions import DomainError


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside of 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def catalan(n: int) -> Fraction:
    """Return the n-th Catalan number C_n = binom(2n+1, n) / (2n+1).

    Raises
    ------
    DomainError
        If n is negative.

    """
    if n < 0:
        raise DomainError(f"Catalan numbers are defined for n >= 0, not {n}")
    return Fraction(binomial(2 * n + 1, n), 2 * n + 1)


def central_binomial(n: int) -> int:
    return binomial(2 * n, n)


@lru_cache(maxsize=None)
def catalan_triangle(n: int, k: int) -> int:
    """Coefficient of y^k in the image of x^n under 𝓣.

    This is binom(2n-k, n-k) * k / (2n-k), an entry of Catalan's triangle.
    """
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    # ballot numbers, the division is exact
    return binomial(2 * n - k, n - k) * k // (2 * n - k)


@lru_cache(maxsize=None)
def binomial_series(alpha: Fraction, scale: Fraction, order: int) -> Tuple[Fraction, ...]:
    """Coefficients of (1 + scale*z)^alpha up to z^order.

    Uses the generalized binomial coefficients alpha*(alpha-1)*...*(alpha-n+1)/n!, which are
    rational for rational alpha.

    Parameters
    ----------
    alpha : Fraction
        Exponent of the series.
    scale : Fraction
        Factor in front of z.
    order : int
        Highest power of z that is returned.

    Returns
    -------
    coefficients : tuple of Fraction
        Coefficients indexed by the power of z.

    """
    coefficients = [Fraction(1)]
    term = Fraction(1)
    for n in range(1, order + 1):
        term = term * (alpha - n + 1) / n * scale
        coefficients.append(term)
    return tuple(coefficients)


def sqrt_one_minus_four_z(order: int) -> Tuple[Fraction, ...]:
    """Coefficients of (1 - 4z)^(1/2) up to z^order: 1, -2, -2, -4, -10, -28, ..."""
    return binomial_series(Fraction(1, 2), Fraction(-4), order)
