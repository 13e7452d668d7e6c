"""Hat operators extending t- and m-polynomials to Laurent series in the inverse variable.

With these extensions the convex sum becomes plain multiplication up to a unit series:

    ĥt1 · ĥt2 = ĥ(t1 ∨ t2) · ĥ1        ĥm1 · ĥm2 = ĥ(m1 ∧ m2) · ĥ1

where ĥ1 is the hat of the constant 1 in the respective variable.

"""

from fractions import Fraction
from typing import Dict

from tripoly.algebra.binomials import binomial, central_binomial, sqrt_one_minus_four_z
from tripoly.algebra.exceptions import BasisMismatchError, DomainError
from tripoly.algebra.laurent import LaurentSeries
from tripoly.algebra.polynomial import TaggedPoly, moebius_numerator
from tripoly.algebra.transform import apply_M, apply_T, vee, wedge


def _require_order(order: int):
    if order < 1:
        raise DomainError(f"Truncation order must be at least 1, not {order}")


def hat_t(t: TaggedPoly, order: int) -> LaurentSeries:
    """Expand ĥt(y) = t(y) − t(y/(y−1))/(y−1) in powers of 1/y down to y^-order.

    t(y/(y−1)) is P(y)/(y−1)^d with P the exact Möbius numerator of t, so the subtracted
    term is P(y)/(y−1)^(d+1), and 1/(y−1)^(d+1) = Σ_k binom(d+k, k) y^(−d−1−k).

    Parameters
    ----------
    t : TaggedPoly
        Polynomial in the concave basis.
    order : int
        Truncation order of the series.

    Returns
    -------
    series : LaurentSeries
        ĥt, known from its top degree down to y^-order.

    Raises
    ------
    BasisMismatchError
        If t is not in the concave basis.
    DomainError
        If order is smaller than 1.

    """
    if not t.tag.is_concave:
        raise BasisMismatchError("hat_t", "y or u", t.tag.value)
    _require_order(order)
    terms: Dict[int, Fraction] = dict(enumerate(t.coefficients))
    if t.is_zero():
        return LaurentSeries(t.tag, order, terms)
    degree = t.degree
    numerator = moebius_numerator(t)
    for exponent, coefficient in enumerate(numerator.coefficients):
        if not coefficient:
            continue
        for k in range(order):
            target = exponent - degree - 1 - k
            if target < -order:
                break
            terms[target] = terms.get(target, Fraction(0)) - coefficient * binomial(degree + k, k)
    return LaurentSeries(t.tag, order, terms)


def hat_m(m: TaggedPoly, order: int) -> LaurentSeries:
    """Expand ĥm(x) = [m(x)·S/2]·(1/S) + m(x)/2 with S = √(1−4/x), down to x^-order.

    [f] keeps the terms of f with nonnegative exponents. 1/S has the central binomial
    coefficients as its coefficients in 1/x.

    Raises
    ------
    BasisMismatchError
        If m is not in the convex basis.
    DomainError
        If order is smaller than 1.

    """
    if m.tag.is_concave:
        raise BasisMismatchError("hat_m", "x or v", m.tag.value)
    _require_order(order)
    degree = max(m.degree, 0)
    root = sqrt_one_minus_four_z(degree)
    polynomial_part = [
        sum(m.coeff(i) * root[i - e] for i in range(e, degree + 1)) / 2 for e in range(degree + 1)
    ]
    terms: Dict[int, Fraction] = {}
    for exponent in range(-order, degree + 1):
        terms[exponent] = m.coeff(exponent) / 2 if exponent >= 0 else Fraction(0)
        for i in range(max(exponent, 0), degree + 1):
            if polynomial_part[i]:
                terms[exponent] += polynomial_part[i] * central_binomial(i - exponent)
    return LaurentSeries(m.tag, order, terms)


def _padded(order: int, *polys: TaggedPoly) -> int:
    return order + sum(max(poly.degree, 0) for poly in polys)


def check_hat_t_identity(t1: TaggedPoly, t2: TaggedPoly, order: int) -> bool:
    """Check ĥt1·ĥt2 = ĥ(t1∨t2)·ĥ1 on all coefficients down to y^-order."""
    padded = _padded(order, t1, t2)
    one = TaggedPoly.constant(t1.tag, 1)
    left = hat_t(t1, padded) * hat_t(t2, padded)
    right = hat_t(vee(t1, t2), padded) * hat_t(one, padded)
    return left.truncated(order) == right.truncated(order)


def check_hat_m_identity(m1: TaggedPoly, m2: TaggedPoly, order: int) -> bool:
    """Check ĥm1·ĥm2 = ĥ(m1∧m2)·ĥ1 on all coefficients down to x^-order."""
    padded = _padded(order, m1, m2)
    one = TaggedPoly.constant(m1.tag, 1)
    left = hat_m(m1, padded) * hat_m(m2, padded)
    right = hat_m(wedge(m1, m2), padded) * hat_m(one, padded)
    return left.truncated(order) == right.truncated(order)


def _evaluate(poly: TaggedPoly, series: LaurentSeries) -> LaurentSeries:
    result = LaurentSeries(series.tag, series.order, {})
    for coefficient in reversed(poly.coefficients):
        result = result * series + coefficient
    return result


def check_hat_substitution_identity(t: TaggedPoly, order: int) -> bool:
    """Check 𝓜(t)(ŷ/ĥ1) = ĥt/ĥ1 for the y-hat and 𝓣(m)(x̂/ĥ1) = ĥm/ĥ1 for the x-hat.

    The concave or convex basis of the argument selects the identity.
    """
    padded = order + 2 * max(t.degree, 0) + 4
    one = TaggedPoly.constant(t.tag, 1)
    variable = TaggedPoly.monomial(t.tag, 1)
    if t.tag.is_concave:
        hat, image = hat_t, apply_M(t)
    else:
        hat, image = hat_m, apply_T(t)
    unit_inverse = hat(one, padded).inverse()
    argument = hat(variable, padded) * unit_inverse
    left = _evaluate(image.retagged(t.tag), argument)
    right = hat(t, padded) * unit_inverse
    if min(left.order, right.order) < order:
        raise DomainError(f"Padding is too small to compare down to order {order}")
    return left.truncated(order) == right.truncated(order)
