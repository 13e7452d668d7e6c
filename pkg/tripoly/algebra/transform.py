"""This module contains the basis transforms 𝓜 and 𝓣 and the operators built from them.

𝓜 maps the concave basis (y, u) to the convex basis (x, v) and 𝓣 is its inverse. The convex
sum ∨ of two t-polynomials is 𝓣(𝓜(t1) * 𝓜(t2)) and the concave sum ∧ of two
m-polynomials is 𝓜(𝓣(m1) * 𝓣(m2)).

"""

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, List, Tuple

from tripoly.algebra.binomials import binomial, catalan_triangle, sqrt_one_minus_four_z
from tripoly.algebra.exceptions import BasisMismatchError, DomainError
from tripoly.algebra.polynomial import (
    BasisTag,
    JointPoly,
    TaggedPoly,
    integer_form,
    taylor_shift,
)

Transform = Callable[[TaggedPoly], TaggedPoly]


@lru_cache(maxsize=None)
def _m_image(n: int) -> Tuple[int, ...]:
    # y^n -> sum_k (-1)^k binom(n-k, k) x^(n-k)
    image = [0] * (n + 1)
    for k in range(n // 2 + 1):
        image[n - k] = (-1) ** k * binomial(n - k, k)
    return tuple(image)


@lru_cache(maxsize=None)
def _t_image(n: int) -> Tuple[int, ...]:
    return tuple(catalan_triangle(n, k) for k in range(n + 1))


def _apply_images(poly: TaggedPoly, images: Callable[[int], Tuple[int, ...]], tag: BasisTag):
    if poly.is_zero():
        return TaggedPoly(tag)
    numerators, denominator = integer_form(list(poly.coefficients))
    result = [0] * len(numerators)
    for n, value in enumerate(numerators):
        if value:
            for exponent, entry in enumerate(images(n)):
                if entry:
                    result[exponent] += value * entry
    return TaggedPoly(tag, [Fraction(value, denominator) for value in result])


def apply_M(t: TaggedPoly) -> TaggedPoly:
    """Map a polynomial from the concave basis to the convex basis.

    Parameters
    ----------
    t : TaggedPoly
        Polynomial in y (mapped to x) or in u (mapped to v).

    Returns
    -------
    m : TaggedPoly
        The image under yⁿ ↦ Σ_k (−1)^k binom(n−k, k) x^(n−k).

    Raises
    ------
    BasisMismatchError
        If t is not in the concave basis.

    """
    if not t.tag.is_concave:
        raise BasisMismatchError("𝓜", "y or u", t.tag.value)
    return _apply_images(t, _m_image, t.tag.converted())


def apply_T(m: TaggedPoly) -> TaggedPoly:
    """Map a polynomial from the convex basis to the concave basis.

    The image of xⁿ is Σ_{k=1..n} binom(2n−k, n−k) k/(2n−k) y^k, an entry of Catalan's
    triangle per coefficient, and 𝓣(1) = 1.

    Raises
    ------
    BasisMismatchError
        If m is not in the convex basis.

    """
    if m.tag.is_concave:
        raise BasisMismatchError("𝓣", "x or v", m.tag.value)
    return _apply_images(m, _t_image, m.tag.converted())


def _require_same(operation: str, left: TaggedPoly, right: TaggedPoly, concave: bool):
    expected = "y or u" if concave else "x or v"
    for poly in (left, right):
        if poly.tag.is_concave != concave:
            raise BasisMismatchError(operation, expected, poly.tag.value)
    if left.tag != right.tag:
        raise BasisMismatchError(operation, left.tag.value, right.tag.value)


def vee(t1: TaggedPoly, t2: TaggedPoly) -> TaggedPoly:
    """Convex sum t1 ∨ t2 = 𝓣(𝓜(t1) * 𝓜(t2)) of two polynomials in y (or in u)."""
    _require_same("∨", t1, t2, concave=True)
    return apply_T(apply_M(t1) * apply_M(t2))


def wedge(m1: TaggedPoly, m2: TaggedPoly) -> TaggedPoly:
    """Concave sum m1 ∧ m2 = 𝓜(𝓣(m1) * 𝓣(m2)) of two polynomials in x (or in v)."""
    _require_same("∧", m1, m2, concave=False)
    return apply_M(apply_T(m1) * apply_T(m2))


def lift1(operator: Transform, poly: JointPoly) -> JointPoly:
    """Apply 𝓜 or 𝓣 to the upper variable of a joint polynomial."""
    columns = [operator(column) for column in poly.columns()]
    upper = operator(TaggedPoly.constant(poly.upper_tag, 1)).tag
    return JointPoly.from_columns(upper, poly.lower_tag, columns)


def lift2(operator: Transform, poly: JointPoly) -> JointPoly:
    """Apply 𝓜 or 𝓣 to the lower variable of a joint polynomial."""
    rows = [operator(row) for row in poly.row_polys()]
    lower = operator(TaggedPoly.constant(poly.lower_tag, 1)).tag
    return JointPoly.from_rows(poly.upper_tag, lower, rows)


def to_tags(poly: JointPoly, tags: Tuple[BasisTag, BasisTag]) -> JointPoly:
    """Convert a joint polynomial between the pairs (y,u), (x,u), (y,v) and (x,v)."""
    upper, lower = tags
    if not upper.is_upper or lower.is_upper:
        raise BasisMismatchError("convert", "(x|y, u|v)", f"({upper.value}, {lower.value})")
    if poly.upper_tag != upper:
        poly = lift1(apply_M if poly.upper_tag.is_concave else apply_T, poly)
    if poly.lower_tag != lower:
        poly = lift2(apply_M if poly.lower_tag.is_concave else apply_T, poly)
    return poly


def m_generating_series(order: int) -> List[TaggedPoly]:
    """Coefficients of tⁿ in 1/(1 + (t²−t)x) for n <= order, as polynomials in x.

    Expanding 1/(1 − xt + xt²) gives g_0 = 1, g_1 = x and g_n = x(g_{n−1} − g_{n−2}).
    """
    x = TaggedPoly.monomial(BasisTag.X, 1)
    series = [TaggedPoly.constant(BasisTag.X, 1), x]
    while len(series) <= order:
        series.append(x * (series[-1] - series[-2]))
    return series[: order + 1]


def t_generating_series(order: int) -> List[TaggedPoly]:
    """Coefficients of tⁿ in 2/(2 − y + y√(1−4t)) for n <= order, as polynomials in y.

    The function equals 1/(1 − y s(t)) with s(t) = (1 − √(1−4t))/2, so g_0 = 1 and
    g_n = y Σ_{i=1..n} s_i g_{n−i}.
    """
    root = sqrt_one_minus_four_z(order)
    s = [Fraction(0)] + [-value / 2 for value in root[1:]]
    y = TaggedPoly.monomial(BasisTag.Y, 1)
    series = [TaggedPoly.constant(BasisTag.Y, 1)]
    for n in range(1, order + 1):
        inner = sum((series[n - i] * s[i] for i in range(1, n + 1)), TaggedPoly(BasisTag.Y))
        series.append(y * inner)
    return series


def gen_func_check_M(max_order: int) -> bool:
    """Check the generating function of 𝓜 against apply_M on all yⁿ with n <= max_order."""
    if max_order < 1:
        raise DomainError(f"max_order must be at least 1, not {max_order}")
    series = m_generating_series(max_order)
    return all(
        series[n] == apply_M(TaggedPoly.monomial(BasisTag.Y, n)) for n in range(max_order + 1)
    )


def gen_func_check_T(max_order: int) -> bool:
    """Check the generating function of 𝓣 against apply_T on all xⁿ with n <= max_order."""
    if max_order < 1:
        raise DomainError(f"max_order must be at least 1, not {max_order}")
    series = t_generating_series(max_order)
    return all(
        series[n] == apply_T(TaggedPoly.monomial(BasisTag.X, n)) for n in range(max_order + 1)
    )


def check_m4_identity(t: TaggedPoly) -> bool:
    """Check 𝓜(t)(4) = t(2) + 2 t'(2) exactly."""
    return apply_M(t)(4) == t(2) + 2 * t.derivative()(2)


def check_curious_formula(t: TaggedPoly, samples: Iterable[Fraction]) -> bool:
    """Check m(y²/(y−1))·(y−2)/(y−1) = t(y) − t(y/(y−1))/(y−1) at rational points.

    m is 𝓜(t). Both sides are evaluated exactly, no series are involved.

    Raises
    ------
    DomainError
        If a sample is 1.

    """
    m = apply_M(t)
    for sample in samples:
        y = Fraction(sample)
        if y == 1:
            raise DomainError("The curious formula is undefined at y = 1")
        left = m(y * y / (y - 1)) * (y - 2) / (y - 1)
        right = t(y) - t(y / (y - 1)) / (y - 1)
        if left != right:
            return False
    return True


def check_shifted_basis_identity(t: TaggedPoly) -> bool:
    """In the bases (x−4)^i and (y−2)^i the constant coefficient of 𝓜(t) is γ_0 + 2γ_1."""
    gamma = taylor_shift(t, 2)
    mu = taylor_shift(apply_M(t), 4)
    return mu.coeff(0) == gamma.coeff(0) + 2 * gamma.coeff(1)


def m_from_t_by_partial_fractions(t: TaggedPoly) -> TaggedPoly:
    """Compute 𝓜(t) as the divided difference (y t(y) − y' t(y')) / (y − y').

    y and y' are the two roots of z² − xz + x, so the result is the z-coefficient of z·t(z)
    reduced modulo z² − xz + x. With zⁿ ≡ a_n z + b_n the recurrence is
    a_n = x a_{n−1} + b_{n−1} and b_n = −x a_{n−1}.

    """
    if not t.tag.is_concave:
        raise BasisMismatchError("𝓜", "y or u", t.tag.value)
    tag = t.tag.converted()
    x = TaggedPoly.monomial(tag, 1)
    a, b = TaggedPoly(tag), TaggedPoly.constant(tag, 1)
    result = TaggedPoly(tag)
    for coefficient in t.coefficients:
        a, b = x * a + b, -(x * a)
        if coefficient:
            result = result + a * coefficient
    return result


def t_from_m_by_polynomial_part(m: TaggedPoly) -> TaggedPoly:
    """Compute 𝓣(m) as the polynomial part of m(y²/(y−1))·(y−2)/(y−1) in powers of 1/y.

    With z = y − 1 the expression is N(z)/z^(d+1) for
    N(z) = (z−1)·Σ_j m_j (1+z)^(2j) z^(d−j), so the polynomial part is the quotient
    N div z^(d+1), shifted back by z = y − 1.

    """
    if m.tag.is_concave:
        raise BasisMismatchError("𝓣", "x or v", m.tag.value)
    tag = m.tag.converted()
    degree = max(m.degree, 0)
    z = TaggedPoly.monomial(tag, 1)
    one_plus_z_squared = (z + 1) * (z + 1)
    numerator = TaggedPoly(tag)
    power = TaggedPoly.constant(tag, 1)
    for j, coefficient in enumerate(m.coefficients):
        if coefficient:
            numerator = numerator + (power * coefficient).shifted(degree - j)
        power = power * one_plus_z_squared
    numerator = numerator * (z - 1)
    quotient = TaggedPoly(tag, numerator.coefficients[degree + 1 :])
    return taylor_shift(quotient, -1)
