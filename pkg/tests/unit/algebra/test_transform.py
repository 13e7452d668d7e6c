# pylint: disable=missing-docstring
from fractions import Fraction
from random import Random

import pytest
from pytest import raises

from tripoly.algebra.exceptions import BasisMismatchError, DomainError
from tripoly.algebra.polynomial import BasisTag, JointPoly, TaggedPoly
from tripoly.algebra.transform import (
    apply_M,
    apply_T,
    check_curious_formula,
    check_m4_identity,
    check_shifted_basis_identity,
    gen_func_check_M,
    gen_func_check_T,
    lift1,
    lift2,
    m_from_t_by_partial_fractions,
    m_generating_series,
    t_from_m_by_polynomial_part,
    t_generating_series,
    to_tags,
    vee,
    wedge,
)

M_TABLE = [
    "x",
    "x^2-x",
    "x^3-2*x^2",
    "x^4-3*x^3+x^2",
    "x^5-4*x^4+3*x^3",
    "x^6-5*x^5+6*x^4-x^3",
    "x^7-6*x^6+10*x^5-4*x^4",
    "x^8-7*x^7+15*x^6-10*x^5+x^4",
    "x^9-8*x^8+21*x^7-20*x^6+5*x^5",
]

T_TABLE = [
    "y",
    "y^2+y",
    "y^3+2*y^2+2*y",
    "y^4+3*y^3+5*y^2+5*y",
    "y^5+4*y^4+9*y^3+14*y^2+14*y",
    "y^6+5*y^5+14*y^4+28*y^3+42*y^2+42*y",
    "y^7+6*y^6+20*y^5+48*y^4+90*y^3+132*y^2+132*y",
]

T1 = TaggedPoly.parse("y^4+2*y^3+5*y^2")
T4 = TaggedPoly.parse("y^3+4*y^2+3*y")


def y(exponent: int) -> TaggedPoly:
    return TaggedPoly.monomial(BasisTag.Y, exponent)


def x(exponent: int) -> TaggedPoly:
    return TaggedPoly.monomial(BasisTag.X, exponent)


def random_poly(rng: Random, length: int, tag: BasisTag) -> TaggedPoly:
    return TaggedPoly(tag, [rng.randint(-20, 20) for _ in range(length)])


def gaussian_product(left, right):
    return (
        left[0] * right[0] - left[1] * right[1],
        left[0] * right[1] + left[1] * right[0],
    )


class TestBasisTransforms:
    @pytest.mark.parametrize("exponent, image", enumerate(M_TABLE, start=1))
    def test_m_table(self, exponent, image):
        assert str(apply_M(y(exponent))) == image

    @pytest.mark.parametrize("exponent, image", enumerate(T_TABLE, start=1))
    def test_t_table(self, exponent, image):
        assert str(apply_T(x(exponent))) == image

    def test_constants_are_fixed(self):
        assert apply_M(y(0)) == x(0)
        assert apply_T(x(0)) == y(0)

    def test_lower_variables_map_to_lower_variables(self):
        assert apply_M(TaggedPoly.parse("u^2")) == TaggedPoly.parse("v^2-v")
        assert apply_T(TaggedPoly.parse("v^2")) == TaggedPoly.parse("u^2+u")

    def test_wrong_basis_raises(self):
        with raises(BasisMismatchError, match="expected basis y or u, got x"):
            apply_M(x(2))
        with raises(BasisMismatchError, match="expected basis x or v, got u"):
            apply_T(TaggedPoly.parse("u"))

    def test_transforms_are_inverse_on_monomials(self):
        for n in range(61):
            assert apply_T(apply_M(y(n))) == y(n)
            assert apply_M(apply_T(x(n))) == x(n)

    def test_transforms_are_inverse_on_random_polynomials(self):
        rng = Random(1)
        for _ in range(3):
            t = random_poly(rng, rng.randint(1, 201), BasisTag.Y)
            assert apply_T(apply_M(t)) == t

    def test_rational_coefficients(self):
        t = TaggedPoly(BasisTag.Y, [Fraction(1, 3), 0, Fraction(-5, 7)])
        expected = TaggedPoly(BasisTag.X, [Fraction(1, 3), Fraction(5, 7), Fraction(-5, 7)])
        assert apply_M(t) == expected


class TestGeneratingFunctions:
    def test_m_series(self):
        series = m_generating_series(3)
        assert [str(g) for g in series] == ["1", "x", "x^2-x", "x^3-2*x^2"]

    def test_t_series(self):
        series = t_generating_series(3)
        assert [str(g) for g in series] == ["1", "y", "y^2+y", "y^3+2*y^2+2*y"]

    @pytest.mark.parametrize("order", [1, 3, 20])
    def test_checks_hold(self, order):
        assert gen_func_check_M(order)
        assert gen_func_check_T(order)

    def test_checks_need_positive_order(self):
        with raises(DomainError, match="at least 1"):
            gen_func_check_M(0)
        with raises(DomainError, match="at least 1"):
            gen_func_check_T(0)


class TestConvexAndConcaveSum:
    def test_vee_regression(self):
        expected = "y^7+7*y^6+24*y^5+58*y^4+97*y^3+141*y^2+141*y"
        assert str(vee(T1, T4)) == expected

    def test_vee_of_shifted_polynomial(self):
        t2 = TaggedPoly.parse("y^7+2*y^6+5*y^5")
        result = vee(t2, T4)
        assert [result.coeff(e) for e in range(10, 4, -1)] == [1, 7, 24, 58, 97, 149]

    def test_vee_of_extended_polynomial(self):
        t3 = TaggedPoly.parse("y^7+2*y^6+5*y^5-8*y^2-28*y-65")
        expected = "y^10+7*y^9+24*y^8+58*y^7+97*y^6+141*y^5+141*y^4-251*y^2-186*y"
        assert str(vee(t3, T4)) == expected

    def test_vee_unit_and_small_values(self):
        assert vee(y(0), T1) == T1
        assert vee(y(1), y(1)) == TaggedPoly.parse("y^2+y")

    def test_wedge_values(self):
        assert wedge(x(1), x(1)) == TaggedPoly.parse("x^2-x")
        assert wedge(x(0), TaggedPoly.parse("x^3+x")) == TaggedPoly.parse("x^3+x")
        assert wedge(x(2), x(1)) == TaggedPoly.parse("x^3-x^2-x")

    def test_algebraic_laws_on_random_inputs(self):
        rng = Random(4)
        for _ in range(3):
            a, b, c = (random_poly(rng, rng.randint(1, 12), BasisTag.Y) for _ in range(3))
            assert vee(a, b) == vee(b, a)
            assert vee(vee(a, b), c) == vee(a, vee(b, c))
            m1, m2, m3 = (random_poly(rng, rng.randint(1, 12), BasisTag.X) for _ in range(3))
            assert wedge(m1, m2) == wedge(m2, m1)
            assert wedge(wedge(m1, m2), m3) == wedge(m1, wedge(m2, m3))

    def test_basis_mismatch(self):
        with raises(BasisMismatchError):
            vee(T1, TaggedPoly.parse("u^2"))
        with raises(BasisMismatchError):
            wedge(x(1), T1)


class TestLifts:
    def test_lift1_of_monomial(self):
        assert lift1(apply_M, JointPoly.parse("y*u")) == JointPoly.parse("x*u")

    def test_lift2_applies_to_lower_variable(self):
        poly = JointPoly.parse("y^2*u^2+y*u^2")
        assert lift2(apply_M, poly) == JointPoly.parse("y^2*v^2-y^2*v+y*v^2-y*v")

    def test_lifts_are_inverse(self):
        poly = JointPoly.parse("y^3*u+2*y*u^4+y^2*u^2")
        assert lift1(apply_T, lift1(apply_M, poly)) == poly
        assert lift2(apply_T, lift2(apply_M, poly)) == poly

    def test_lift_rejects_incompatible_component(self):
        with raises(BasisMismatchError):
            lift1(apply_T, JointPoly.parse("y*u"))

    def test_to_tags(self):
        poly = JointPoly.parse("y^2*u^2+y*u^2")
        converted = to_tags(poly, (BasisTag.X, BasisTag.V))
        assert converted == JointPoly.parse("x^2*v^2-x^2*v")
        assert to_tags(converted, (BasisTag.Y, BasisTag.U)) == poly


class TestIdentities:
    @pytest.mark.parametrize("text", ["y", "y^2", "y^4+2*y^3+5*y^2", "1"])
    def test_m4_identity(self, text):
        assert check_m4_identity(TaggedPoly.parse(text, BasisTag.Y))

    def test_m4_identity_value(self):
        assert apply_M(T1)(4) == 204

    def test_m4_identity_on_random_polynomials(self):
        rng = Random(9)
        for _ in range(50):
            assert check_m4_identity(random_poly(rng, rng.randint(0, 65), BasisTag.Y))

    def test_curious_formula(self):
        assert check_curious_formula(y(1), [3])
        assert check_curious_formula(y(0), [Fraction(1, 2), 7])
        assert check_curious_formula(T1, [3, 5, -1])

    def test_curious_formula_on_random_polynomials(self):
        rng = Random(10)
        samples = [Fraction(3), Fraction(-2, 3), Fraction(5, 4), Fraction(11), Fraction(-7)]
        for _ in range(20):
            assert check_curious_formula(random_poly(rng, rng.randint(1, 17), BasisTag.Y), samples)

    def test_curious_formula_undefined_at_one(self):
        with raises(DomainError, match="y = 1"):
            check_curious_formula(T1, [2, 1])

    def test_symmetric_form_at_gaussian_points(self):
        m = apply_M(T1)
        # y = 1 + w with |w| = 1 gives m(|y|^2) Im(y) = Im(y t(y))
        for w in [(Fraction(3, 5), Fraction(4, 5)), (Fraction(-5, 13), Fraction(12, 13)), (0, 1)]:
            point = (1 + w[0], w[1])
            power, image = (Fraction(1), Fraction(0)), Fraction(0)
            for coefficient in T1.coefficients:
                power = gaussian_product(power, point)
                image += coefficient * power[1]
            assert m(point[0] ** 2 + point[1] ** 2) * point[1] == image

    def test_shifted_basis_identity(self):
        rng = Random(12)
        assert check_shifted_basis_identity(T1)
        for _ in range(10):
            assert check_shifted_basis_identity(random_poly(rng, rng.randint(1, 30), BasisTag.Y))

    def test_partial_fractions_agree_with_closed_form(self):
        rng = Random(13)
        for _ in range(10):
            t = random_poly(rng, rng.randint(0, 40), BasisTag.Y)
            assert m_from_t_by_partial_fractions(t) == apply_M(t)

    def test_polynomial_part_agrees_with_closed_form(self):
        assert t_from_m_by_polynomial_part(x(2)) == TaggedPoly.parse("y^2+y")
        rng = Random(14)
        for _ in range(10):
            m = random_poly(rng, rng.randint(0, 40), BasisTag.X)
            assert t_from_m_by_polynomial_part(m) == apply_T(m)
