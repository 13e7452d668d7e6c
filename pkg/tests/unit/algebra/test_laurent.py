# pylint: disable=missing-docstring
from fractions import Fraction

from pytest import raises

from tripoly.algebra.exceptions import BasisMismatchError, DomainError
from tripoly.algebra.laurent import LaurentSeries
from tripoly.algebra.polynomial import BasisTag, TaggedPoly


def hat_one(order: int) -> LaurentSeries:
    return LaurentSeries(BasisTag.Y, order, {0: 1, **{-k: -1 for k in range(1, order + 1)}})


class TestLaurentSeries:
    def test_unit_is_neutral(self):
        series = hat_one(6)
        assert series * 1 == series
        assert series * LaurentSeries(BasisTag.Y, 6, {0: 1}) == series

    def test_square_of_hat_one(self):
        square = hat_one(2) * hat_one(2)
        assert square.order == 2
        assert square.as_dict() == {0: 1, -1: -2, -2: -1}

    def test_product_keeps_the_smaller_order(self):
        left = LaurentSeries(BasisTag.Y, 5, {0: 1, -1: 3})
        right = LaurentSeries(BasisTag.Y, 3, {0: 2, -3: 1})
        assert (left * right).order == 3

    def test_product_order_accounts_for_degrees(self):
        left = LaurentSeries(BasisTag.Y, 5, {2: 1, -1: 1})
        right = LaurentSeries(BasisTag.Y, 5, {1: 1})
        assert (left * right).order == 3

    def test_product_order_never_exceeds_the_operands(self):
        left = LaurentSeries(BasisTag.Y, 4, {-1: 1})
        right = LaurentSeries(BasisTag.Y, 3, {-2: 1})
        product = left * right
        assert product.order == 3
        assert product.as_dict() == {-3: 1}

    def test_product_with_too_small_order(self):
        left = LaurentSeries(BasisTag.Y, 1, {5: 1})
        with raises(DomainError, match="too small"):
            _ = left * left

    def test_agrees_with_polynomial_multiplication(self):
        a = TaggedPoly.parse("y^3+2*y-1")
        b = TaggedPoly.parse("3*y^2+y")
        product = LaurentSeries.from_polynomial(a, 4) * LaurentSeries.from_polynomial(b, 4)
        assert product.polynomial_part() == a * b
        assert all(exponent >= 0 for exponent, _ in product.terms())

    def test_coefficients_below_the_order_are_unknown(self):
        series = hat_one(3)
        assert series.coeff(-3) == -1
        assert series.coeff(4) == 0
        with raises(DomainError, match="unknown"):
            series.coeff(-4)

    def test_truncation(self):
        series = hat_one(5).truncated(2)
        assert series == hat_one(2)
        with raises(DomainError):
            series.truncated(3)

    def test_agrees_with_compares_common_orders(self):
        assert hat_one(8).agrees_with(hat_one(3))
        assert not hat_one(8).agrees_with(LaurentSeries(BasisTag.Y, 3, {0: 1}))

    def test_addition_of_polynomials_and_scalars(self):
        series = hat_one(2) + TaggedPoly.parse("y^2") - 1
        assert series.as_dict() == {2: 1, -1: -1, -2: -1}

    def test_mixing_variables_raises(self):
        with raises(BasisMismatchError):
            _ = hat_one(2) + LaurentSeries(BasisTag.X, 2, {0: 1})

    def test_inverse_of_hat_one(self):
        # 1 - 1/(y-1) = (y-2)/(y-1), so the inverse is 1 + 1/(y-2) = 1 + sum 2^(k-1) y^-k
        inverse = hat_one(5).inverse()
        assert inverse.as_dict() == {0: 1, -1: 1, -2: 2, -3: 4, -4: 8, -5: 16}
        assert (inverse * hat_one(5)).as_dict() == {0: 1}

    def test_inverse_of_zero(self):
        with raises(DomainError, match="no inverse"):
            LaurentSeries(BasisTag.Y, 3, {}).inverse()

    def test_str(self):
        series = LaurentSeries(BasisTag.Y, 2, {1: 1, -1: Fraction(-1, 2)})
        assert str(series) == "y-1/2*y^-1+O(y^-3)"
