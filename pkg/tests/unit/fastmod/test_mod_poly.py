# pylint: disable=missing-docstring
from fractions import Fraction
from random import Random

import numpy as np
import pytest
from pytest import raises

from tripoly.algebra import polynomial
from tripoly.algebra.polynomial import BasisTag, TaggedPoly
from tripoly.fastmod.exceptions import (
    CharacteristicTooSmallError,
    FastModError,
    ModulusMismatchError,
)
from tripoly.fastmod.mod_poly import (
    ModPoly,
    factorial_table,
    moebius_subst,
    ntt_mul,
    reverse_coefficients,
    taylor_shift,
)
from tripoly.fastmod.ntt import DEFAULT_FIELD, PrimeField

P = DEFAULT_FIELD.modulus
SMALL_FIELD = PrimeField(97, 5)


def mod(coefficients):
    return ModPoly(DEFAULT_FIELD, coefficients)


def random_tagged(seed, degree):
    generator = Random(seed)
    coefficients = [generator.randrange(-20, 20) for _ in range(degree)]
    return TaggedPoly(BasisTag.Y, coefficients + [generator.randrange(1, 20)])


class TestModPoly:
    def test_coefficients_are_reduced_and_trimmed(self):
        poly = mod([-1, P + 2, 0, 0])
        assert poly.tolist() == [P - 1, 2]
        assert poly.degree == 1

    def test_zero_polynomial(self):
        zero = mod([0, 0])
        assert zero.is_zero()
        assert zero.degree == -1
        assert zero == ModPoly(DEFAULT_FIELD)

    def test_coefficients_are_read_only(self):
        with raises(ValueError):
            mod([1, 2]).coefficients[0] = 5

    def test_from_tagged_reduces_fractions(self):
        poly = ModPoly.from_tagged(TaggedPoly(BasisTag.Y, [Fraction(1, 2), -3]))
        assert poly.coeff(0) * 2 % P == 1
        assert poly.coeff(1) == P - 3
        assert poly.coeff(5) == 0

    def test_to_tagged_uses_representatives(self):
        assert mod([-1, 2]).to_tagged(BasisTag.U) == TaggedPoly(BasisTag.U, [P - 1, 2])

    def test_square_of_one_plus_y(self):
        assert (mod([1, 1]) * mod([1, 1])).tolist() == [1, 2, 1]

    def test_product_with_zero(self):
        assert (mod([1, 2, 3]) * ModPoly(DEFAULT_FIELD)).is_zero()

    def test_product_matches_exact_product(self):
        first, second = random_tagged(1, 120), random_tagged(2, 90)
        expected = ModPoly.from_tagged(first * second)
        assert ntt_mul(ModPoly.from_tagged(first), ModPoly.from_tagged(second)) == expected

    def test_arithmetic(self):
        assert (mod([1, 2]) + mod([3, 0, 1])).tolist() == [4, 2, 1]
        assert (mod([1, 2]) - mod([1, 2])).is_zero()
        assert (mod([1, 2]) * 3).tolist() == [3, 6]
        assert (-mod([1])).tolist() == [P - 1]
        assert mod([1, 2]).shifted(2).tolist() == [0, 0, 1, 2]

    def test_evaluation(self):
        assert mod([1, 2, 3])(2) == 17
        assert mod([0, 1])(P + 5) == 5

    def test_fields_must_match(self):
        with raises(ModulusMismatchError, match="modulo 97"):
            _ = mod([1]) + ModPoly(SMALL_FIELD, [1])
        with raises(ModulusMismatchError):
            ntt_mul(mod([1]), ModPoly(SMALL_FIELD, [1]))

    def test_equal_polynomials_hash_equally(self):
        assert hash(mod([1, 2])) == hash(mod([1, 2, 0]))
        assert mod([1, 2]) != ModPoly(SMALL_FIELD, [1, 2])


class TestFactorialTable:
    def test_binomials(self):
        table = factorial_table(DEFAULT_FIELD).require(5)
        top = np.full(8, 5, dtype=np.int64)
        bottom = np.arange(-1, 7, dtype=np.int64)
        assert table.binomials(top, bottom).tolist() == [0, 1, 5, 10, 10, 5, 1, 0]

    def test_characteristic_must_exceed_size(self):
        with raises(CharacteristicTooSmallError, match="modulus larger than it, got 97"):
            factorial_table(SMALL_FIELD).require(97)


class TestReverseCoefficients:
    def test_reverse_at_larger_degree(self):
        assert reverse_coefficients(mod([1, 2]), 3).tolist() == [0, 0, 2, 1]

    def test_reverse_below_degree(self):
        with raises(FastModError, match="degree 1 at degree 0"):
            reverse_coefficients(mod([1, 2]), 0)


class TestTaylorShift:
    def test_shift_of_square(self):
        assert taylor_shift(mod([0, 0, 1]), 1).tolist() == [1, 2, 1]

    def test_shift_by_minus_one(self):
        assert taylor_shift(mod([1, 0, 0, 1]), -1).tolist() == [0, 3, P - 3, 1]

    def test_constants_are_unchanged(self):
        assert taylor_shift(mod([7]), 5) == mod([7])

    @pytest.mark.parametrize("shift", [1, -1, 3, -7])
    def test_shift_matches_exact_substitution(self, shift):
        poly = random_tagged(shift + 100, 300)
        expected = ModPoly.from_tagged(polynomial.taylor_shift(poly, shift))
        assert taylor_shift(ModPoly.from_tagged(poly), shift) == expected

    def test_shift_back_restores_polynomial(self):
        poly = ModPoly.from_tagged(random_tagged(5, 1000))
        assert taylor_shift(taylor_shift(poly, 12345), -12345) == poly

    def test_degree_must_be_below_characteristic(self):
        with raises(CharacteristicTooSmallError):
            taylor_shift(ModPoly(SMALL_FIELD, [1] * 98), 1)


class TestMoebiusSubst:
    def test_square_is_fixed(self):
        assert moebius_subst(mod([0, 0, 1])) == mod([0, 0, 1])

    def test_constant(self):
        assert moebius_subst(mod([1])) == mod([1])

    def test_linear(self):
        # (y - 1) * (2 + 3 y / (y - 1)) = 5y - 2
        assert moebius_subst(mod([2, 3])).tolist() == [P - 2, 5]

    def test_matches_exact_numerator(self):
        poly = random_tagged(11, 80)
        expected = ModPoly.from_tagged(polynomial.moebius_numerator(poly))
        assert moebius_subst(ModPoly.from_tagged(poly)) == expected

    def test_is_an_involution(self):
        coefficients = Random(3).choices(range(10), k=200) + [1]
        poly = ModPoly.from_tagged(TaggedPoly(BasisTag.Y, coefficients))
        assert moebius_subst(moebius_subst(poly)) == poly
