# pylint: disable=missing-docstring
from fractions import Fraction
from random import Random

import numpy as np
import pytest
from pytest import raises

from tripoly.fastmod.exceptions import FastModError, TransformLengthError
from tripoly.fastmod.ntt import DEFAULT_FIELD, NumberTheoreticTransform, PrimeField, get_transform

P = DEFAULT_FIELD.modulus
SMALL_FIELD = PrimeField(97, 5)


def naive_product(left, right, modulus):
    product = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            product[i + j] = (product[i + j] + a * b) % modulus
    return product


class TestPrimeField:
    def test_default_field_supports_transforms_of_length_two_to_the_23(self):
        assert DEFAULT_FIELD.two_adicity == 23
        assert get_transform().max_length == 1 << 23

    def test_residue_of_fraction(self):
        half = DEFAULT_FIELD.residue(Fraction(1, 2))
        assert half * 2 % P == 1
        assert DEFAULT_FIELD.residue(-1) == P - 1

    def test_residue_of_non_invertible_denominator(self):
        with raises(FastModError, match="not invertible"):
            SMALL_FIELD.residue(Fraction(1, 97))


class TestNumberTheoreticTransform:
    def setup_class(self):
        self.transform = get_transform(DEFAULT_FIELD)

    def test_delta_transforms_to_ones(self):
        assert self.transform.forward(np.array([1, 0, 0, 0])).tolist() == [1, 1, 1, 1]

    def test_forward_evaluates_at_powers_of_a_root_of_unity(self):
        root = pow(3, (P - 1) // 4, P)
        expected = [pow(root, j, P) for j in range(4)]
        assert self.transform.forward(np.array([0, 1, 0, 0])).tolist() == expected

    @pytest.mark.parametrize("length", [1, 2, 4, 8, 64, 1024])
    def test_inverse_undoes_forward(self, length):
        generator = Random(length)
        values = np.array([generator.randrange(P) for _ in range(length)], dtype=np.int64)
        restored = self.transform.inverse(self.transform.forward(values))
        assert restored.tolist() == values.tolist()

    def test_length_must_be_a_power_of_two(self):
        with raises(TransformLengthError):
            self.transform.forward(np.zeros(6, dtype=np.int64))

    @pytest.mark.parametrize("sizes", [(1, 1), (3, 70), (65, 65), (100, 150)])
    def test_convolve_matches_naive_product(self, sizes):
        generator = Random(sum(sizes))
        left = [generator.randrange(P) for _ in range(sizes[0])]
        right = [generator.randrange(P) for _ in range(sizes[1])]
        product = self.transform.convolve(np.array(left), np.array(right))
        assert product.tolist() == naive_product(left, right, P)

    def test_convolve_with_empty_input(self):
        assert len(self.transform.convolve(np.array([1, 2]), np.zeros(0, dtype=np.int64))) == 0

    def test_convolve_beyond_supported_length(self):
        transform = NumberTheoreticTransform(SMALL_FIELD)
        assert transform.max_length == 32
        with raises(TransformLengthError, match="Transform length 256 exceeds"):
            transform.convolve(np.ones(65, dtype=np.int64), np.ones(65, dtype=np.int64))

    def test_small_products_skip_the_transform(self):
        transform = NumberTheoreticTransform(SMALL_FIELD)
        product = transform.convolve(np.ones(40, dtype=np.int64), np.ones(40, dtype=np.int64))
        assert product.tolist() == naive_product([1] * 40, [1] * 40, 97)

    def test_root_without_full_two_power_order(self):
        with raises(FastModError, match="not a primitive root"):
            NumberTheoreticTransform(PrimeField(97, 4))

    def test_modulus_must_fit_into_31_bits(self):
        with raises(FastModError, match="below 2\\^31"):
            NumberTheoreticTransform(PrimeField(2**61 - 1, 37))
