# pylint: disable=missing-docstring
import pytest

from tests.acceptance.util import expression_corpus, realized
from tripoly.geometry.point_set import lower_hull, upper_hull
from tripoly.nearedge.joint_polynomial import joint_poly
from tripoly.oracle.brute_force import brute_joint_poly

CORPUS = expression_corpus()


def test_corpus_covers_several_hundred_expressions():
    assert len(CORPUS) > 300
    assert max(expression.segments for expression in CORPUS) == 9


@pytest.mark.parametrize("expression", CORPUS, ids=repr)
def test_joint_polynomial_matches_enumeration(expression):
    assert joint_poly(expression) == brute_joint_poly(realized(expression))


@pytest.mark.parametrize("expression", CORPUS, ids=repr)
def test_minimal_exponents_are_hull_segment_counts(expression):
    points = realized(expression)
    hulls = (len(upper_hull(points)) - 1, len(lower_hull(points)) - 1)
    assert joint_poly(expression).lowest_exponents() == hulls
