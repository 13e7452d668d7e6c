# pylint: disable=missing-docstring
from decimal import Decimal

from tests.acceptance.util import realized
from tripoly.experiments.growth import growth_rate
from tripoly.nearedge.expression import E, Ccvx, Flip, Koch, PolyChain
from tripoly.oracle.brute_force import fixed_floor_poly
from tripoly.run_tripoly import run


def test_koch_stage_five_of_the_primitive_chain(capsys):
    assert run(["growth", "--expr", "koch(E,5)"]) == 0
    assert "rate: 9.02446" in capsys.readouterr().out.splitlines()
    report = growth_rate(Koch(E, 5))
    assert report.segments == 32
    assert not report.conjectural


def test_base_values():
    assert growth_rate(E).base_value == 8
    assert growth_rate(Ccvx(2)).base_value == 72
    assert abs(growth_rate(Ccvx(2)).rate ** 2 - 72) < Decimal("1e-20")


def test_bumps_under_a_concave_arc():
    points = realized(Flip(PolyChain(Ccvx(2), 6)))
    poly = fixed_floor_poly(points, tuple(range(len(points))))
    assert poly.coeff(6) == 1
    assert poly.coeff(9) == 20

