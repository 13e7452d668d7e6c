"""This module computes asymptotic growth rates of the number of triangulations of twin chains.

The twin chain built from N copies of a near-edge A with k segments has 2kN + 2 points and
about a^{yv}_A(2, 4)^{2N} triangulations, up to a polynomial factor. The rate per point is
therefore a^{yv}_A(2, 4)^{1/k}. The count is proven for chains; for other near-edges it rests on
an open conjecture and the report is marked as conjectural.

"""

from decimal import ROUND_DOWN, Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple

from tripoly.algebra.exceptions import DomainError
from tripoly.algebra.polynomial import BasisTag
from tripoly.nearedge.expression import NearEdgeExpression, is_chain_expr
from tripoly.nearedge.joint_polynomial import evaluate_joint, joint_poly
from tripoly.oracle.region_counter import MAX_POINTS

RATE_DIGITS = 40
RATE_QUANTUM = Decimal("0.00001")
EVALUATION_POINT = (2, 4)


class GrowthReport(NamedTuple):
    """Growth of the twin chains of a near-edge.

    rate holds RATE_DIGITS significant digits, rounded_rate five decimal places.
    """

    expression: NearEdgeExpression
    base_value: Fraction
    segments: int
    rate: Decimal
    conjectural: bool

    @property
    def rounded_rate(self) -> Decimal:
        return round_rate(self.rate)


def round_rate(rate: Decimal) -> Decimal:
    """Cut off after five decimal places."""
    return rate.quantize(RATE_QUANTUM, rounding=ROUND_DOWN)


def nth_root(value: Fraction, degree: int) -> Decimal:
    """Positive real degree-th root of a positive rational with RATE_DIGITS digits."""
    with localcontext() as context:
        context.prec = RATE_DIGITS
        base = Decimal(value.numerator) / Decimal(value.denominator)
        if degree == 1:
            return +base
        return base ** (Decimal(1) / Decimal(degree))


def growth_rate(expression: NearEdgeExpression, max_points: int = MAX_POINTS) -> GrowthReport:
    """Growth rate per point of the twin chains of a near-edge.

    Parameters
    ----------
    expression : NearEdgeExpression
        The near-edge A.
    max_points : int
        Largest point-list leaf that is enumerated.

    Raises
    ------
    DomainError
        If A has no segment or a^{yv}_A(2, 4) is not positive.

    """
    segments = expression.segments
    if segments < 1:
        raise DomainError(f"{expression!r} has no segment")
    joint = joint_poly(expression, (BasisTag.Y, BasisTag.V), max_points)
    base_value = evaluate_joint(joint, *EVALUATION_POINT)
    if base_value <= 0:
        raise DomainError(f"a^yv(2, 4) of {expression!r} is {base_value}, not positive")
    return GrowthReport(
        expression=expression,
        base_value=base_value,
        segments=segments,
        rate=nth_root(base_value, segments),
        conjectural=not is_chain_expr(expression),
    )


def flipped_base_value(expression: NearEdgeExpression, max_points: int = MAX_POINTS) -> Fraction:
    """a^{yv}(2, 4) of the flipped near-edge, read off a^{xu}(4, 2) of the near-edge itself."""
    joint = joint_poly(expression, (BasisTag.X, BasisTag.U), max_points)
    return evaluate_joint(joint, *reversed(EVALUATION_POINT))
