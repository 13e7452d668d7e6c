"""This module compares [y¹]𝓣(m_A) with m_A(4) for chains.

Both numbers are expected to agree up to a polynomial factor. Nothing here is proven, the
comparison is reported for inspection only.

"""

from fractions import Fraction
from typing import NamedTuple

from tripoly.algebra.transform import apply_T
from tripoly.nearedge.expression import NearEdgeExpression
from tripoly.nearedge.joint_polynomial import chain_polys
from tripoly.oracle.region_counter import MAX_POINTS


class HeuristicReport(NamedTuple):
    expression: NearEdgeExpression
    first_coefficient: Fraction
    m_at_four: Fraction
    ratio: Fraction


def heuristic_diagnostic(
    expression: NearEdgeExpression, max_points: int = MAX_POINTS
) -> HeuristicReport:
    """Compute [y¹]𝓣(m_A(x)), m_A(4) and their ratio.

    Raises
    ------
    NotAChainError
        If the expression is not a chain.

    """
    m = chain_polys(expression, max_points).m
    first_coefficient = apply_T(m).coeff(1)
    m_at_four = m(4)
    return HeuristicReport(expression, first_coefficient, m_at_four, first_coefficient / m_at_four)
