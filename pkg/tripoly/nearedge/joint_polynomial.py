"""This module evaluates near-edge expressions to joint triangulation polynomials.

a^{yu} of a composite is assembled from the polynomials of its parts: in the basis pair (x, u)
the convex sum multiplies, in (y, v) the concave sum multiplies, and flipping swaps the roles of
roof and floor. Only point-list leaves are enumerated.

"""

from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from typing import NamedTuple, Sequence, Tuple

from tripoly.algebra.binomials import binomial, catalan
from tripoly.algebra.exceptions import DomainError
from tripoly.algebra.polynomial import BasisTag, JointPoly, TaggedPoly
from tripoly.algebra.transform import apply_M, apply_T, lift1, lift2, to_tags
from tripoly.geometry.point_set import lower_hull, upper_hull
from tripoly.geometry.realization import EPSILON_START, MAX_HALVINGS, realize
from tripoly.nearedge.exceptions import NotAChainError
from tripoly.nearedge.expression import (
    Flip,
    Leaf,
    NearEdgeExpression,
    PrimitiveChain,
    TwinChain,
    Vee,
    Wedge,
    is_chain_expr,
)
from tripoly.oracle.brute_force import brute_joint_poly
from tripoly.oracle.region_counter import MAX_POINTS

logger = getLogger("Tripoly.NearEdge")

YU = (BasisTag.Y, BasisTag.U)
HULL_CHECK_MAX_POINTS = 12


class ChainPolynomials(NamedTuple):
    """t, m, t* and m* of a chain, and whether a^{yu} equals t(y) t*(u)."""

    t: TaggedPoly
    m: TaggedPoly
    t_star: TaggedPoly
    m_star: TaggedPoly
    consistent: bool


@lru_cache(maxsize=4096)
def _joint_yu(expression: NearEdgeExpression, max_points: int) -> JointPoly:
    if isinstance(expression, PrimitiveChain):
        return JointPoly.parse("y*u")
    if isinstance(expression, Leaf):
        return brute_joint_poly(expression.points.points, max_points)
    if isinstance(expression, Flip):
        return _joint_yu(expression.expression, max_points).transposed()
    left = _joint_yu(expression.left, max_points)
    right = _joint_yu(expression.right, max_points)
    if isinstance(expression, Vee):
        return lift1(apply_T, lift1(apply_M, left) * lift1(apply_M, right))
    if isinstance(expression, Wedge):
        return lift2(apply_T, lift2(apply_M, left) * lift2(apply_M, right))
    raise DomainError(f"Unknown near-edge expression {expression!r}")


def joint_poly(
    expression: NearEdgeExpression,
    tags: Tuple[BasisTag, BasisTag] = YU,
    max_points: int = MAX_POINTS,
) -> JointPoly:
    """Joint triangulation polynomial of a near-edge in the requested basis pair.

    Parameters
    ----------
    expression : NearEdgeExpression
        The near-edge; derived nodes are expanded first.
    tags : tuple of BasisTag
        Upper variable (y or x) and lower variable (u or v) of the result.
    max_points : int
        Largest point-list leaf that is enumerated.

    Raises
    ------
    OracleCapExceededError
        If a point-list leaf has more than max_points points.

    """
    return to_tags(_joint_yu(expression.core(), max_points), tags)


def clear_cache():
    _joint_yu.cache_clear()


def chain_polys(expression: NearEdgeExpression, max_points: int = MAX_POINTS) -> ChainPolynomials:
    """Split a^{yu} of a chain into t(y) t*(u) and convert both factors with 𝓜.

    The roof of a chain that is the chain itself carries exactly one triangulation, so the
    column at u^k and the row at y^k recover t and t*, k being the number of segments.

    Raises
    ------
    NotAChainError
        If the expression is not a chain.

    """
    if not is_chain_expr(expression):
        raise NotAChainError(f"{expression!r} is not a chain")
    joint = joint_poly(expression, YU, max_points)
    segments = expression.segments
    corner = joint.coeff(segments, segments)
    if not corner:
        raise NotAChainError(f"{expression!r} has no triangulation with roof and floor on it")
    t = joint.column(segments) * (1 / corner)
    t_star = joint.row(segments)
    return ChainPolynomials(
        t=t,
        m=apply_M(t),
        t_star=t_star,
        m_star=apply_M(t_star),
        consistent=JointPoly.outer(t, t_star) == joint,
    )


def count_triangulations(
    expression: NearEdgeExpression,
    max_points: int = MAX_POINTS,
    hull_check_max_points: int = HULL_CHECK_MAX_POINTS,
    epsilon_start: Fraction = EPSILON_START,
    max_halvings: int = MAX_HALVINGS,
) -> int:
    """Number of triangulations of a near-edge, read off at the minimal exponents of a^{yu}.

    Realizations with at most hull_check_max_points points, built with the given ε ladder, are
    compared with their upper and lower hulls; a mismatch is logged as a warning.
    """
    if expression.segments < 1:
        return 1
    joint = joint_poly(expression, YU, max_points)
    upper, lower = joint.lowest_exponents()
    if expression.segments + 1 <= hull_check_max_points:
        points = realize(expression, epsilon_start, max_halvings).points
        hulls = (len(upper_hull(points)) - 1, len(lower_hull(points)) - 1)
        if hulls != (upper, lower):
            logger.warning(
                f"Minimal exponents {(upper, lower)} of {expression!r} differ from its hull "
                f"segment counts {hulls}"
            )
    return int(joint.coeff(upper, lower))


def count_glued_polygon(edges: Sequence[NearEdgeExpression], max_points: int = MAX_POINTS) -> int:
    """Number of triangulations of a convex polygon with near-edges glued onto its edges.

    Every near-edge is glued with its upper side towards the inside of the polygon. The count
    is [y u^j] 𝓣¹(∏ a^{xu} / x), j being the minimal u-exponent of the product.

    Raises
    ------
    DomainError
        If there are less than three edges or the product is not divisible by x.

    """
    if len(edges) < 3:
        raise DomainError(f"A polygon needs at least 3 edges, not {len(edges)}")
    product = None
    for edge in edges:
        factor = joint_poly(edge, (BasisTag.X, BasisTag.U), max_points)
        product = factor if product is None else product * factor
    if product.is_zero() or any(product.rows[0]):
        raise DomainError("The product of the glued near-edges is not divisible by x")
    quotient = JointPoly(product.tags, product.rows[1:])
    _, lower = product.lowest_exponents()
    return int(lift1(apply_T, quotient).coeff(1, lower))


def twin_chain_count(expression: NearEdgeExpression, copies: int, **kwargs) -> int:
    """Number of triangulations of the twin-A near-edge with the given number of copies."""
    return count_triangulations(TwinChain(expression, copies), **kwargs)


def inclusion_exclusion_double_circle(n: int) -> int:
    """Triangulations of the double circle with 2n points.

    This is Σ (−1)^k binom(n, k) C_{2n−2−k}, gluing n concave pairs onto an n-gon.
    """
    if n < 3:
        raise DomainError(f"A double circle needs at least 3 hull points, not {n}")
    return int(sum((-1) ** k * binomial(n, k) * catalan(2 * n - 2 - k) for k in range(n + 1)))


def evaluate_joint(poly: JointPoly, upper, lower) -> Fraction:
    return poly(upper, lower)
