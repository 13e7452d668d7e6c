"""This module realizes near-edge expressions and double circles with exact coordinates.

Composite near-edges are glued onto the anchor triangles (0, 0), (1, -1), (2, 0) for the convex
sum and (0, 0), (1, 1), (2, 0) for the concave sum. The glued copies are squeezed towards the
anchor edges by a factor that is halved until the order type no longer changes.

"""

from fractions import Fraction
from functools import lru_cache
from logging import DEBUG, getLogger
from math import pi, tan
from typing import Callable, List, Sequence, Tuple

from tripoly.geometry.exceptions import DegeneracyError, RealizationError
from tripoly.geometry.point_set import Point, PointSet, order_type
from tripoly.nearedge.expression import (
    Flip,
    Leaf,
    NearEdgeExpression,
    PrimitiveChain,
    Vee,
    Wedge,
)

logger = getLogger("Tripoly.Realization")

EPSILON_START = Fraction(1, 4)
MAX_HALVINGS = 64

_ORIGIN = Point.of(0, 0)
_RIGHT = Point.of(2, 0)


def _same_order_type(first: Sequence[Point], second: Sequence[Point]) -> bool:
    try:
        return order_type(first) == order_type(second)
    except DegeneracyError:
        return False


def _x_increasing(points: Sequence[Point]) -> bool:
    return all(a.x < b.x for a, b in zip(points, points[1:]))


def stabilize(
    build: Callable[[Fraction], List[Point]],
    epsilon_start: Fraction = EPSILON_START,
    max_halvings: int = MAX_HALVINGS,
    x_monotone: bool = True,
) -> Tuple[List[Point], Fraction]:
    """Halve the squeeze factor until building with it and with its half gives one order type.

    Parameters
    ----------
    build : callable
        Builds the point list for a squeeze factor.
    epsilon_start : Fraction
        First factor of the ladder.
    max_halvings : int
        Number of halvings after which the search gives up.
    x_monotone : bool
        Additionally require strictly increasing x-coordinates.

    Returns
    -------
    points, epsilon
        The stable point list and the factor it was built with.

    Raises
    ------
    RealizationError
        If no factor on the ladder is stable.

    """
    epsilon = Fraction(epsilon_start)
    for _ in range(max_halvings + 1):
        candidate = build(epsilon)
        if (not x_monotone or _x_increasing(candidate)) and _same_order_type(
            candidate, build(epsilon / 2)
        ):
            return candidate, epsilon
        epsilon /= 2
    raise RealizationError(
        f"Order type did not stabilize within {max_halvings} halvings of {epsilon_start}"
    )


def _normalized(points: Sequence[Point]) -> List[Point]:
    # shear and scale so that the endpoints become (0, 0) and (1, 0)
    first, last = points[0], points[-1]
    width = last.x - first.x
    slope = (last.y - first.y) / width
    return [
        Point((p.x - first.x) / width, (p.y - first.y - slope * (p.x - first.x)) / width)
        for p in points
    ]


def _onto_segment(start: Point, end: Point, point: Point) -> Point:
    # complex similarity z -> start + (end - start) * z
    a, b = end.x - start.x, end.y - start.y
    return Point(start.x + a * point.x - b * point.y, start.y + a * point.y + b * point.x)


def glue(left: Sequence[Point], right: Sequence[Point], apex: Point, epsilon) -> List[Point]:
    """Glue two realized near-edges onto (0, 0) -> apex and apex -> (2, 0), squeezed by epsilon.

    The result holds (0, 0), the interior of left, apex, the interior of right and (2, 0).

    Raises
    ------
    RealizationError
        If a near-edge has a single point.

    """
    if len(left) < 2 or len(right) < 2:
        raise RealizationError("A single point can not be glued onto an edge")
    glued = [_ORIGIN]
    for start, end, points in ((_ORIGIN, apex, left), (apex, _RIGHT, right)):
        for point in _normalized(points)[1:-1]:
            glued.append(_onto_segment(start, end, Point(point.x, point.y * epsilon)))
        glued.append(end)
    return glued


@lru_cache(maxsize=4096)
def _realize(
    expression: NearEdgeExpression, epsilon_start: Fraction, max_halvings: int
) -> Tuple[Point, ...]:
    if isinstance(expression, PrimitiveChain):
        return (Point.of(0, 0), Point.of(1, 0))
    if isinstance(expression, Leaf):
        return expression.points.points
    if isinstance(expression, Flip):
        inner = _realize(expression.expression, epsilon_start, max_halvings)
        return tuple(Point(p.x, -p.y) for p in inner)
    if isinstance(expression, (Vee, Wedge)):
        left = _realize(expression.left, epsilon_start, max_halvings)
        right = _realize(expression.right, epsilon_start, max_halvings)
        apex = Point.of(1, -1) if isinstance(expression, Vee) else Point.of(1, 1)
        points, epsilon = stabilize(
            lambda e: glue(left, right, apex, e), epsilon_start, max_halvings
        )
        if logger.isEnabledFor(DEBUG):
            logger.debug(f"Realized {expression!r} with {len(points)} points at ε = {epsilon}")
        return tuple(points)
    raise RealizationError(f"Can not realize {expression!r}")


def realize(
    expression: NearEdgeExpression,
    epsilon_start: Fraction = EPSILON_START,
    max_halvings: int = MAX_HALVINGS,
) -> PointSet:
    """Exact coordinates of a near-edge expression, sorted by x.

    Parameters
    ----------
    expression : NearEdgeExpression
        Expression to realize, derived nodes are expanded first.
    epsilon_start : Fraction
        First squeeze factor of the halving ladder.
    max_halvings : int
        Number of halvings after which a composite is reported as unrealizable.

    Raises
    ------
    RealizationError
        If a composite does not stabilize on the ladder or glues a single point.

    """
    return PointSet(_realize(expression.core(), Fraction(epsilon_start), max_halvings))


def requantize(points: Sequence[Point], max_denominator: int = 2**64) -> PointSet:
    """Round coordinates to small denominators while keeping order type and x-order.

    The denominator bound grows by squaring from 16; the input is returned unchanged if no bound
    up to max_denominator keeps the order type.
    """
    reference = list(points)
    bound = 16
    while bound <= max_denominator:
        rounded = [
            Point(p.x.limit_denominator(bound), p.y.limit_denominator(bound)) for p in reference
        ]
        if _x_increasing(rounded) == _x_increasing(reference) and _same_order_type(
            rounded, reference
        ):
            return PointSet(rounded)
        bound *= bound
    return PointSet(reference)


def _circle_point(angle: float, max_denominator: int) -> Point:
    # rational parametrization of the unit circle by s = tan(angle / 2)
    s = Fraction(tan(angle / 2)).limit_denominator(max_denominator)
    return Point((1 - s * s) / (1 + s * s), 2 * s / (1 + s * s))


def double_circle(
    n: int,
    epsilon_start: Fraction = EPSILON_START,
    max_halvings: int = MAX_HALVINGS,
    max_denominator: int = 10**6,
) -> PointSet:
    """Double circle with 2n points: a rational n-gon plus one point just inside each edge.

    Points are ordered v0, m0, v1, m1, ... where m_k lies near the midpoint of v_k v_k+1.

    Raises
    ------
    RealizationError
        If n is smaller than 3 or the inner points do not stabilize.

    """
    if n < 3:
        raise RealizationError(f"A double circle needs at least 3 hull points, not {n}")
    hull = [_circle_point(2 * pi * (k + Fraction(1, 4)) / n, max_denominator) for k in range(n)]
    if len(set(hull)) != n:
        raise RealizationError(f"Rational hull points of the {n}-gon collapsed")

    def build(delta: Fraction) -> List[Point]:
        points = []
        for k, vertex in enumerate(hull):
            following = hull[(k + 1) % n]
            scale = (1 - delta) / 2
            points.append(vertex)
            points.append(Point(scale * (vertex.x + following.x), scale * (vertex.y + following.y)))
        return points

    points, delta = stabilize(build, epsilon_start, max_halvings, x_monotone=False)
    logger.debug(f"Double circle with {n} hull points uses δ = {delta}")
    return PointSet(points)
