"""This module computes joint triangulation polynomials of near-edges by enumeration.

A roof is a polyline from the first to the last point, with increasing indices, that has every
other point strictly below it. A floor has every other point strictly above it. Each pair of roof
and floor bounds a region that falls apart into pieces between their common vertices; the
triangulations of the region are the products of the triangulations of the pieces.

"""

from logging import DEBUG, getLogger
from typing import Dict, Iterator, List, Sequence, Tuple

from tripoly.algebra.polynomial import BasisTag, JointPoly, TaggedPoly
from tripoly.geometry.point_set import (
    Point,
    PointSet,
    Polyline,
    is_chain,
    orient,
    require_general_position,
)
from tripoly.nearedge.exceptions import NotAChainError, NotANearEdgeError
from tripoly.oracle.exceptions import InvalidFloorError, OracleCapExceededError
from tripoly.oracle.region_counter import MAX_POINTS, count_region

logger = getLogger("Tripoly.Oracle")

JOINT_TAGS = (BasisTag.Y, BasisTag.U)


def _sorted_near_edge(points: Sequence[Point], max_points: int) -> List[Point]:
    if len(points) > max_points:
        raise OracleCapExceededError(len(points), max_points)
    ordered = sorted(points)
    if any(a.x == b.x for a, b in zip(ordered, ordered[1:])):
        raise NotANearEdgeError("The points of a near-edge need distinct x-coordinates")
    require_general_position(ordered)
    return ordered


def _polylines(points: Sequence[Point], side: int) -> Iterator[Polyline]:
    """Monotone polylines from the first to the last point with all skipped points on side."""
    last = len(points) - 1

    def extend(start: int) -> Iterator[Polyline]:
        if start == last:
            yield (last,)
            return
        for end in range(start + 1, last + 1):
            skipped = range(start + 1, end)
            if all(orient(points[start], points[end], points[k]) == side for k in skipped):
                for rest in extend(end):
                    yield (start,) + rest

    yield from extend(0)


def roofs(points: Sequence[Point]) -> List[Polyline]:
    """All roofs of x-sorted points."""
    return list(_polylines(points, -1))


def floors(points: Sequence[Point]) -> List[Polyline]:
    """All floors of x-sorted points."""
    return list(_polylines(points, 1))


def _pieces(roof: Polyline, floor: Polyline) -> Iterator[Tuple[Polyline, Polyline]]:
    shared = sorted(set(roof) & set(floor))
    for start, end in zip(shared, shared[1:]):
        yield (
            tuple(i for i in roof if start <= i <= end),
            tuple(i for i in floor if start <= i <= end),
        )


def count_between(points: Sequence[Point], roof: Polyline, floor: Polyline) -> int:
    """Number of triangulations of the region between a roof and a floor.

    Points strictly between two common vertices and on neither polyline lie inside the piece of
    the region between those vertices.
    """
    on_polylines = set(roof) | set(floor)
    total = 1
    for upper, lower in _pieces(roof, floor):
        if len(upper) == 2 and len(lower) == 2:
            continue
        boundary = [points[i] for i in lower] + [points[i] for i in reversed(upper[1:-1])]
        interior = [
            points[i] for i in range(lower[0] + 1, lower[-1]) if i not in on_polylines
        ]
        total *= count_region(boundary, interior)
        if not total:
            break
    return total


def brute_joint_poly(points: Sequence[Point], max_points: int = MAX_POINTS) -> JointPoly:
    """Joint triangulation polynomial a^{yu} of a standalone near-edge.

    Sums y^|U| u^|L| over all triangulations with roof U and floor L, where |U| and |L| count
    segments.

    Parameters
    ----------
    points : sequence of Point
        The near-edge, in any order; it is sorted by x.
    max_points : int
        Largest near-edge that is enumerated.

    Returns
    -------
    JointPoly
        Polynomial in y (roof) and u (floor).

    Raises
    ------
    OracleCapExceededError
        If there are more than max_points points.
    NotANearEdgeError
        If two points share an x-coordinate.

    """
    ordered = _sorted_near_edge(points, max_points)
    if len(ordered) < 2:
        return JointPoly.from_terms(JOINT_TAGS, {(0, 0): 1})
    roof_list, floor_list = roofs(ordered), floors(ordered)
    if logger.isEnabledFor(DEBUG):
        logger.debug(
            f"Enumerating {len(roof_list)} roofs and {len(floor_list)} floors "
            f"of {len(ordered)} points"
        )
    terms: Dict[Tuple[int, int], int] = {}
    for roof in roof_list:
        for floor in floor_list:
            count = count_between(ordered, roof, floor)
            if count:
                key = (len(roof) - 1, len(floor) - 1)
                terms[key] = terms.get(key, 0) + count
    return JointPoly.from_terms(JOINT_TAGS, terms)


def _require_floor(points: Sequence[Point], floor: Polyline):
    last = len(points) - 1
    if len(floor) < 2 or floor[0] != 0 or floor[-1] != last:
        raise InvalidFloorError(f"Floor {floor} does not run from point 0 to point {last}")
    if any(a >= b for a, b in zip(floor, floor[1:])):
        raise InvalidFloorError(f"Floor {floor} is not monotone")
    for start, end in zip(floor, floor[1:]):
        for k in range(start + 1, end):
            if orient(points[start], points[end], points[k]) != 1:
                raise InvalidFloorError(f"Point {k} is not above floor {floor}")


def fixed_floor_poly(
    points: Sequence[Point], floor: Polyline, max_points: int = MAX_POINTS
) -> TaggedPoly:
    """Sum of y^|U| over the triangulations with the given floor.

    Raises
    ------
    InvalidFloorError
        If floor does not run monotonically from the first to the last point below all others.

    """
    ordered = _sorted_near_edge(points, max_points)
    _require_floor(ordered, tuple(floor))
    coefficients: Dict[int, int] = {}
    for roof in roofs(ordered):
        count = count_between(ordered, roof, tuple(floor))
        if count:
            coefficients[len(roof) - 1] = coefficients.get(len(roof) - 1, 0) + count
    degree = max(coefficients, default=-1)
    return TaggedPoly(BasisTag.Y, [coefficients.get(i, 0) for i in range(degree + 1)])


def upper_triangulation_poly(points: Sequence[Point], max_points: int = MAX_POINTS) -> TaggedPoly:
    """t-polynomial of a chain: upper triangulations counted by the number of roof segments.

    Raises
    ------
    NotAChainError
        If the points are not a chain.

    """
    ordered = _sorted_near_edge(points, max_points)
    if len(ordered) < 2:
        return TaggedPoly.constant(BasisTag.Y, 1)
    if len(ordered) > 2 and not is_chain(ordered):
        raise NotAChainError(f"{PointSet(ordered)!r} is not a chain")
    return fixed_floor_poly(ordered, tuple(range(len(ordered))), max_points)
