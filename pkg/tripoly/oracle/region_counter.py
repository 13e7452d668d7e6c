"""This module counts triangulations of polygonal regions with interior points.

A region is a simple polygon, given counterclockwise, together with the points inside of it.
Every triangulation contains exactly one triangle on the boundary edge v0 v1. Removing it splits
the region into at most two smaller regions, whose counts multiply.

"""

from functools import lru_cache
from typing import FrozenSet, Iterable, Sequence, Tuple

from tripoly.geometry.point_set import Point, convex_hull, orient, require_general_position
from tripoly.oracle.exceptions import OracleCapExceededError

Boundary = Tuple[Point, ...]

MAX_POINTS = 13


def _strictly_inside_triangle(a: Point, b: Point, c: Point, point: Point) -> bool:
    return orient(a, b, point) > 0 and orient(b, c, point) > 0 and orient(c, a, point) > 0


def _properly_crosses(a: Point, b: Point, c: Point, d: Point) -> bool:
    if len({a, b, c, d}) < 4:
        return False
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


def _inside_polygon(polygon: Sequence[Point], point: Point) -> bool:
    # crossing number with half-open edges
    inside = False
    for start, end in zip(polygon, polygon[1:] + polygon[:1]):
        if (start.y > point.y) != (end.y > point.y):
            x = start.x + (point.y - start.y) * (end.x - start.x) / (end.y - start.y)
            if point.x < x:
                inside = not inside
    return inside


def _is_admissible_apex(boundary: Boundary, interior: FrozenSet[Point], apex: Point) -> bool:
    first, second = boundary[0], boundary[1]
    if orient(first, second, apex) <= 0:
        return False
    for point in (*boundary[2:], *interior):
        if point != apex and _strictly_inside_triangle(first, second, apex, point):
            return False
    edges = zip(boundary, boundary[1:] + boundary[:1])
    return not any(
        _properly_crosses(first, apex, start, end) or _properly_crosses(second, apex, start, end)
        for start, end in edges
    )


def _canonical(boundary: Sequence[Point]) -> Boundary:
    start = min(range(len(boundary)), key=boundary.__getitem__)
    return tuple(boundary[start:]) + tuple(boundary[:start])


def count_region(boundary: Sequence[Point], interior: Iterable[Point] = ()) -> int:
    """Number of triangulations of a counterclockwise polygon with the given interior points.

    A boundary of two points is a single edge with exactly one triangulation.
    """
    interior = frozenset(interior)
    if len(boundary) < 3:
        return 1 if not interior else 0
    return _count(_canonical(boundary), interior)


@lru_cache(maxsize=1 << 16)
def _count(boundary: Boundary, interior: FrozenSet[Point]) -> int:
    if len(boundary) == 3 and not interior:
        return 1
    first, second = boundary[0], boundary[1]
    total = 0
    for index in range(2, len(boundary)):
        apex = boundary[index]
        if not _is_admissible_apex(boundary, interior, apex):
            continue
        right = boundary[1 : index + 1]
        left = boundary[index:] + (first,)
        right_points = frozenset(p for p in interior if _inside_polygon(right, p))
        count = count_region(right, right_points)
        if count:
            total += count * count_region(left, interior - right_points)
    for apex in interior:
        if _is_admissible_apex(boundary, interior, apex):
            total += count_region((first, apex, second) + boundary[2:], interior - {apex})
    return total


def clear_cache():
    _count.cache_clear()


def count_all_triangulations(points: Sequence[Point], max_points: int = MAX_POINTS) -> int:
    """Count all triangulations of a point set in general position.

    Parameters
    ----------
    points : sequence of Point
        The point set.
    max_points : int
        Largest point set the count is attempted for.

    Raises
    ------
    DegeneracyError
        If three points are collinear.
    OracleCapExceededError
        If there are more than max_points points.

    """
    require_general_position(points)
    if len(points) > max_points:
        raise OracleCapExceededError(len(points), max_points)
    if len(points) < 3:
        return 1
    hull = convex_hull(points)
    boundary = tuple(points[index] for index in hull)
    interior = frozenset(points[index] for index in range(len(points)) if index not in hull)
    return count_region(boundary, interior)
