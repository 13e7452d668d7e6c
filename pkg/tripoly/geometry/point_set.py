"""This module contains exact planar primitives on points with rational coordinates.

Polylines are tuples of indices into a point sequence. All predicates are decided exactly, points
in general position never produce a zero orientation.

"""

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from tripoly.geometry.exceptions import (
    DegeneracyError,
    DuplicateCoordinateError,
    InvalidPolylineError,
    InvalidShrinkFactorError,
    PointFileError,
)

Coordinate = Union[int, Fraction, str]
Polyline = Tuple[int, ...]


class Point(NamedTuple):
    """Point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Coordinate, y: Coordinate) -> "Point":
        return cls(Fraction(x), Fraction(y))

    def __str__(self):
        return f"{self.x} {self.y}"


def cross(origin: Point, first: Point, second: Point) -> Fraction:
    """Cross product of first - origin and second - origin."""
    return (first.x - origin.x) * (second.y - origin.y) - (first.y - origin.y) * (
        second.x - origin.x
    )


def orient(a: Point, b: Point, c: Point) -> int:
    """Return 1 if a, b, c turn counterclockwise, -1 if clockwise and 0 if collinear."""
    value = cross(a, b, c)
    return (value > 0) - (value < 0)


class PointSet:
    """Immutable ordered sequence of points.

    Parameters
    ----------
    points : iterable of Point or pairs
        Points in their given order; pairs are converted to Point.

    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[Union[Point, Tuple[Coordinate, Coordinate]]]):
        self._points = tuple(
            point if isinstance(point, Point) else Point.of(*point) for point in points
        )

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    def __len__(self):
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __getitem__(self, index):
        return self._points[index]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self._points == other.points

    def __hash__(self):
        return hash(self._points)

    def __repr__(self):
        return f"PointSet({[(str(p.x), str(p.y)) for p in self._points]})"

    def sorted_by_x(self) -> "PointSet":
        return PointSet(sorted(self._points))

    def has_distinct_x(self) -> bool:
        return len({point.x for point in self._points}) == len(self._points)

    def transformed(self, matrix, offset=(0, 0)) -> "PointSet":
        """Apply p -> matrix * p + offset to every point."""
        (a, b), (c, d) = matrix
        return PointSet(
            Point(a * p.x + b * p.y + offset[0], c * p.x + d * p.y + offset[1])
            for p in self._points
        )


class OrderType:
    """Orientations of all triples (i, j, k) with i < j < k of an ordered point set.

    Two point sets have the same order type iff their tables are equal.
    """

    __slots__ = ("_size", "_signs")

    def __init__(self, size: int, signs: Sequence[int]):
        self._size = size
        self._signs = tuple(signs)

    @property
    def size(self) -> int:
        return self._size

    @property
    def signs(self) -> Tuple[int, ...]:
        return self._signs

    def __eq__(self, other):
        return (
            isinstance(other, OrderType)
            and self._size == other.size
            and self._signs == other.signs
        )

    def __hash__(self):
        return hash((self._size, self._signs))

    def __repr__(self):
        text = "".join("+" if sign > 0 else "-" for sign in self._signs)
        return f"OrderType({self._size}, '{text}')"


def order_type(points: Sequence[Point]) -> OrderType:
    """Return the order type of an ordered point set in general position.

    Raises
    ------
    DegeneracyError
        If three of the points are collinear.

    """
    signs = []
    for i, j, k in combinations(range(len(points)), 3):
        sign = orient(points[i], points[j], points[k])
        if sign == 0:
            raise DegeneracyError((i, j, k))
        signs.append(sign)
    return OrderType(len(points), signs)


def require_general_position(points: Sequence[Point]):
    order_type(points)


def _require_distinct_x(points: Sequence[Point]):
    seen = set()
    for point in points:
        if point.x in seen:
            raise DuplicateCoordinateError(f"Two points have the x-coordinate {point.x}")
        seen.add(point.x)


def _monotone_hull(points: Sequence[Point], order: Sequence[int], turn: int) -> List[int]:
    hull: List[int] = []
    for index in order:
        while len(hull) >= 2 and orient(points[hull[-2]], points[hull[-1]], points[index]) != turn:
            hull.pop()
        hull.append(index)
    return hull


def upper_hull(points: Sequence[Point]) -> Polyline:
    """Indices of the upper hull from the leftmost to the rightmost point.

    Raises
    ------
    DuplicateCoordinateError
        If two points share an x-coordinate.

    """
    _require_distinct_x(points)
    order = sorted(range(len(points)), key=lambda index: points[index].x)
    return tuple(_monotone_hull(points, order, -1))


def lower_hull(points: Sequence[Point]) -> Polyline:
    """Indices of the lower hull from the leftmost to the rightmost point."""
    _require_distinct_x(points)
    order = sorted(range(len(points)), key=lambda index: points[index].x)
    return tuple(_monotone_hull(points, order, 1))


def convex_hull(points: Sequence[Point]) -> Polyline:
    """Hull vertices counterclockwise, starting at the lexicographically smallest point."""
    order = sorted(range(len(points)), key=lambda index: points[index])
    if len(order) < 3:
        return tuple(order)
    lower = _monotone_hull(points, order, 1)
    upper = _monotone_hull(points, list(reversed(order)), 1)
    return tuple(lower[:-1] + upper[:-1])


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the segments ab and cd cross in a point interior to both."""
    return (
        orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0
    )


def is_chain(points: Sequence[Point]) -> bool:
    """True iff no edge between two x-consecutive points is crossed by another edge.

    Raises
    ------
    DuplicateCoordinateError
        If two points share an x-coordinate.
    DegeneracyError
        If three points are collinear.

    """
    _require_distinct_x(points)
    require_general_position(points)
    ordered = sorted(points)
    for i in range(len(ordered) - 1):
        a, b = ordered[i], ordered[i + 1]
        for c, d in combinations(ordered, 2):
            if segments_cross(a, b, c, d):
                return False
    return True


def project(point: Point, line: Tuple[Point, Point]) -> Point:
    """Orthogonal projection of point onto the line through two distinct points."""
    start, end = line
    dx, dy = end.x - start.x, end.y - start.y
    length = dx * dx + dy * dy
    if length == 0:
        raise InvalidPolylineError("A line needs two distinct points")
    t = ((point.x - start.x) * dx + (point.y - start.y) * dy) / length
    return Point(start.x + t * dx, start.y + t * dy)


def shrink(points: Sequence[Point], line: Tuple[Point, Point], epsilon: Fraction) -> List[Point]:
    """Move every point towards its projection H on line, to H + epsilon * (P - H).

    Raises
    ------
    InvalidShrinkFactorError
        If epsilon is not in (0, 1].

    """
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= 1:
        raise InvalidShrinkFactorError(f"Shrink factor {epsilon} is not in (0, 1]")
    shrunk = []
    for point in points:
        foot = project(point, line)
        shrunk.append(
            Point(foot.x + epsilon * (point.x - foot.x), foot.y + epsilon * (point.y - foot.y))
        )
    return shrunk


def _is_monotone_in_some_direction(vertices: Sequence[Point]) -> bool:
    # all edge vectors must fit into an open half-plane
    edges = [(b.x - a.x, b.y - a.y) for a, b in zip(vertices, vertices[1:])]
    if any(dx == 0 and dy == 0 for dx, dy in edges):
        return False
    for first in edges:
        if all(
            first[0] * e[1] - first[1] * e[0] > 0
            or (first[0] * e[1] - first[1] * e[0] == 0 and first[0] * e[0] + first[1] * e[1] > 0)
            for e in edges
        ):
            return True
    return False


def _keeps_sign_on_unit_interval(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """True iff a*e^2 + b*e + c has no root with 0 < e <= 1, given it is nonzero at 1."""
    sign = 1 if a + b + c > 0 else -1
    if c == 0:
        return b == 0 or (b > 0) == (sign > 0)
    if (c > 0) != (sign > 0):
        return False
    if a == 0:
        return True
    vertex = -b / (2 * a)
    if 0 < vertex < 1:
        return sign * (c - b * b / (4 * a)) > 0
    return True


def is_near_edge(points: Sequence[Point], polyline: Polyline) -> bool:
    """Decide whether a polyline through some of the points is a near-edge of the point set.

    The vertices must be strictly monotone in some direction, and shrinking them towards the
    line through the first and the last vertex must keep every orientation of the point set for
    every factor in (0, 1]. Each orientation is a quadratic polynomial in the factor, so the
    test is exact.

    Parameters
    ----------
    points : sequence of Point
        Point set in general position.
    polyline : tuple of int
        Indices of the polyline vertices, at least two.

    Raises
    ------
    InvalidPolylineError
        If the polyline has less than two vertices or repeats a point.
    DegeneracyError
        If three points are collinear.

    """
    if len(polyline) < 2 or len(set(polyline)) != len(polyline):
        raise InvalidPolylineError(f"Polyline {polyline} needs two or more distinct vertices")
    if any(index < 0 or index >= len(points) for index in polyline):
        raise InvalidPolylineError(f"Polyline {polyline} refers to missing points")
    require_general_position(points)
    vertices = [points[index] for index in polyline]
    if not _is_monotone_in_some_direction(vertices):
        return False
    line = (vertices[0], vertices[-1])
    # every point is h + e * d with d = 0 for points that don't move
    moving = set(polyline)
    bases, directions = [], []
    for index, point in enumerate(points):
        foot = project(point, line) if index in moving else point
        bases.append(foot)
        directions.append((point.x - foot.x, point.y - foot.y))
    for i, j, k in combinations(range(len(points)), 3):
        if i not in moving and j not in moving and k not in moving:
            continue
        ax, ay = bases[j].x - bases[i].x, bases[j].y - bases[i].y
        bx, by = directions[j][0] - directions[i][0], directions[j][1] - directions[i][1]
        cx, cy = bases[k].x - bases[i].x, bases[k].y - bases[i].y
        dx, dy = directions[k][0] - directions[i][0], directions[k][1] - directions[i][1]
        quadratic = bx * dy - by * dx
        linear = ax * dy - ay * dx + bx * cy - by * cx
        constant = ax * cy - ay * cx
        if not _keeps_sign_on_unit_interval(quadratic, linear, constant):
            return False
    return True


def read_point_file(path: str) -> PointSet:
    """Read one point per line as "x y", with integer, decimal or "p/q" coordinates.

    Everything after "#" is a comment.

    Raises
    ------
    PointFileError
        If the file is missing or a line is not a pair of numbers.

    """
    points = []
    try:
        with open(path, "r", encoding="utf8") as point_file:
            for number, line in enumerate(point_file, start=1):
                fields = line.split("#", 1)[0].split()
                if not fields:
                    continue
                if len(fields) != 2:
                    raise PointFileError(path, f"line {number} does not hold two coordinates")
                try:
                    points.append(Point.of(*fields))
                except ValueError as error:
                    raise PointFileError(path, f"line {number}: {error}") from error
    except OSError as error:
        raise PointFileError(path, str(error)) from error
    return PointSet(points)


def format_points(points: Iterable[Point]) -> str:
    """Inverse of read_point_file."""
    return "".join(f"{point}\n" for point in points)
