"""This module reads order type databases and turns their point sets into near-edges.

A database file holds records of n points, every point stored as x and y, both unsigned
little-endian integers of 8 bits (n <= 8) or 16 bits (n of 9 and 10). The files are named
"otypes<n>.b<width>", for example "otypes10.b16".

A near-edge is obtained from a record by picking a convex hull vertex Y: the remaining points,
ordered counterclockwise around Y, become the polyline. A projective map that sends Y to the point
at infinity above the plane makes that order the x-order without changing the order type.

"""

import os
from fractions import Fraction
from logging import getLogger
from typing import Iterator, NamedTuple, Optional, Tuple

import numpy as np

from tripoly.experiments.exceptions import (
    DatabaseSizeError,
    DegenerateRecordError,
    ExperimentError,
    HullIndexError,
)
from tripoly.geometry.exceptions import DegeneracyError
from tripoly.geometry.point_set import Point, PointSet, convex_hull, require_general_position
from tripoly.nearedge.expression import Leaf

logger = getLogger("Tripoly.OrderTypes")

WIDTHS = (8, 16)


class OrderTypeRecord(NamedTuple):
    """Point set of a database record with its convex hull.

    The hull lists point indices counterclockwise, starting at the lexicographically smallest
    point.

    """

    index: int
    points: PointSet
    hull: Tuple[int, ...]


def default_width(n: int) -> int:
    return 8 if n <= 8 else 16


def database_file_name(n: int, width: Optional[int] = None) -> str:
    width = width or default_width(n)
    return f"otypes{n:02d}.b{width:02d}"


class OrderTypeDatabase:
    """Random access to the records of an order type database file.

    The file is memory mapped, records are parsed when they are accessed.

    Parameters
    ----------
    path : str
        Path of the database file.
    n : int
        Number of points per record.
    width : int
        Bits per coordinate, 8 or 16. Defaults to 8 for n <= 8 and to 16 otherwise.

    Raises
    ------
    ExperimentError
        If the file can't be read, n is smaller than 3 or the width is not supported.
    DatabaseSizeError
        If the file size is not a multiple of the record size.

    """

    def __init__(self, path: str, n: int, width: Optional[int] = None):
        width = width or default_width(n)
        if n < 3:
            raise ExperimentError(f"Records need at least 3 points, not {n}")
        if width not in WIDTHS:
            raise ExperimentError(f"Coordinate width must be 8 or 16 bits, not {width}")
        record_size = n * 2 * width // 8
        try:
            size = os.path.getsize(path)
        except OSError as error:
            raise ExperimentError(f"Can't read database '{path}': {error.strerror}") from error
        if size % record_size:
            raise DatabaseSizeError(path, size, record_size)
        self.path = path
        self.n = n
        self.width = width
        if size:
            dtype = np.dtype(f"<u{width // 8}")
            self._coordinates = np.memmap(path, dtype=dtype, mode="r").reshape(-1, n, 2)
        else:
            self._coordinates = np.zeros((0, n, 2), dtype=np.uint8)
        logger.debug(f"Opened '{path}' with {len(self)} records of {n} points")

    def __len__(self):
        return self._coordinates.shape[0]

    def record(self, index: int) -> OrderTypeRecord:
        """Parse one record.

        Raises
        ------
        ExperimentError
            If the index is out of range.
        DegenerateRecordError
            If the record has three collinear points.

        """
        if not 0 <= index < len(self):
            raise ExperimentError(f"Record {index} is out of range, '{self.path}' has {len(self)}")
        points = [Point.of(int(x), int(y)) for x, y in self._coordinates[index].tolist()]
        try:
            require_general_position(points)
        except DegeneracyError as error:
            raise DegenerateRecordError(index, str(error)) from error
        return OrderTypeRecord(index, PointSet(points), convex_hull(points))

    def records(
        self, start: int = 0, end: Optional[int] = None, strict: bool = False
    ) -> Iterator[OrderTypeRecord]:
        """Records start..end-1 in file order.

        Degenerate records raise if strict is set, otherwise they are skipped with a warning.
        """
        end = len(self) if end is None else min(end, len(self))
        for index in range(start, end):
            try:
                yield self.record(index)
            except DegenerateRecordError as error:
                if strict:
                    raise
                logger.warning(f"Skipping degenerate record: {error}")


def read_order_type_db(
    path: str,
    n: int,
    width: Optional[int] = None,
    record_range: Tuple[int, Optional[int]] = (0, None),
    strict: bool = False,
) -> Iterator[OrderTypeRecord]:
    """Stream the records of a database file, see OrderTypeDatabase."""
    start, end = record_range
    return OrderTypeDatabase(path, n, width).records(start, end, strict)


def near_edge_from_record(record: OrderTypeRecord, apex: int) -> Leaf:
    """Near-edge of the record points seen from the hull vertex with the given hull index.

    The map (m·p / n·p, 1 / n·p) on p - Y, with n the inward normal of the line through the
    hull neighbours of Y and m = n rotated by a quarter turn, keeps every orientation and sends
    Y upwards to infinity.

    Raises
    ------
    HullIndexError
        If apex is not an index into the hull of the record.

    """
    hull = record.hull
    if not 0 <= apex < len(hull):
        raise HullIndexError(record.index, apex, len(hull))
    points = record.points.points
    top = points[hull[apex]]
    following = points[hull[(apex + 1) % len(hull)]]
    previous = points[hull[apex - 1]]
    # left normal of previous -> following points into the hull
    normal = (previous.y - following.y, following.x - previous.x)
    turned = (-normal[1], normal[0])
    mapped = []
    for index, point in enumerate(points):
        if index == hull[apex]:
            continue
        dx, dy = point.x - top.x, point.y - top.y
        depth = Fraction(normal[0] * dx + normal[1] * dy)
        mapped.append(Point((turned[0] * dx + turned[1] * dy) / depth, 1 / depth))
    return Leaf(PointSet(mapped), source=f"record {record.index} apex {apex}")
