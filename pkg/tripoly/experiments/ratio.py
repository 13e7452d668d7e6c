"""This module bounds the ratios between coefficients of fixed-floor polynomials.

For a near-edge A and one of its floors L, t^L_A(y) sums y^|U| over the triangulations with floor
L and roof U. Its lowest exponent k is the number of upper hull segments of A. For every k and
k <= i <= j the experiment collects the minimum and the maximum of [y^i]t^L_A / [y^j]t^L_A over
all near-edges of a database and all of their floors.

The result per k is a square matrix: row i-k and column j-k hold the minimum, the mirrored
position holds the maximum. Positions that never occurred hold None.

"""

from fractions import Fraction
from logging import DEBUG, getLogger
from typing import Dict, List, Optional, Sequence, Tuple

from tripoly.experiments.order_type_db import OrderTypeDatabase, near_edge_from_record
from tripoly.experiments.parallel import chunked, map_tasks
from tripoly.geometry.point_set import Point
from tripoly.oracle.brute_force import fixed_floor_poly, floors
from tripoly.oracle.region_counter import MAX_POINTS

logger = getLogger("Tripoly.Ratio")

CHUNK_SIZE = 256

Bounds = Dict[Tuple[int, int, int], Tuple[Fraction, Fraction]]
RatioMatrix = List[List[Optional[Fraction]]]


def merge_bounds(target: Bounds, source: Bounds) -> Bounds:
    """Widen target by the bounds of source, in place."""
    for key, (low, high) in source.items():
        if key in target:
            current_low, current_high = target[key]
            target[key] = (min(low, current_low), max(high, current_high))
        else:
            target[key] = (low, high)
    return target


def near_edge_bounds(points: Sequence[Point], max_points: int = MAX_POINTS) -> Bounds:
    """Ratio bounds of a single near-edge over all of its floors."""
    ordered = sorted(points)
    segments = len(ordered) - 1
    bounds: Bounds = {}
    for floor in floors(ordered):
        poly = fixed_floor_poly(ordered, floor, max_points)
        lowest = poly.lowest_degree
        if lowest is None:
            continue
        ratios: Bounds = {}
        for j in range(lowest, segments + 1):
            denominator = poly.coeff(j)
            if not denominator:
                continue
            for i in range(lowest, j + 1):
                ratio = poly.coeff(i) / denominator
                ratios[(lowest, i, j)] = (ratio, ratio)
        merge_bounds(bounds, ratios)
    return bounds


def _ratio_range(
    path: str, n: int, width: Optional[int], start: int, end: int, strict: bool, max_points: int
) -> Bounds:
    database = OrderTypeDatabase(path, n, width)
    bounds: Bounds = {}
    for record in database.records(start, end, strict):
        for apex in range(len(record.hull)):
            near_edge = near_edge_from_record(record, apex)
            merge_bounds(bounds, near_edge_bounds(near_edge.points.points, max_points))
    return bounds


def ratio_matrices(bounds: Bounds, segments: int) -> Dict[int, RatioMatrix]:
    """Arrange bounds into one matrix per upper hull segment count k."""
    matrices: Dict[int, RatioMatrix] = {}
    for k in sorted({key[0] for key in bounds}):
        size = segments - k + 1
        matrix: RatioMatrix = [[None] * size for _ in range(size)]
        for (hull, i, j), (low, high) in bounds.items():
            if hull != k:
                continue
            matrix[i - k][j - k] = low
            if i != j:
                matrix[j - k][i - k] = high
        matrices[k] = matrix
    return matrices


def ratio_experiment(
    path: str,
    n: int,
    record_range: Tuple[int, Optional[int]] = (0, None),
    workers: int = 1,
    width: Optional[int] = None,
    chunk_size: int = CHUNK_SIZE,
    strict: bool = False,
    max_points: int = MAX_POINTS,
) -> Dict[int, RatioMatrix]:
    """Coefficient ratio matrices over all near-edges of a database and all of their floors.

    Records of n points give near-edges of n - 1 points, every floor of every near-edge is used.

    Raises
    ------
    DatabaseSizeError
        If the database file is truncated.
    DegenerateRecordError
        If strict is set and a record is degenerate.

    """
    database = OrderTypeDatabase(path, n, width)
    start, end = record_range
    end = len(database) if end is None else min(end, len(database))
    start = min(start, end)
    ranges = chunked(start, end, chunk_size)
    tasks = [(path, n, database.width, first, last, strict, max_points) for first, last in ranges]
    logger.info(f"Collecting coefficient ratios of {end - start} records in {len(tasks)} chunks")
    bounds: Bounds = {}
    for (first, last), chunk_bounds in zip(ranges, map_tasks(_ratio_range, tasks, workers)):
        merge_bounds(bounds, chunk_bounds)
        if logger.isEnabledFor(DEBUG):
            logger.debug(f"Collected ratios of records {first}..{last}")
    return ratio_matrices(bounds, n - 2)
