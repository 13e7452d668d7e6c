import os
from itertools import product
from random import Random

import numpy as np

from tripoly.algebra.polynomial import BasisTag, TaggedPoly
from tripoly.experiments.order_type_db import database_file_name
from tripoly.geometry.exceptions import DegeneracyError
from tripoly.geometry.point_set import Point, require_general_position
from tripoly.geometry.realization import realize
from tripoly.nearedge.expression import E, Flip, Vee, Wedge
from tripoly.util.configuration import DB_DIRECTORY_VARIABLE

EXHAUSTIVE_SEGMENTS = 4
MAX_SEGMENTS = 9
SAMPLES_PER_SIZE = 10


def _trees_by_size(max_segments):
    trees = {1: [E]}
    for size in range(2, max_segments + 1):
        unflipped = []
        for left_size in range(1, size):
            for left, right in product(trees[left_size], trees[size - left_size]):
                unflipped.append(Vee(left, right))
                unflipped.append(Wedge(left, right))
        trees[size] = unflipped + [Flip(tree) for tree in unflipped]
    return trees


def expression_corpus(seed=0):
    """Every tree over E, vee, wedge and flip with at most four segments, plus samples up to nine.

    Flips are only applied to sums and never twice in a row.
    """
    trees = _trees_by_size(EXHAUSTIVE_SEGMENTS)
    corpus = [tree for size in sorted(trees) for tree in trees[size]]
    generator = Random(seed)
    sampled = dict(trees)
    for size in range(EXHAUSTIVE_SEGMENTS + 1, MAX_SEGMENTS + 1):
        sampled[size] = []
        for _ in range(SAMPLES_PER_SIZE):
            left_size = generator.randint(1, size - 1)
            left = generator.choice(sampled[left_size])
            right = generator.choice(sampled[size - left_size])
            tree = generator.choice((Vee, Wedge))(left, right)
            sampled[size].append(Flip(tree) if generator.random() < 0.5 else tree)
        corpus.extend(sampled[size])
    return corpus


def realized(expression):
    return realize(expression).points


def random_t(generator, degree):
    """Random polynomial in y with coefficients in -9..9 and the given degree."""
    coefficients = generator.integers(-9, 10, size=degree + 1).tolist()
    coefficients[-1] = int(generator.integers(1, 10))
    return TaggedPoly(BasisTag.Y, coefficients)


def random_records(generator, count, n, bound=256):
    """Point sets in general position with coordinates below bound."""
    records = []
    while len(records) < count:
        coordinates = generator.integers(0, bound, size=(n, 2)).tolist()
        try:
            require_general_position([Point.of(x, y) for x, y in coordinates])
        except DegeneracyError:
            continue
        if len({tuple(point) for point in coordinates}) == n:
            records.append(coordinates)
    return records


def write_database(path, records, width=8):
    np.asarray(records, dtype=np.dtype(f"<u{width // 8}")).tofile(str(path))
    return str(path)


def real_database(n=10):
    """Path of the external order type database file, None if it is not available."""
    directory = os.environ.get(DB_DIRECTORY_VARIABLE)
    if not directory:
        return None
    path = os.path.join(directory, database_file_name(n))
    return path if os.path.isfile(path) else None
