# pylint: disable=missing-docstring
from functools import cmp_to_key
from itertools import combinations

import pytest
from pytest import raises

from tests.testdata.metadata import path_to_collinear_db, path_to_triangle_db
from tests.unit.experiments.database import PENTAGONS, SQUARE, write_database
from tripoly.experiments.exceptions import (
    DatabaseSizeError,
    DegenerateRecordError,
    ExperimentError,
    HullIndexError,
)
from tripoly.experiments.order_type_db import (
    OrderTypeDatabase,
    database_file_name,
    default_width,
    near_edge_from_record,
    read_order_type_db,
)
from tripoly.geometry.point_set import Point, orient
from tripoly.nearedge.joint_polynomial import joint_poly
from tripoly.oracle.brute_force import brute_joint_poly


def counterclockwise_around(points, top):
    return cmp_to_key(lambda first, second: -orient(points[top], points[first], points[second]))


class TestOrderTypeDatabase:
    def test_triangle_fixture(self):
        records = list(read_order_type_db(path_to_triangle_db, 3))
        assert len(records) == 1
        record = records[0]
        assert record.index == 0
        assert list(record.points) == [Point.of(0, 0), Point.of(4, 0), Point.of(2, 3)]
        assert record.hull == (0, 1, 2)

    def test_collinear_fixture_is_reported(self):
        with raises(DegenerateRecordError, match="Record 0 is degenerate") as error:
            list(read_order_type_db(path_to_collinear_db, 3, strict=True))
        assert error.value.record_index == 0

    def test_collinear_fixture_is_skipped(self):
        assert not list(read_order_type_db(path_to_collinear_db, 3))

    def test_sixteen_bit_coordinates(self, tmp_path):
        path = write_database(tmp_path / "otypes03.b16", [[(0, 0), (1000, 1), (300, 700)]], 16)
        record = OrderTypeDatabase(path, 3, 16).record(0)
        assert list(record.points) == [Point.of(0, 0), Point.of(1000, 1), Point.of(300, 700)]

    def test_records_in_file_order(self, tmp_path):
        path = write_database(tmp_path / "otypes05.b08", PENTAGONS)
        database = OrderTypeDatabase(path, 5)
        assert len(database) == 3
        assert [record.index for record in database.records()] == [0, 1, 2]
        assert [record.index for record in database.records(1, 2)] == [1]
        assert [record.index for record in database.records(2, 10)] == [2]

    def test_hull_is_counterclockwise_from_smallest_point(self, tmp_path):
        path = write_database(tmp_path / "otypes05.b08", PENTAGONS)
        record = OrderTypeDatabase(path, 5).record(0)
        assert record.hull == (0, 1, 2, 3)

    def test_size_mismatch(self, tmp_path):
        path = tmp_path / "broken.b08"
        path.write_bytes(bytes(5))
        with raises(DatabaseSizeError, match="not divisible by the record size 6"):
            OrderTypeDatabase(str(path), 3)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.b08"
        path.write_bytes(b"")
        assert len(OrderTypeDatabase(str(path), 3)) == 0

    def test_record_out_of_range(self):
        with raises(ExperimentError, match="Record 1 is out of range"):
            OrderTypeDatabase(path_to_triangle_db, 3).record(1)

    def test_unsupported_width(self):
        with raises(ExperimentError, match="8 or 16 bits"):
            OrderTypeDatabase(path_to_triangle_db, 3, 32)

    @pytest.mark.parametrize("n, width, name", [(3, 8, "otypes03.b08"), (10, 16, "otypes10.b16")])
    def test_file_names(self, n, width, name):
        assert default_width(n) == width
        assert database_file_name(n) == name


class TestNearEdgeFromRecord:
    def setup_class(self):
        self.triangle = OrderTypeDatabase(path_to_triangle_db, 3).record(0)

    @pytest.mark.parametrize("apex", [0, 1, 2])
    def test_triangle_gives_segment(self, apex):
        near_edge = near_edge_from_record(self.triangle, apex)
        assert near_edge.segments == 1

    def test_apex_out_of_hull(self):
        with raises(HullIndexError, match="Apex 3 of record 0"):
            near_edge_from_record(self.triangle, 3)

    def test_square(self, tmp_path):
        record = OrderTypeDatabase(write_database(tmp_path / "sq.b08", [SQUARE]), 4).record(0)
        near_edge = near_edge_from_record(record, 0)
        assert near_edge.segments == 2
        assert joint_poly(near_edge) == brute_joint_poly(near_edge.points.points)

    @pytest.mark.parametrize("points", PENTAGONS)
    def test_order_type_is_kept_and_apex_is_above(self, tmp_path, points):
        record = OrderTypeDatabase(write_database(tmp_path / "p.b08", [points]), 5).record(0)
        for apex, top in enumerate(record.hull):
            others = [index for index in range(5) if index != top]
            mapped = near_edge_from_record(record, apex).points.points
            around = sorted(others, key=counterclockwise_around(record.points, top))
            image = dict(zip(around, mapped))
            for i, j, k in combinations(others, 3):
                original = orient(record.points[i], record.points[j], record.points[k])
                assert orient(image[i], image[j], image[k]) == original
            ordered = sorted(others, key=lambda index: image[index].x)
            for left, right in zip(ordered, ordered[1:]):
                assert orient(record.points[left], record.points[right], record.points[top]) == 1

    def test_horizontal_reflection_keeps_joint_polynomial(self, tmp_path):
        points = PENTAGONS[0]
        mirrored = [(6 - x, y) for x, y in points]
        path = write_database(tmp_path / "otypes05.b08", [points, mirrored])
        database = OrderTypeDatabase(path, 5)
        record, reflected = database.record(0), database.record(1)
        for apex, top in enumerate(record.hull):
            reflected_apex = reflected.hull.index(top)
            first = near_edge_from_record(record, apex)
            second = near_edge_from_record(reflected, reflected_apex)
            assert brute_joint_poly(first.points.points) == brute_joint_poly(second.points.points)

