# pylint: disable=missing-docstring
# pylint: disable=protected-access
from logging import makeLogRecord
from time import sleep
from unittest import mock

import pytest

from tripoly.util.log_aggregator import Aggregator, format_period


@pytest.fixture(autouse=True)
def clear_aggregator():
    yield
    Aggregator.logs.clear()
    Aggregator.setup(4, 10.0)


def add_log_n_times(count, message="Test log", **fields):
    return [Aggregator._aggregate(makeLogRecord({"msg": message, **fields})) for _ in range(count)]


class TestAggregator:
    def test_initialized(self):
        Aggregator.setup(5, 6)
        assert Aggregator.count_threshold == 5
        assert Aggregator.log_period == 6
        assert len(Aggregator.logs) == 0

    def test_one_log_without_aggregation(self):
        assert Aggregator._aggregate(makeLogRecord({"msg": "Test log"}))
        assert len(Aggregator.logs) == 1

    def test_different_messages_are_counted_separately(self):
        Aggregator.setup(3, 10.0)
        for _ in range(3):
            assert Aggregator._aggregate(makeLogRecord({"msg": "Test log 1"}))
            assert Aggregator._aggregate(makeLogRecord({"msg": "Test log 2"}))
        assert len(Aggregator.logs) == 2

    def test_same_message_of_other_logger_is_counted_separately(self):
        Aggregator.setup(1, 10.0)
        assert add_log_n_times(2, name="Tripoly.Scan") == [True, False]
        assert add_log_n_times(2, name="Tripoly.Ratio") == [True, False]

    def test_messages_above_threshold_are_held_back(self):
        Aggregator.setup(3, 10.0)
        should_print = add_log_n_times(10)
        assert should_print == [True] * 3 + [False] * 7

        log = next(iter(Aggregator.logs.values()))
        assert log.count == 10
        assert log.count_passed == 3
        assert log.last_record.msg == "Test log"

    @mock.patch("logging.getLogger")
    def test_held_back_messages_are_emitted_as_one(self, logging_get_logger):
        Aggregator.setup(3, 0.25)
        add_log_n_times(10)

        Aggregator._perform_logging_if_possible()

        log = next(iter(Aggregator.logs.values()))
        assert log.count == 0
        assert log.count_passed == 0
        assert log.first_record.msg == "Test log (7 in ~0.0 sec)"
        assert log.last_record is None
        assert log.aggregate is True
        logging_get_logger.return_value.log.assert_called_once()

        sleep(0.3)
        Aggregator._perform_logging_if_possible()
        assert log.aggregate is False

    @mock.patch("logging.getLogger")
    def test_keeps_aggregating_on_consecutive_periods(self, _):
        Aggregator.setup(3, 10.0)
        add_log_n_times(10)
        Aggregator._perform_logging_if_possible()

        assert add_log_n_times(5) == [False] * 5
        Aggregator._perform_logging_if_possible()

        log = next(iter(Aggregator.logs.values()))
        assert log.first_record.msg.startswith("Test log")
        assert log.first_record.msg.endswith("(5 in ~0.0 sec)")

    def test_messages_pass_again_after_a_quiet_period(self):
        Aggregator.setup(2, 10.0)
        passed = [
            Aggregator._aggregate(makeLogRecord({"msg": "Test log", "created": created}))
            for created in (0.0, 1.0, 2.0, 3.0, 100.0)
        ]
        assert passed == [True, True, False, False, True]

    def test_single_held_back_message_is_not_summarized(self):
        Aggregator.setup(1, 10.0)
        add_log_n_times(2)
        Aggregator._perform_logging_if_possible()
        log = next(iter(Aggregator.logs.values()))
        assert log.first_record.msg == "Test log"

    def test_filter_uses_aggregation(self):
        Aggregator.setup(1, 10.0)
        assert Aggregator.filter(makeLogRecord({"msg": "Test log"}))
        assert not Aggregator.filter(makeLogRecord({"msg": "Test log"}))


class TestFormatPeriod:
    @pytest.mark.parametrize(
        "seconds, expected", [(0.0, "0.0 sec"), (12.5, "12.5 sec"), (90, "1.5 min")]
    )
    def test_format_period(self, seconds, expected):
        assert format_period(seconds) == expected
