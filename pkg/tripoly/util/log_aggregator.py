"""This module implements a logging filter that aggregates repetitive log messages.

A message that is logged more than count_threshold times within log_period seconds is held back.
The held back messages are emitted periodically as one message with the suffix
"(<count> in ~<period>)".

"""

import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass
from logging import LogRecord
from time import sleep, time
from typing import Dict, Optional


@dataclass
class AggregatedLog:
    """Counters of one message, identified by level, logger name and text."""

    first_record: LogRecord
    last_record: Optional[LogRecord] = None
    count: int = 1
    count_passed: int = 0
    aggregate: bool = False


def format_period(seconds: float) -> str:
    if seconds < 60:
        return f"{seconds} sec"
    return f"{seconds / 60.0:.1f} min"


class Aggregator:
    """Used to aggregate log messages."""

    logs: Dict[str, AggregatedLog] = OrderedDict()
    count_threshold = 4
    log_period = 10.0
    timer_thread: Optional[threading.Thread] = None
    _lock = threading.Lock()

    @classmethod
    def setup(cls, count: int, period: float):
        """Setup aggregating logger.

        Parameters
        ----------
        count : int
            Count of log messages for which aggregation should begin.
        period : float
            Period for which log messages are being counted for aggregation.

        """
        cls.count_threshold = count
        cls.log_period = period

    @classmethod
    def start_timer(cls):
        """Start the daemon thread that emits aggregated messages every period."""
        if cls.timer_thread is not None and cls.timer_thread.is_alive():
            return
        cls.timer_thread = threading.Thread(target=cls._log_aggregated, daemon=True)
        cls.timer_thread.start()

    @staticmethod
    def _log_id(record: LogRecord) -> str:
        return f"{record.levelname}:{record.name}:{record.msg}"

    @classmethod
    def _aggregate(cls, record: LogRecord) -> bool:
        log_id = cls._log_id(record)
        with cls._lock:
            log = cls.logs.get(log_id)
            if log is None:
                log = cls.logs[log_id] = AggregatedLog(first_record=record)
            else:
                previous = log.last_record or log.first_record
                within_period = record.created - previous.created < cls.log_period
                log.count += 1
                log.last_record = record
                if within_period and (log.count > cls.count_threshold or log.aggregate):
                    return False
            log.aggregate = False
            log.first_record = record
            log.count_passed += 1
            return True

    @classmethod
    def _log_aggregated(cls):
        while True:
            sleep(cls.log_period)
            cls._perform_logging_if_possible()

    @classmethod
    def _perform_logging_if_possible(cls):
        with cls._lock:
            pending = []
            for log in cls.logs.values():
                held_back = log.count - log.count_passed
                if held_back > 1 and log.last_record is not None:
                    elapsed = min(round(time() - log.first_record.created, 1), cls.log_period)
                    record = log.last_record
                    record.msg = f"{record.msg} ({held_back} in ~{format_period(elapsed)})"
                    pending.append(record)
                    log.first_record = record
                    log.last_record = None
                    log.count = 0
                    log.count_passed = 0
                    log.aggregate = True
                elif time() - log.first_record.created >= cls.log_period:
                    log.aggregate = False
        for record in pending:
            logging.getLogger(record.name).log(record.levelno, record.msg)

    @staticmethod
    def filter(record: LogRecord) -> bool:
        """Let a record pass unless it is aggregated."""
        return Aggregator._aggregate(record)

    @staticmethod
    def exit():
        """Emit pending aggregated messages before exiting the program."""
        Aggregator._perform_logging_if_possible()
