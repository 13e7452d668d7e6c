"""This module is used to measure the execution time of operations."""

from collections import defaultdict
from time import perf_counter_ns
from typing import Dict, List


class TimeMeasurement:
    """Measures the execution time of functions via a decorator and collects the results."""

    TIME_MEASUREMENT_ENABLED = False
    TIMES: Dict[str, List[int]] = defaultdict(list)

    @staticmethod
    def measure_time(name: str):
        """Decorate function to measure its execution time in nanoseconds.

        Parameters
        ----------
        name : str
            Name the processing times are collected under.

        """

        def inner_decorator(func):
            def inner(*args, **kwargs):
                if TimeMeasurement.TIME_MEASUREMENT_ENABLED:
                    begin = perf_counter_ns()
                    result = func(*args, **kwargs)
                    TimeMeasurement.TIMES[name].append(perf_counter_ns() - begin)
                    return result
                return func(*args, **kwargs)

            inner.__name__ = func.__name__
            inner.__doc__ = func.__doc__
            return inner

        return inner_decorator

    @staticmethod
    def reset():
        TimeMeasurement.TIMES.clear()

    @staticmethod
    def mean_nanoseconds() -> Dict[str, float]:
        """Mean processing time per measured name."""
        return {
            name: sum(times) / len(times) for name, times in TimeMeasurement.TIMES.items() if times
        }
