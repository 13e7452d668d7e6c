"""This module writes and reads the structured output of tripoly with ujson.

Exact values are kept exact: rationals become "p/q" strings and polynomials their text form, so
that the output can be parsed back without loss.

"""

from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List

import ujson

from tripoly.algebra.laurent import LaurentSeries
from tripoly.algebra.polynomial import JointPoly, TaggedPoly
from tripoly.util.helper import format_rational

MAX_JSON_INT = 2**63 - 1


def to_jsonable(value: Any) -> Any:
    """Convert nested results into values ujson can dump."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) <= MAX_JSON_INT else str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Decimal):
        return str(value)
    if isinstance(value, (TaggedPoly, JointPoly, LaurentSeries)):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if hasattr(value, "_asdict"):
        return to_jsonable(value._asdict())
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value


def dumps(value: Any) -> str:
    return ujson.dumps(to_jsonable(value), ensure_ascii=False)


def dump_jsonl(jsonl_path: str, records: Iterable[Any], append: bool = False):
    """Write one JSON object per line."""
    with open(jsonl_path, "a" if append else "w", encoding="utf8") as jsonl_file:
        for record in records:
            jsonl_file.write(dumps(record) + "\n")


def parse_jsonl(jsonl_path: str) -> List[Any]:
    """
    Read and parse all json objects from a given jsonl file.

    Parameters
    ----------
    jsonl_path: str
        Path to the jsonl file.

    Returns
    -------
    list
        One parsed object per non-empty line.
    """
    parsed = []
    with open(jsonl_path, "r", encoding="utf8") as jsonl_file:
        for json_string in jsonl_file:
            if json_string.strip():
                parsed.append(ujson.loads(json_string))
    return parsed
