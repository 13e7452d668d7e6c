"""This module scans an order type database for near-edges whose twin chains grow fastest.

For every record and every convex hull vertex Y of the record, the near-edge A seen from Y is
built, the generalized Koch near-edge K_s(A) is formed and its growth rate is computed. The
evaluations are ranked by rate, descending, ties broken by record and apex index.

Long scans can be split into record ranges and resumed from a checkpoint directory. The directory
holds a cursor file with the next record index to evaluate and a JSON lines file with one object
per evaluated (record, apex).

"""

import os
from decimal import Decimal
from fractions import Fraction
from logging import DEBUG, getLogger
from typing import Iterable, List, NamedTuple, Optional, Tuple

from tripoly.experiments.exceptions import CheckpointError
from tripoly.experiments.growth import growth_rate, round_rate
from tripoly.experiments.order_type_db import (
    OrderTypeDatabase,
    OrderTypeRecord,
    near_edge_from_record,
)
from tripoly.experiments.parallel import chunked, map_tasks
from tripoly.nearedge.expression import Koch
from tripoly.oracle.region_counter import MAX_POINTS
from tripoly.util.json_handling import dump_jsonl, parse_jsonl

logger = getLogger("Tripoly.Scan")

CHUNK_SIZE = 256


class ScanEntry(NamedTuple):
    """Growth rate of K_s(A) for the near-edge A of one record and apex."""

    rate: Decimal
    record: int
    apex: int
    base_value: Fraction
    segments: int
    conjectural: bool

    def line(self) -> str:
        return f"({round_rate(self.rate)}, {self.record}, {self.apex})"

    @classmethod
    def from_json(cls, document: dict) -> "ScanEntry":
        return cls(
            rate=Decimal(document["rate"]),
            record=int(document["record"]),
            apex=int(document["apex"]),
            base_value=Fraction(document["base_value"]),
            segments=int(document["segments"]),
            conjectural=bool(document["conjectural"]),
        )


def evaluate_record(
    record: OrderTypeRecord, koch_stage: int, max_points: int = MAX_POINTS
) -> List[ScanEntry]:
    """Growth rates of K_s(A) for every hull vertex of the record."""
    entries = []
    for apex in range(len(record.hull)):
        near_edge = near_edge_from_record(record, apex)
        report = growth_rate(Koch(near_edge, koch_stage), max_points)
        entries.append(
            ScanEntry(
                rate=report.rate,
                record=record.index,
                apex=apex,
                base_value=report.base_value,
                segments=report.segments,
                conjectural=report.conjectural,
            )
        )
    return entries


def _scan_range(
    path: str,
    n: int,
    width: Optional[int],
    start: int,
    end: int,
    koch_stage: int,
    strict: bool,
    max_points: int,
) -> List[ScanEntry]:
    database = OrderTypeDatabase(path, n, width)
    entries = []
    for record in database.records(start, end, strict):
        entries.extend(evaluate_record(record, koch_stage, max_points))
    return entries


def rank(entries: Iterable[ScanEntry], top: Optional[int] = None) -> List[ScanEntry]:
    """Entries by descending rate, then ascending record and apex index."""
    ranked = sorted(
        entries, key=lambda entry: (entry.rate, -entry.record, -entry.apex), reverse=True
    )
    return ranked if top is None else ranked[:top]


class ScanCheckpoint:
    """Cursor and partial results of an interrupted scan."""

    CURSOR_FILE = "cursor"
    RESULTS_FILE = "results.jsonl"

    def __init__(self, directory: str):
        os.makedirs(directory, exist_ok=True)
        self.cursor_path = os.path.join(directory, self.CURSOR_FILE)
        self.results_path = os.path.join(directory, self.RESULTS_FILE)

    def load(self, start: int, end: int) -> Tuple[int, List[ScanEntry]]:
        """Next record index and the entries evaluated so far.

        Raises
        ------
        CheckpointError
            If the cursor is unreadable, lies outside start..end or the results lack a cursor.

        """
        if not os.path.exists(self.cursor_path):
            if os.path.exists(self.results_path):
                raise CheckpointError(f"'{self.results_path}' exists without a cursor file")
            return start, []
        with open(self.cursor_path, "r", encoding="utf8") as cursor_file:
            text = cursor_file.read().strip()
        if not text.isdigit():
            raise CheckpointError(f"Cursor '{text}' in '{self.cursor_path}' is not an index")
        cursor = int(text)
        if not start <= cursor <= end:
            raise CheckpointError(f"Cursor {cursor} lies outside of the range {start}..{end}")
        entries = []
        if os.path.exists(self.results_path):
            try:
                entries = [ScanEntry.from_json(line) for line in parse_jsonl(self.results_path)]
            except (KeyError, TypeError, ValueError, ArithmeticError) as error:
                raise CheckpointError(f"Unreadable results in '{self.results_path}'") from error
        logger.info(f"Resuming scan at record {cursor} with {len(entries)} evaluations")
        return cursor, entries

    def save(self, entries: List[ScanEntry], cursor: int):
        """Append entries, then move the cursor."""
        dump_jsonl(self.results_path, entries, append=True)
        with open(self.cursor_path, "w", encoding="utf8") as cursor_file:
            cursor_file.write(f"{cursor}\n")


def scan_pipeline(
    path: str,
    n: int,
    koch_stage: int,
    top: Optional[int] = None,
    record_range: Tuple[int, Optional[int]] = (0, None),
    workers: int = 1,
    width: Optional[int] = None,
    checkpoint_directory: Optional[str] = None,
    chunk_size: int = CHUNK_SIZE,
    strict: bool = False,
    max_points: int = MAX_POINTS,
) -> List[ScanEntry]:
    """Rank the near-edges of a database by the growth rate of their twin chains.

    Parameters
    ----------
    path : str
        Order type database file.
    n : int
        Points per record.
    koch_stage : int
        Stage s of the Koch near-edge K_s(A) that is evaluated.
    top : int
        Number of entries returned, all if None.
    record_range : tuple
        Half-open record range, the end may be None for the rest of the file.
    workers : int
        Worker processes.
    width : int
        Bits per coordinate, derived from n by default.
    checkpoint_directory : str
        Directory to resume from and to write progress to.
    chunk_size : int
        Records per task and per checkpoint step.
    strict : bool
        Fail on degenerate records instead of skipping them.
    max_points : int
        Largest near-edge that is enumerated.

    Raises
    ------
    DatabaseSizeError
        If the database file is truncated.
    DegenerateRecordError
        If strict is set and a record is degenerate.
    CheckpointError
        If the checkpoint does not fit the scan.

    """
    database = OrderTypeDatabase(path, n, width)
    start, end = record_range
    end = len(database) if end is None else min(end, len(database))
    start = min(start, end)
    cursor, entries = start, []
    checkpoint = ScanCheckpoint(checkpoint_directory) if checkpoint_directory else None
    if checkpoint is not None:
        cursor, entries = checkpoint.load(start, end)
    ranges = chunked(cursor, end, chunk_size)
    tasks = [
        (path, n, database.width, first, last, koch_stage, strict, max_points)
        for first, last in ranges
    ]
    logger.info(f"Scanning records {cursor}..{end} of '{path}' in {len(tasks)} chunks")
    for (first, last), chunk_entries in zip(ranges, map_tasks(_scan_range, tasks, workers)):
        entries.extend(chunk_entries)
        if checkpoint is not None:
            checkpoint.save(chunk_entries, last)
        if logger.isEnabledFor(DEBUG):
            logger.debug(f"Scanned records {first}..{last}: {len(chunk_entries)} evaluations")
    return rank(entries, top)
