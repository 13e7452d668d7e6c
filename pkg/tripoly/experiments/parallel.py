"""This module distributes record ranges of a database over worker processes.

Workers share nothing but the read-only database file. Results are returned in task order, so
merging them does not depend on the number of workers.

"""

from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from tripoly.util.exceptions import TripolyError


class WorkerFailure(NamedTuple):
    error: TripolyError


def chunked(start: int, end: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split start..end-1 into consecutive half-open ranges of at most chunk_size records."""
    return [(first, min(first + chunk_size, end)) for first in range(start, end, chunk_size)]


def _guarded(task: Tuple[Callable, tuple]) -> Any:
    # tripoly errors derive from BaseException and would kill a pool worker
    function, arguments = task
    try:
        return function(*arguments)
    except TripolyError as error:
        return WorkerFailure(error)


def _unwrapped(results: Iterable[Any]) -> Iterator[Any]:
    for result in results:
        if isinstance(result, WorkerFailure):
            raise result.error
        yield result


def map_tasks(function: Callable, tasks: Sequence[tuple], workers: int = 1) -> Iterator[Any]:
    """Apply a module level function to every argument tuple, in worker processes if workers > 1.

    Raises
    ------
    TripolyError
        The first error raised by a task, in task order.

    """
    guarded = [(function, arguments) for arguments in tasks]
    if workers <= 1 or len(guarded) <= 1:
        yield from _unwrapped(map(_guarded, guarded))
        return
    with Pool(min(workers, len(guarded))) as pool:
        yield from _unwrapped(pool.imap(_guarded, guarded))
