import concurrent.futures
import logging
import timeit
from functools import wraps
from typing import Any, Callable, Iterable, TypeVar

import orjson

log = logging.getLogger("newtondual")

T = TypeVar("T")
R = TypeVar("R")


def elapsedtime(func) -> Callable:
    """
    Provides the elapsed time for a method call. Used only for the 'main' method
    to report the total time of a command.
    :param func:
    :return:
    """

    @wraps(func)
    def timed_f(*args, **kwargs) -> Callable:
        fname = func.__name__
        log.debug(" --- Timing execution for %s ---", fname)
        start = timeit.default_timer()
        ret = func(*args, **kwargs)
        end = timeit.default_timer()
        elapsed: float = end - start

        hours, remainder = divmod(elapsed, 60 * 60)
        minutes, seconds = divmod(remainder, 60)

        log.info("Total time for %s: %02i:%02i:%02.2f", fname, hours, minutes, seconds)
        return ret

    return timed_f


def parallelise(records: Iterable[T], func: Callable[..., R], *args, workers: int = 1, **kwargs) -> list[R]:
    """
    Given a list of records, runs `func` over each of them and returns the results in
    the order of the records, whatever order the workers finish in.

    :param records: The records to be processed by `func`. Each is passed as the first argument
    :param func: A module-level function, so that it can be sent to a worker process
    :param workers: Number of worker processes; one or fewer runs everything in this process
    :return: A list of results, aligned with `records`
    """
    items: list[T] = list(records)

    if workers <= 1 or len(items) <= 1:
        return [func(record, *args, **kwargs) for record in items]

    results: dict[int, Any] = {}
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        futures_list = {executor.submit(func, record, *args, **kwargs): idx for idx, record in enumerate(items)}

        for f in concurrent.futures.as_completed(futures_list):
            results[futures_list[f]] = f.result()

    return [results[idx] for idx in range(len(items))]


def dump_document(document: Any, indent: bool = False) -> str:
    option: int = orjson.OPT_SORT_KEYS
    if indent:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(document, option=option).decode("utf-8")
