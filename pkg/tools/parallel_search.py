"""
Parallel Range Search Module

Runs a CPU-bound worker over contiguous index ranges in a process pool,
driven from asyncio with bounded concurrency.
"""

import asyncio
import functools
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence, Tuple

Range = Tuple[int, int]


def split_range(total: int, parts: int) -> List[Range]:
    """
    Split [0, total) into at most `parts` contiguous, nearly equal ranges.

    Args:
        total: Number of indices
        parts: Desired number of ranges

    Returns:
        List of (start, stop) pairs covering [0, total) in order
    """
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges


async def run_range_async(
    loop: asyncio.AbstractEventLoop,
    executor: ProcessPoolExecutor,
    worker: Callable,
    payload: Any,
    task_range: Range
) -> Any:
    """Run worker(payload, start, stop) in the executor."""
    return await loop.run_in_executor(executor, functools.partial(worker, payload, *task_range))


async def run_ranges(
    worker: Callable,
    payload: Any,
    ranges: Sequence[Range],
    max_workers: int
) -> List[Any]:
    """
    Run a worker over ranges in parallel with concurrency control.

    Args:
        worker: Picklable top-level function (payload, start, stop) -> result
        payload: Shared read-only input passed to every call
        ranges: Index ranges to process
        max_workers: Maximum number of worker processes

    Returns:
        Results in the order of `ranges`
    """
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(max_workers)

    with ProcessPoolExecutor(max_workers=max_workers) as executor:

        async def run_with_semaphore(task_range: Range) -> Any:
            async with semaphore:
                return await run_range_async(loop, executor, worker, payload, task_range)

        tasks = [run_with_semaphore(r) for r in ranges]
        return await asyncio.gather(*tasks)


def map_ranges(
    worker: Callable,
    payload: Any,
    total: int,
    jobs: int,
    chunks_per_job: int = 4
) -> List[Any]:
    """
    Partition [0, total) and evaluate the worker on every part.

    With jobs == 1 (or a single index) everything runs inline in the calling process.
    """
    if jobs <= 1 or total <= 1:
        return [worker(payload, start, stop) for start, stop in split_range(total, 1)]
    ranges = split_range(total, jobs * chunks_per_job)
    return asyncio.run(run_ranges(worker, payload, ranges, jobs))
