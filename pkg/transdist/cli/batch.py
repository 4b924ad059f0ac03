import asyncio
from collections.abc import Callable, Iterable
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


async def run_batch(func: Callable[[T], R], items: Iterable[T], workers: int = 4) -> list[R]:
    """
    Applies `func` to every item in worker threads, at most `workers` at a time.

    Parameters:
        func: Blocking function applied to each item.
        items: Inputs, typically the lines of a permutation file.
        workers: Maximum number of concurrent calls.

    Returns:
        list[R]: Results in input order.

    Raises:
        Exception: The first exception raised by `func`, after the remaining calls have been cancelled or finished.
    """

    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    semaphore = asyncio.Semaphore(workers)

    async def run(item: T) -> R:
        async with semaphore:
            return await asyncio.to_thread(func, item)

    return list(await asyncio.gather(*(run(item) for item in items)))


def run_batch_sync(func: Callable[[T], R], items: Iterable[T], workers: int = 4) -> list[R]:
    return asyncio.run(run_batch(func, items, workers))
