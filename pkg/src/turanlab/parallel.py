"""Process fan-out for independent search tasks.

Callers pass a picklable top-level function and a list of inputs; results
come back in input order so downstream merging never depends on scheduling.
"""

from __future__ import annotations

import asyncio
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from turanlab.observability._logging import get_logger


log = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


async def _gather_in_pool(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = await asyncio.gather(
            *(loop.run_in_executor(pool, fn, item) for item in items),
            return_exceptions=True,
        )

    collected: list[R] = []
    for index, result in enumerate(results):
        if isinstance(result, BaseException):
            log.warning("fan_out_task_failed", index=index, error=str(result))
            raise result
        collected.append(result)
    return collected


def fan_out(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """Apply ``fn`` to every item, concurrently when ``workers > 1``.

    The first task failure is re-raised after all tasks settle.
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    log.debug("fan_out_started", tasks=len(items), workers=workers)
    return asyncio.run(_gather_in_pool(fn, items, min(workers, len(items))))


__all__ = ["fan_out"]
