"""Order-preserving task map over a process pool."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_GUARD = 10**7


def default_workers() -> int:
    return os.cpu_count() or 1


def run_tasks(fn: Callable[[T], R], tasks: Iterable[T], workers: int = 1) -> list[R]:
    """Apply ``fn`` to every task; results come back in task order.

    ``fn`` must be a module-level function so it pickles.
    """
    tasks = list(tasks)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(fn, tasks))
