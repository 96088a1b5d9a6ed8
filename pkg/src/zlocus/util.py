"""Small shared helpers: batch parallelism and number formatting."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "ZLOCUS_THREADS"


def batch_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Map preserving order; ZLOCUS_THREADS > 1 enables a thread pool."""
    try:
        workers = int(os.environ.get(THREADS_ENV, "1"))
    except ValueError:
        workers = 1
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def fmt17(x: float) -> str:
    """17 significant digits: round-trips exactly through a double."""
    return format(float(x), ".17g")


def coeffs_close(xs: Iterable, ys: Iterable, rtol: float, floor: float = 1e-14) -> bool:
    """Coefficient-wise closeness, relative to the pairwise magnitude scale."""
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        return False
    for x, y in zip(xs, ys):
        x, y = complex(x), complex(y)
        if abs(x - y) > rtol * max(abs(x), abs(y)) + floor:
            return False
    return True
