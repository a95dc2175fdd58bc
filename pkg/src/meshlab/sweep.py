"""Exhaustive sweeps over S_n split into disjoint lexicographic rank ranges.

A worker is a module-level function ``worker(n, start, stop, *args)`` that
returns a partial result for ranks ``[start, stop)``; callers merge the
partials in range order, so the result never depends on ``jobs``.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .perm import _check_cap

__all__ = ["default_jobs", "rank_ranges", "run_sweep"]


def default_jobs() -> int:
    return os.cpu_count() or 1


def rank_ranges(n: int, parts: int) -> list[tuple[int, int]]:
    total = math.factorial(n)
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def run_sweep(worker: Callable, n: int, args: tuple = (), jobs: int = 1, cap: int | None = None) -> list:
    """Partial results of ``worker`` over each rank range, in rank order."""
    _check_cap(n, cap)
    ranges = rank_ranges(n, jobs)
    if jobs <= 1 or len(ranges) == 1:
        return [worker(n, a, b, *args) for a, b in ranges]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(worker, n, a, b, *args) for a, b in ranges]
        return [f.result() for f in futures]
