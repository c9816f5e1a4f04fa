"""Worker-pool plumbing for the fork-join layers.

Pools are cached per thread count and reused across solves, so repeated
timed runs do not pay thread start-up. All parallel loops in the package
write disjoint index ranges and read only immutable inputs; results are
independent of the schedule, so the pool size never changes any output.
"""

from __future__ import annotations

import atexit
from concurrent.futures import ThreadPoolExecutor, wait

_POOLS: dict = {}

#: Minimum columns per task; below this, splitting is pure dispatch overhead.
MIN_CHUNK = 256


def get_executor(threads: int):
    """Shared pool for ``threads`` workers; None means run inline."""
    if threads is None or threads <= 1:
        return None
    pool = _POOLS.get(threads)
    if pool is None:
        pool = ThreadPoolExecutor(max_workers=threads, thread_name_prefix="lcsgrid")
        _POOLS[threads] = pool
    return pool


@atexit.register
def _shutdown_pools():
    for pool in _POOLS.values():
        pool.shutdown(wait=False, cancel_futures=True)
    _POOLS.clear()


def chunk_ranges(total: int, parts: int, min_chunk: int = MIN_CHUNK):
    """Split range(total) into at most ``parts`` contiguous [lo, hi) spans."""
    if total <= 0:
        return
    size = max(min_chunk, -(-total // max(1, parts)))
    lo = 0
    while lo < total:
        hi = min(total, lo + size)
        yield lo, hi
        lo = hi


def run_chunked(fn, total: int, threads: int, min_chunk: int = MIN_CHUNK):
    """Run ``fn(lo, hi)`` over a partition of range(total), possibly in parallel.

    ``fn`` must confine its writes to rows [lo, hi) of any shared output.
    """
    executor = get_executor(threads)
    if executor is None:
        fn(0, total)
        return
    spans = list(chunk_ranges(total, threads * 4, min_chunk))
    if len(spans) == 1:
        fn(0, total)
        return
    futures = [executor.submit(fn, lo, hi) for lo, hi in spans]
    done, _ = wait(futures)
    for fut in done:
        fut.result()  # surface worker exceptions
