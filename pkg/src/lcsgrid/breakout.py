"""Two-row base-case reach vectors and the prefix-scan primitives.

For a single string row h, the base-case vector maps each top-row start
column i to the leftmost bottom-row column reachable with one diagonal:
``(min match position >= i) + 1``, or the unreachable sentinel.  Together
with the weight-0 "stay in place" entry this seeds the divide-and-conquer
combine in :mod:`lcsgrid.solver`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .seqcore import GridModel, match_positions

#: Below this length the scans run as single sequential passes; above it the
#: blocked two-pass form kicks in when an executor is supplied.
SCAN_PARALLEL_CUTOFF = 4096


@dataclass(frozen=True)
class BreakoutRow:
    """Reach vector for one start column: ``reach[j]`` is the leftmost
    bottom-row column reachable with path weight j (sentinel when none).

    ``reach[0] == start`` always; the finite prefix is nondecreasing and
    once a sentinel appears every later entry is a sentinel.
    """

    start: int
    reach: np.ndarray


def base_case_row(
    g: GridModel, h: int, match_idx: Optional[np.ndarray] = None
) -> np.ndarray:
    """First-breakout vector of string row h, one entry per start column 1..n.

    Entry i is ``min{p in match positions : p >= i} + 1`` or the sentinel.
    """
    assert 1 <= h <= g.m
    if match_idx is None:
        match_idx = match_positions(g.col_seq, g.row_seq[h - 1])
    n = g.n
    inf = g.inf
    # next match at-or-after each column, computed by a reversed running min;
    # n+1 marks "no match", so +1 lands exactly on the sentinel n+2.
    nxt = np.full(n, n + 1, dtype=np.intc)
    if len(match_idx):
        nxt[match_idx - 1] = match_idx
        nxt = np.minimum.accumulate(nxt[::-1])[::-1]
    return (nxt + 1).astype(np.intc)


def base_case_row_by_scan(
    g: GridModel, h: int, match_idx: Optional[np.ndarray] = None
) -> np.ndarray:
    """Same vector via scatter + inclusive prefix sum + sentinel fill.

    Gap construction: entry 1 holds ``p_1 + 1`` and entry ``p_{k-1} + 1``
    holds ``p_k - p_{k-1}``; prefix sums then reproduce the next-match
    values, and everything from entry ``p_r + 1`` on is unreachable.
    Kept as an independent construction for differential testing against
    :func:`base_case_row`.
    """
    assert 1 <= h <= g.m
    if match_idx is None:
        match_idx = match_positions(g.col_seq, g.row_seq[h - 1])
    n = g.n
    inf = g.inf
    if len(match_idx) == 0:
        return np.full(n, inf, dtype=np.intc)
    gaps = np.zeros(n, dtype=np.intc)
    gaps[0] = match_idx[0] + 1
    if len(match_idx) > 1:
        gaps[match_idx[:-1]] = np.diff(match_idx)
    out = prefix_sum(gaps).astype(np.intc)
    out[match_idx[-1] :] = inf
    return out


def prefix_sum(values, executor=None, cutoff: int = SCAN_PARALLEL_CUTOFF) -> np.ndarray:
    """Inclusive prefix sums, deterministic regardless of schedule.

    With an executor and enough elements this runs the blocked two-pass
    scan (per-block sums in parallel, then a serial pass over block totals,
    then parallel offset adds); integer addition makes every schedule agree
    bit for bit.
    """
    arr = np.asarray(values, dtype=np.int64)
    if executor is None or len(arr) < cutoff:
        return np.cumsum(arr)
    workers = getattr(executor, "_max_workers", 4)
    blocks = np.array_split(arr, max(2, workers))
    partials = list(executor.map(np.cumsum, blocks))
    offsets = np.zeros(len(partials), dtype=np.int64)
    for i in range(1, len(partials)):
        offsets[i] = offsets[i - 1] + partials[i - 1][-1]

    def _shift(i):
        return partials[i] + offsets[i]

    return np.concatenate(list(executor.map(_shift, range(len(partials)))))


def prefix_min_scan_index(values, cutoff: int = SCAN_PARALLEL_CUTOFF) -> tuple:
    """Minimum and the smallest index attaining it, via a doubling scan.

    Each round merges element j (whose ``exp`` bit is set) with the top of
    the preceding exp-block at ``j & ~exp | (exp - 1)``; the ``<=`` compare
    prefers the earlier element, so ties always resolve to the smallest
    index.  The last element ends up holding the scan of the whole vector.
    """
    arr = np.asarray(values)
    size = len(arr)
    if size == 0:
        raise ValueError("prefix_min_scan_index requires a non-empty input")
    if size < cutoff:
        best = int(arr[0])
        best_idx = 0
        for i in range(1, size):
            v = int(arr[i])
            if v < best:
                best = v
                best_idx = i
        return best, best_idx
    prefix = arr.astype(np.int64, copy=True)
    min_index = np.arange(size, dtype=np.int64)
    j = np.arange(size, dtype=np.int64)
    exp = 1
    while exp < size:
        active = np.flatnonzero((j & exp) != 0)
        partner = (active & ~exp) | (exp - 1)
        take = prefix[partner] <= prefix[active]
        upd = active[take]
        prefix[upd] = prefix[partner[take]]
        min_index[upd] = min_index[partner[take]]
        exp <<= 1
    return int(prefix[size - 1]), int(min_index[size - 1])
