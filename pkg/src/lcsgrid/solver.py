"""Divide-and-conquer LCS over the implicit grid: build reach tables
bottom-up, merge row slabs through monotone column minima, then walk the
recorded split weights back down to recover one optimal subsequence.

A slab covering string rows [top, bottom) has a table with one reach
vector per start column: entry j is the leftmost bottom-boundary column
reachable from that start with exactly j matched symbols.  One string row
is the base case (weight 0 stays put, weight 1 jumps to just right of the
next matching column); two stacked slabs combine by minimizing, over every
split k, the composition "reach the boundary with weight k, then continue
below with weight j - k".

Everything is deterministic: ties resolve to the smallest split weight and
smallest index, so the recovered subsequence is the leftmost optimal path
regardless of thread count or backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _backend, parallel
from ._pykernel import combine_single_row
from .breakout import BreakoutRow, base_case_row, prefix_sum
from .monotone import compose_cell
from .seqcore import GridModel, LcsResult, SequenceLike, as_bytes, match_positions


@dataclass
class CostTable:
    """Reach table of one slab, plus combine traces and child slabs.

    ``reach[i - 1, j]`` is the j-th breakout of start column i; row i is
    nondecreasing over its reachable prefix and sentinel-terminal after it.
    ``trace[i - 1, j]`` records the first-wins split weight chosen when the
    slab was combined (None for base slabs and in low-memory mode).
    ``kmax[i - 1]`` caches the last reachable weight of row i and ``wstar``
    the maximum of those, which bound the search rectangles upstream.
    """

    top_row: int
    bottom_row: int
    reach: np.ndarray
    trace: Optional[np.ndarray]
    kmax: np.ndarray
    wstar: int
    n: int
    inf: int
    upper: Optional["CostTable"] = None
    lower: Optional["CostTable"] = None

    @property
    def max_weight(self) -> int:
        return self.reach.shape[1] - 1

    def row(self, i: int) -> BreakoutRow:
        """Reach vector of start column i (1-based, up to n + 1)."""
        assert 1 <= i <= self.n + 1
        return BreakoutRow(start=i, reach=self.reach[i - 1])


@dataclass(frozen=True)
class _Context:
    threads: int
    backend: object
    with_trace: bool


def _base_table(g: GridModel, h: int) -> CostTable:
    """Single string row h: weight 0 is the identity, weight 1 the first
    breakout, nothing heavier fits in one row."""
    n = g.n
    inf = g.inf
    w = min(1, n)
    reach = np.empty((n + 1, w + 1), dtype=np.intc)
    reach[:, 0] = np.arange(1, n + 2, dtype=np.intc)
    if w == 1:
        first = base_case_row(g, h, match_positions(g.col_seq, g.row_seq[h - 1]))
        reach[:n, 1] = first
        reach[n, 1] = inf
    kmax = (reach < inf).sum(axis=1).astype(np.intc) - 1
    return CostTable(
        top_row=h, bottom_row=h + 1, reach=reach, trace=None,
        kmax=kmax, wstar=int(kmax.max()), n=n, inf=inf,
    )


def _combine_tables(g: GridModel, upper: CostTable, lower: CostTable, ctx: _Context) -> CostTable:
    n = g.n
    inf = g.inf
    w = min(lower.bottom_row - upper.top_row, n)
    reach = np.empty((n + 1, w + 1), dtype=np.intc)
    trace = np.empty((n + 1, w + 1), dtype=np.intc) if ctx.with_trace else np.empty((1, 1), dtype=np.intc)
    kernel = ctx.backend.combine_level

    def task(lo, hi):
        kernel(upper.reach, upper.kmax, lower.reach, lower.wstar,
               reach, trace, ctx.with_trace, inf, lo, hi)

    parallel.run_chunked(task, n + 1, ctx.threads)
    kmax = (reach < inf).sum(axis=1).astype(np.intc) - 1
    return CostTable(
        top_row=upper.top_row, bottom_row=lower.bottom_row, reach=reach,
        trace=trace if ctx.with_trace else None,
        kmax=kmax, wstar=int(kmax.max()), n=n, inf=inf,
        upper=upper, lower=lower,
    )


def _build(g: GridModel, top_row: int, bottom_row: int, ctx: _Context) -> CostTable:
    if bottom_row == top_row + 1:
        return _base_table(g, top_row)
    mid = (top_row + bottom_row) // 2
    upper = _build(g, top_row, mid, ctx)
    lower = _build(g, mid, bottom_row, ctx)
    return _combine_tables(g, upper, lower, ctx)


def build_cost_table(
    g: GridModel,
    top_row: int,
    bottom_row: int,
    *,
    threads: int = 1,
    backend=None,
    with_trace: bool = True,
) -> CostTable:
    """Reach table of the slab of vertex rows [top_row, bottom_row].

    Splits at the middle row, builds both halves, then combines every start
    column (in parallel when ``threads`` > 1).  ``with_trace=False`` skips
    storing split weights; recovery then recomputes them on the walk.
    """
    assert 1 <= top_row < bottom_row <= g.m + 1
    ctx = _Context(threads=threads, backend=_backend.resolve(backend), with_trace=with_trace)
    return _build(g, top_row, bottom_row, ctx)


def combine_row(upper_row: BreakoutRow, lower: CostTable, max_weight: int):
    """Merge one start column's reach vector with the slab below it.

    Returns the combined :class:`BreakoutRow` plus the per-weight argmin
    trace.  Entry j of the result is the minimum over splits k of "cross
    the boundary with weight k at the leftmost column possible, then spend
    j - k below"; k = 0 and k = j cover the all-below and descend-free
    splits, so this single minimization is the whole combination rule.
    """
    inf = lower.inf
    urow = np.ascontiguousarray(upper_row.reach, dtype=np.intc)
    kmax_i = int((urow < inf).sum()) - 1
    reach = np.empty(max_weight + 1, dtype=np.intc)
    trace = np.empty(max_weight + 1, dtype=np.intc)
    combine_single_row(urow, kmax_i, lower.reach, lower.wstar, reach, trace, inf)
    return BreakoutRow(start=upper_row.start, reach=reach), trace


def lcs_length(table: CostTable) -> int:
    """Largest weight whose reach from start column 1 is still finite."""
    return int(table.kmax[0])


def _retrace(table: CostTable, i: int, j: int) -> int:
    """Recompute the first-wins split weight for cell (i, j) of a combine."""
    urow = table.upper.reach[i - 1]
    inf = table.inf
    hi = min(j, int(table.upper.kmax[i - 1]))
    best = inf
    best_k = 0
    for k in range(hi + 1):
        v = compose_cell(urow, table.lower.reach, k, j, inf)
        if v < best:
            best = v
            best_k = k
    return best_k


def recover_cross_vertices(g: GridModel, table: CostTable, j: int) -> np.ndarray:
    """Column of the leftmost path vertex on every grid row, for the
    weight-j optimal path from the top-left start.

    Walks the combine tree: the split weight k recorded (or recomputed) for
    (start, j) pins the crossing column on the middle boundary row, and the
    two halves recurse with (start, k) and (crossing, j - k).  Entry r - 1
    holds the column of the path's leftmost vertex on grid row r.
    """
    m = g.m
    if not (table.top_row == 1 and table.bottom_row == m + 1):
        raise ValueError("recovery needs the full-grid table")
    if j > lcs_length(table):
        raise ValueError(f"no path of weight {j} exists (max {lcs_length(table)})")
    cols = np.empty(m + 1, dtype=np.intc)

    def walk(tab: CostTable, i: int, jj: int):
        if tab.bottom_row == tab.top_row + 1:
            cols[tab.top_row - 1] = i
            return
        k = int(tab.trace[i - 1, jj]) if tab.trace is not None else _retrace(tab, i, jj)
        x = int(tab.upper.reach[i - 1, k])
        walk(tab.upper, i, k)
        walk(tab.lower, x, jj - k)

    walk(table, 1, j)
    cols[m] = table.reach[0, j]
    return cols


def assemble_lcs(g: GridModel, path_cols: np.ndarray) -> LcsResult:
    """Read the subsequence off a cross-vertex path.

    Row r contributes its symbol exactly when the path enters row r + 1
    strictly to the right through a matching diagonal; on a maximum-weight
    path every such step is forced, so the marks are precisely the matched
    symbols.  Marked rows are compacted in order via prefix sums.
    """
    m = g.m
    if m == 0 or g.n == 0:
        return LcsResult(0, b"", (), ())
    prev = path_cols[:-1].astype(np.int64)
    cur = path_cols[1:].astype(np.int64)
    land = np.clip(cur - 2, 0, g.n - 1)
    marked = (cur > prev) & (g.row_arr == g.col_arr[land])
    offsets = prefix_sum(marked.astype(np.int64))
    length = int(offsets[-1])
    row_pos = np.flatnonzero(marked) + 1
    col_pos = cur[marked] - 1
    return LcsResult(
        length=length,
        subsequence=g.row_arr[marked].tobytes(),
        row_positions=tuple(int(r) for r in row_pos),
        col_positions=tuple(int(c) for c in col_pos),
    )


def lcs(
    a: SequenceLike,
    b: SequenceLike,
    *,
    threads: int = 1,
    backend=None,
    low_memory: bool = False,
) -> LcsResult:
    """One longest common subsequence of ``a`` and ``b``.

    The shorter input indexes grid rows (the recursion depth), the longer
    one the columns.  Output is deterministic: the same subsequence and
    positions come back for any ``threads`` or ``backend`` setting.
    ``low_memory`` drops stored traces and recomputes split weights along
    the recovery walk instead.
    """
    aa = as_bytes(a)
    bb = as_bytes(b)
    if len(aa) == 0 or len(bb) == 0:
        return LcsResult(0, b"", (), ())
    swapped = len(aa) > len(bb)
    rows, cols = (bb, aa) if swapped else (aa, bb)
    g = GridModel(rows, cols)
    table = build_cost_table(
        g, 1, g.m + 1, threads=threads, backend=backend, with_trace=not low_memory
    )
    length = lcs_length(table)
    path = recover_cross_vertices(g, table, length)
    result = assemble_lcs(g, path)
    if swapped:
        result = LcsResult(
            length=result.length,
            subsequence=result.subsequence,
            row_positions=result.col_positions,
            col_positions=result.row_positions,
        )
    return result
