"""Column minima of an implicitly defined monotone matrix.

A matrix given by a cell function is monotone when the per-column argmin
rows (ties broken to the smallest row) never decrease from left to right.
That lets a bisection find every column minimum in O((rows + cols) log
cols) cell evaluations: solve the middle column exactly, then recurse left
with the rows above its argmin and right with the rows below it.

The engine is the combination step of the solver: cells there are reach
compositions ("cross the boundary row after k of the j matched symbols"),
and unreachable columns form a suffix, which the bisection exploits by
filling everything right of an unreachable column without recursing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .breakout import prefix_min_scan_index

#: Column spans narrower than this recurse sequentially even when an
#: executor is available; forking overhead dominates below it.
FORK_CUTOFF = 32

CellFn = Callable[[int, int], int]


@dataclass
class ColMins:
    """Per-column first-wins argmin rows and minima, filled by find_col_mins."""

    argmin_row: np.ndarray
    min_value: np.ndarray

    @classmethod
    def sized(cls, cols: int) -> "ColMins":
        return cls(
            argmin_row=np.zeros(cols, dtype=np.intc),
            min_value=np.zeros(cols, dtype=np.intc),
        )


def compose_cell(upper_reach: np.ndarray, lower_reach: np.ndarray, k: int, j: int, inf: int) -> int:
    """Reach of "weight k above the boundary, weight j-k below".

    ``upper_reach`` is one start column's reach vector; ``lower_reach`` is
    the lower slab's full table, one row per start column.  Unreachable
    middles propagate the sentinel; a below-weight beyond the lower table's
    width is likewise unreachable.  k = 0 degenerates to "all weight below"
    and k = j to "descend free from the middle", so minimizing this single
    expression over k covers every split of the recursion.
    """
    assert 0 <= k <= j
    x = int(upper_reach[k]) if k < len(upper_reach) else inf
    if x >= inf:
        return inf
    d = j - k
    if d >= lower_reach.shape[1]:
        return inf
    return int(lower_reach[x - 1, d])


def _min_of_column(cell: CellFn, col: int, top: int, bottom: int) -> tuple:
    seg = [cell(k, col) for k in range(top, bottom + 1)]
    value, idx = prefix_min_scan_index(seg)
    return value, idx + top


def find_min_index(cell: CellFn, col: int, top: int, bottom: int) -> int:
    """Row in [top..bottom] holding the minimum of ``col``, smallest on ties."""
    assert top <= bottom
    return _min_of_column(cell, col, top, bottom)[1]


def find_col_mins(
    cell: CellFn,
    left: int,
    right: int,
    top: int,
    bottom: int,
    out: ColMins,
    inf: int,
    first_index: Optional[int] = None,
    executor=None,
    fork_depth: int = 3,
    fork_cutoff: int = FORK_CUTOFF,
) -> None:
    """Fill ``out`` with the argmin row and minimum of every column in
    [left..right], restricted to rows [top..bottom].

    Bisects at the middle column: when its minimum is reachable the two
    halves recurse with the row range split at the argmin (in parallel when
    an executor is given and the span is wide enough); when it is the
    sentinel, every column to the right is unreachable too and is filled
    directly, and only the left half recurses, keeping the full row range.

    ``first_index`` maps ``left`` onto the output offset; callers normally
    leave it as the identity.
    """
    if first_index is None:
        first_index = left
    _col_mins(
        cell, left, right, top, bottom, out.argmin_row, out.min_value,
        inf, first_index - left, executor, fork_depth, fork_cutoff,
    )


def _col_mins(cell, left, right, top, bottom, argmin, minval, inf, shift,
              executor, fork_depth, fork_cutoff):
    if right - left + 1 < 1:
        return
    mid = (left + right + 1) // 2
    value, min_index = _min_of_column(cell, mid, top, bottom)
    argmin[shift + mid] = min_index
    minval[shift + mid] = value
    if value != inf:
        fork = (
            executor is not None
            and fork_depth > 0
            and right - left >= fork_cutoff
        )
        if fork:
            pending = executor.submit(
                _col_mins, cell, left, mid - 1, top, min_index, argmin, minval,
                inf, shift, executor, fork_depth - 1, fork_cutoff,
            )
            _col_mins(cell, mid + 1, right, min_index, bottom, argmin, minval,
                      inf, shift, executor, fork_depth - 1, fork_cutoff)
            pending.result()
        else:
            _col_mins(cell, left, mid - 1, top, min_index, argmin, minval,
                      inf, shift, executor, fork_depth, fork_cutoff)
            _col_mins(cell, mid + 1, right, min_index, bottom, argmin, minval,
                      inf, shift, executor, fork_depth, fork_cutoff)
    else:
        # Unreachable columns form a suffix: fill the right half in place
        # of recursing, and keep the full row range on the left.
        for c in range(mid + 1, right + 1):
            argmin[shift + c] = top
            minval[shift + c] = inf
        _col_mins(cell, left, mid - 1, top, bottom, argmin, minval,
                  inf, shift, executor, fork_depth, fork_cutoff)


def column_argmins_brute(cell: CellFn, left: int, right: int, top: int, bottom: int) -> ColMins:
    """Sequential per-column argmin with first-wins ties; differential oracle."""
    cols = right - left + 1
    out = ColMins.sized(cols)
    for c in range(left, right + 1):
        best = cell(top, c)
        best_row = top
        for k in range(top + 1, bottom + 1):
            v = cell(k, c)
            if v < best:
                best = v
                best_row = k
        out.argmin_row[c - left] = best_row
        out.min_value[c - left] = best
    return out
