"""Reference implementations for differential testing.

Kept deliberately simple, single-threaded, and independent of the solver:
a classic quadratic dynamic-programming LCS with deterministic backtrack,
and an explicit per-vertex sweep over a materialized grid slab that
recomputes leftmost reaches by brute force.  Nothing here is shared with
the divide-and-conquer path beyond the core domain types.
"""

from __future__ import annotations

from .seqcore import GridModel, LcsResult, SequenceLike, as_bytes


def dp_table(a: SequenceLike, b: SequenceLike) -> list:
    """The (m+1) x (n+1) LCS-length table with a zero first row and column."""
    aa = as_bytes(a)
    bb = as_bytes(b)
    n = len(bb)
    rows = [[0] * (n + 1)]
    prev = rows[0]
    for ca in aa:
        cur = [0] * (n + 1)
        for j, cb in enumerate(bb, start=1):
            if ca == cb:
                cur[j] = prev[j - 1] + 1
            else:
                up = prev[j]
                lt = cur[j - 1]
                cur[j] = up if up >= lt else lt
        rows.append(cur)
        prev = cur
    return rows


def dp_lcs(a: SequenceLike, b: SequenceLike) -> LcsResult:
    """Exact LCS by dynamic programming.

    Backtracks from the bottom-right corner preferring diagonal, then up,
    then left, which makes the recovered subsequence deterministic.
    """
    aa = as_bytes(a)
    bb = as_bytes(b)
    table = dp_table(aa, bb)
    i = len(aa)
    j = len(bb)
    picked = []
    while i > 0 and j > 0:
        if aa[i - 1] == bb[j - 1]:
            picked.append((i, j))
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    picked.reverse()
    return LcsResult(
        length=len(picked),
        subsequence=bytes(aa[i - 1] for i, _ in picked),
        row_positions=tuple(i for i, _ in picked),
        col_positions=tuple(j for _, j in picked),
    )


def grid_reach_oracle(g: GridModel, top_row: int, bottom_row: int, start: int, j: int) -> int:
    """Leftmost bottom-row column of the slab reachable from (top_row, start)
    with path weight j, or the sentinel.

    Materializes the slab and sweeps every vertex, tracking the maximum
    diagonal count on any monotone path from the start; a weight can always
    be lowered by replacing a diagonal with a corner, so "weight exactly j"
    reduces to "maximum weight >= j".  Intended for small instances only.
    """
    assert 1 <= top_row <= bottom_row <= g.m + 1
    assert 1 <= start <= g.n + 1
    n = g.n
    inf = g.inf
    unreachable = -1
    best = [unreachable] * (n + 2)  # columns 1..n+1 at the current row
    for c in range(start, n + 2):
        best[c] = 0
    for r in range(top_row, bottom_row):
        sym = g.row_seq[r - 1]
        nxt = [unreachable] * (n + 2)
        for c in range(start, n + 2):
            w = best[c]  # vertical step
            if c > start:
                if nxt[c - 1] > w:
                    w = nxt[c - 1]  # horizontal step within the new row
                if best[c - 1] >= 0 and sym == g.col_seq[c - 2]:
                    d = best[c - 1] + 1  # diagonal on a symbol match
                    if d > w:
                        w = d
            nxt[c] = w
        best = nxt
    for c in range(start, n + 2):
        if best[c] >= j:
            return c
    return inf
