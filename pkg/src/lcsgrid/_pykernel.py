"""Pure-Python combine kernel: the fallback backend.

Implements exactly the same per-start-column bisection as the compiled
kernel, routed through the generic engine in :mod:`lcsgrid.monotone`, so
the two backends produce identical reach and trace arrays cell for cell.
"""

from __future__ import annotations

import numpy as np

from .monotone import ColMins, compose_cell, find_col_mins

NAME = "python"


def combine_single_row(
    upper_row: np.ndarray,
    kmax_i: int,
    lower_reach: np.ndarray,
    lower_wstar: int,
    out_reach_row: np.ndarray,
    out_trace_row,
    inf: int,
) -> None:
    """Fill one output row: minima over every total weight, plus argmins.

    Rows of the implicit matrix are capped at the last reachable weight of
    the upper row and columns at that cap plus the lower table's last
    reachable weight; everything beyond is a sentinel by construction and
    is filled directly.
    """
    w = len(out_reach_row) - 1
    colhi = min(w, kmax_i + lower_wstar)

    def cell(k, j):
        if k > j:
            return inf
        return compose_cell(upper_row, lower_reach, k, j, inf)

    argmin = out_trace_row if out_trace_row is not None else np.empty(colhi + 1, np.intc)
    find_col_mins(
        cell, 0, colhi, 0, kmax_i,
        ColMins(argmin_row=argmin, min_value=out_reach_row), inf,
    )
    out_reach_row[colhi + 1 :] = inf
    if out_trace_row is not None:
        out_trace_row[colhi + 1 :] = 0


def combine_level(
    upper_reach: np.ndarray,
    upper_kmax: np.ndarray,
    lower_reach: np.ndarray,
    lower_wstar: int,
    out_reach: np.ndarray,
    out_trace: np.ndarray,
    with_trace: bool,
    inf: int,
    i_lo: int,
    i_hi: int,
) -> None:
    """Combine start columns [i_lo, i_hi) of one slab pair."""
    for i in range(i_lo, i_hi):
        combine_single_row(
            upper_reach[i],
            int(upper_kmax[i]),
            lower_reach,
            lower_wstar,
            out_reach[i],
            out_trace[i] if with_trace else None,
            inf,
        )
