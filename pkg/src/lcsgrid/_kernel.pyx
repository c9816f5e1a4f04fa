# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled combine kernel: the hot inner loop of the solver.

Mirrors lcsgrid._pykernel cell for cell (same bisection, same tie rules,
same sentinel fills) but runs without the GIL, so a thread pool mapping
disjoint start-column chunks onto this function scales across cores.
"""

NAME = "cython"

ctypedef int itype


cdef inline itype cell_value(const itype[:, ::1] upper, const itype[:, ::1] lower,
                             Py_ssize_t i, Py_ssize_t k, Py_ssize_t j,
                             itype inf, Py_ssize_t wl) noexcept nogil:
    cdef itype x
    if k > j:
        return inf
    x = upper[i, k]
    if x >= inf:
        return inf
    if j - k > wl:
        return inf
    return lower[x - 1, j - k]


cdef void col_mins(const itype[:, ::1] upper, const itype[:, ::1] lower,
                   Py_ssize_t i, Py_ssize_t left, Py_ssize_t right,
                   Py_ssize_t top, Py_ssize_t bottom,
                   itype[:, ::1] out_reach, itype[:, ::1] out_trace,
                   bint with_trace, itype inf, Py_ssize_t wl) noexcept nogil:
    cdef Py_ssize_t mid, k, c, best_k
    cdef itype v, best
    if right < left:
        return
    mid = (left + right + 1) // 2
    best = cell_value(upper, lower, i, top, mid, inf, wl)
    best_k = top
    for k in range(top + 1, bottom + 1):
        v = cell_value(upper, lower, i, k, mid, inf, wl)
        if v < best:
            best = v
            best_k = k
    out_reach[i, mid] = best
    if with_trace:
        out_trace[i, mid] = <itype> best_k
    if best != inf:
        col_mins(upper, lower, i, left, mid - 1, top, best_k,
                 out_reach, out_trace, with_trace, inf, wl)
        col_mins(upper, lower, i, mid + 1, right, best_k, bottom,
                 out_reach, out_trace, with_trace, inf, wl)
    else:
        # unreachable columns form a suffix: fill instead of recursing
        for c in range(mid + 1, right + 1):
            out_reach[i, c] = inf
            if with_trace:
                out_trace[i, c] = <itype> top
        col_mins(upper, lower, i, left, mid - 1, top, bottom,
                 out_reach, out_trace, with_trace, inf, wl)


def combine_level(const itype[:, ::1] upper_reach, const itype[:] upper_kmax,
                  const itype[:, ::1] lower_reach, Py_ssize_t lower_wstar,
                  itype[:, ::1] out_reach, itype[:, ::1] out_trace,
                  bint with_trace, itype inf, Py_ssize_t i_lo, Py_ssize_t i_hi):
    """Combine start columns [i_lo, i_hi) of one slab pair (GIL released)."""
    cdef Py_ssize_t w = out_reach.shape[1] - 1
    cdef Py_ssize_t wl = lower_reach.shape[1] - 1
    cdef Py_ssize_t i, c, colhi, bottom
    with nogil:
        for i in range(i_lo, i_hi):
            bottom = upper_kmax[i]
            colhi = bottom + lower_wstar
            if colhi > w:
                colhi = w
            col_mins(upper_reach, lower_reach, i, 0, colhi, 0, bottom,
                     out_reach, out_trace, with_trace, inf, wl)
            for c in range(colhi + 1, w + 1):
                out_reach[i, c] = inf
                if with_trace:
                    out_trace[i, c] = 0
