"""Parallel longest-common-subsequence engine on implicit grid graphs.

The solve runs as a divide-and-conquer over the rows of an implicit match
grid, combining reach tables through monotone-matrix column minima.  Hot
combines run in a compiled kernel when the extension is built, with a pure
Python fallback selected automatically at import (see
:func:`lcsgrid.active_backend`).
"""

from ._backend import default_backend as active_backend
from ._backend import have_extension
from .oracle import dp_lcs
from .seqcore import GridModel, LcsResult
from .solver import lcs

__all__ = [
    "GridModel",
    "LcsResult",
    "active_backend",
    "dp_lcs",
    "have_extension",
    "lcs",
]

__version__ = "0.1.0"
