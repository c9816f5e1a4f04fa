"""Backend selection: compiled kernel when available, pure Python otherwise.

The default is resolved once at import: the Cython extension if it built,
else the pure fallback.  ``LCSGRID_BACKEND=python|cython`` overrides the
default, and every solver entry point also takes an explicit ``backend=``
argument for per-call control (the benchmark uses it to compare the two).
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _kernel
except ImportError:  # pure checkout or build without a compiler
    _kernel = None

BACKENDS = {"python": _pykernel}
if _kernel is not None:
    BACKENDS["cython"] = _kernel


def have_extension() -> bool:
    return _kernel is not None


def default_backend() -> str:
    env = os.environ.get("LCSGRID_BACKEND")
    if env:
        if env not in BACKENDS:
            raise ValueError(
                f"LCSGRID_BACKEND={env!r} not available; choices: {sorted(BACKENDS)}"
            )
        return env
    return "cython" if _kernel is not None else "python"


def resolve(name=None):
    """Map a backend name ('auto'/None, 'python', 'cython') to its module."""
    if name in (None, "auto"):
        name = default_backend()
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; choices: {sorted(BACKENDS)} "
            "(the compiled kernel is only available after building the extension)"
        ) from None
