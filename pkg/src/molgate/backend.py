"""Kernel backend selection.

The hot time-stepping loops in :mod:`molgate.kernels` are written once in
plain numpy and compiled with numba's ``@njit`` when available.  Set the
environment variable ``MOLGATE_BACKEND=numpy`` before import to force the
pure-numpy interpretation of the same functions (useful for debugging and
for the backend benchmark under ``benchmarks/``).
"""

import os

_requested = os.environ.get("MOLGATE_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise RuntimeError(
        f"MOLGATE_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

NUMBA_ENABLED = False
if _requested == "numba":
    try:
        from numba import njit as _njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False


def hot_loop(func):
    """Compile ``func`` with numba when the numba backend is active."""
    if NUMBA_ENABLED:
        return _njit(cache=True, nogil=True)(func)
    return func


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"
