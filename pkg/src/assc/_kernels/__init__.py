"""Kernel backend selection.

The compiled Cython extension is used when it imported cleanly; otherwise
the NumPy implementation takes over.  Set ``ASSC_PURE_PYTHON=1`` to force
the fallback (useful for benchmarking and debugging).
"""

import os

from . import pure

OPTIMAL = pure.OPTIMAL
INFEASIBLE = pure.INFEASIBLE
UNBOUNDED = pure.UNBOUNDED
STALLED = pure.STALLED

if os.environ.get("ASSC_PURE_PYTHON", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
simplex_solve = _impl.simplex_solve
admm_exact = _impl.admm_exact
admm_noisy = _impl.admm_noisy


def backend_name() -> str:
    """Name of the active kernel backend ("cython" or "pure")."""
    return BACKEND
