"""Solver core selection: compiled extension when available, pure Python otherwise.

Set USCUT_PURE_PYTHON=1 to force the fallback (used by the benchmark and the
backend-parity tests). Both kernels implement the same algorithm with the same
arc ordering and produce bit-identical results.
"""

import os

if os.environ.get("USCUT_PURE_PYTHON") == "1":
    from ._maxflow_py import solve
    BACKEND = "python"
else:
    try:
        from ._maxflow_cy import solve
        BACKEND = "cython"
    except ImportError:
        from ._maxflow_py import solve
        BACKEND = "python"

__all__ = ["solve", "BACKEND"]
