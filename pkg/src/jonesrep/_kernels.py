"""Selects the eigenvalue kernel: compiled if available, else pure Python.

Set JONESREP_PURE_PYTHON=1 to force the pure-Python kernel.
"""
import os

from . import _eig_py
from ._eig_py import EigenvalueError

eigvals_py = _eig_py.eigvals

try:
    from ._eig_cy import eigvals as eigvals_cy
except ImportError:  # extension not built
    eigvals_cy = None

if eigvals_cy is not None and os.environ.get("JONESREP_PURE_PYTHON", "") in ("", "0"):
    eigvals = eigvals_cy
    BACKEND = "cython"
else:
    eigvals = eigvals_py
    BACKEND = "python"

__all__ = ["eigvals", "eigvals_py", "eigvals_cy", "BACKEND", "EigenvalueError"]
