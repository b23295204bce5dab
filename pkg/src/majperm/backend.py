"""Kernel backend selection.

The enumeration kernels exist twice with one contract: a numba @njit
build and a pure-numpy build.  MAJPERM_BACKEND picks one:

    auto    default; the JIT build when numba imports, else numpy
    numba   require the JIT build (ImportError if numba is absent)
    numpy   force the vectorized fallback

Resolution happens once, at first use.
"""

from __future__ import annotations

import math
import os
import warnings

import numpy as np

from .perms import MAX_ENUM_N, check_enum_size

_MOD = None
_NAME = None


def _resolve():
    global _MOD, _NAME
    if _MOD is not None:
        return
    choice = os.environ.get("MAJPERM_BACKEND", "auto").strip().lower()
    if choice not in {"auto", "numba", "numpy"}:
        raise ValueError(
            f"MAJPERM_BACKEND must be auto, numba or numpy, got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            from . import _kernels_numba as mod
            _MOD, _NAME = mod, "numba"
            return
        except ImportError:
            if choice == "numba":
                raise
            warnings.warn(
                "numba is unavailable; falling back to the pure-numpy kernels",
                RuntimeWarning,
                stacklevel=2,
            )
    from . import _kernels_numpy as mod
    _MOD, _NAME = mod, "numpy"


def backend_name() -> str:
    """Name of the selected kernel build: 'numba' or 'numpy'."""
    _resolve()
    return _NAME


def joint_table_range(n: int, start: int, stop: int, use_inv: bool,
                      limit: int = MAX_ENUM_N) -> np.ndarray:
    """Joint (stat1, imaj) table over ranks [start, stop) of S_n.

    stat1 is inv when use_inv, else maj.  Tables from disjoint ranges
    merge by addition; the full-sweep table is the sum over any rank
    partition, which is what the worker pool in the CLI layer exploits.
    """
    check_enum_size(n, limit)
    if not 0 <= start <= stop <= math.factorial(n):
        raise ValueError(f"bad rank range [{start}, {stop}) for n={n}")
    _resolve()
    return _MOD.joint_table_range(n, start, stop, bool(use_inv))
