"""Kernel backend selection.

The compiled Cython extension is preferred when importable; setting
``WALLLAT_PURE_PY=1`` forces the numpy fallback.  Both backends implement the
same contract (see ``_pure.py``).
"""

from __future__ import annotations

import importlib
import os

import numpy as np

from walllat.kernels import _pure

_compiled = None
if os.environ.get("WALLLAT_PURE_PY", "") in ("", "0"):
    try:
        _compiled = importlib.import_module("walllat.kernels._compiled")
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _pure

_RANK_LIMIT = 1 << 30


def backend() -> str:
    """Name of the active backend: "compiled" or "pure"."""
    return _impl.BACKEND


def closure_flags(mult: np.ndarray, seed) -> np.ndarray:
    seed_arr = np.asarray(list(seed), dtype=np.int32)
    return _impl.closure_flags(mult, seed_arr)


def double_coset_labels(mult: np.ndarray, a_ids: np.ndarray, b_ids: np.ndarray) -> np.ndarray:
    return _impl.double_coset_labels(
        mult,
        np.ascontiguousarray(a_ids, dtype=np.int32),
        np.ascontiguousarray(b_ids, dtype=np.int32),
    )


def assoc_violation(mult: np.ndarray) -> int:
    return int(_impl.assoc_violation(mult))


def exact_rank(rows) -> int:
    """Exact rank of an integer matrix (sequence of rows or 2-D array).

    Tries the compiled int64 path first and falls back to arbitrary-precision
    elimination when entries are too large, so the result is always exact.
    """
    if isinstance(rows, np.ndarray):
        if rows.size == 0:
            return 0
        if _compiled is not None and np.issubdtype(rows.dtype, np.integer):
            if int(np.abs(rows).max()) < _RANK_LIMIT:
                r = _compiled.rank_int64(np.ascontiguousarray(rows, dtype=np.int64))
                if r >= 0:
                    return int(r)
        return _pure.rank_int(rows.tolist())
    row_list = [list(r) for r in rows]
    if not row_list or not row_list[0]:
        return 0
    if _compiled is not None and all(
        -_RANK_LIMIT < v < _RANK_LIMIT for row in row_list for v in row
    ):
        r = _compiled.rank_int64(np.ascontiguousarray(row_list, dtype=np.int64))
        if r >= 0:
            return int(r)
    return _pure.rank_int(row_list)
