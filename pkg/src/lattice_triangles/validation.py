"""Input validation for the estimator wrappers.

Arrays are accepted as anything numpy can convert; values must be exact
integers (floats are allowed only when integral).
"""

from __future__ import annotations

import numpy as np


def _as_int_array(X, name: str) -> np.ndarray:
    arr = np.asarray(X)
    if arr.dtype == object:
        try:
            arr = arr.astype(np.int64)
        except (TypeError, ValueError, OverflowError) as exc:
            raise ValueError(f"{name} must contain integers") from exc
    if np.issubdtype(arr.dtype, np.floating):
        if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
            raise ValueError(f"{name} must contain integers, got non-integral values")
        arr = arr.astype(np.int64)
    elif np.issubdtype(arr.dtype, np.bool_) or not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{name} must contain integers, got dtype {arr.dtype}")
    return arr.astype(np.int64, copy=False)


def check_pairs(X, extra_columns=False) -> np.ndarray:
    """Validate an array of (b, i) rows; returns int64 of shape (n, 2).

    With ``extra_columns`` any trailing columns are dropped, so the output
    of TriangleInvariants can be fed in directly.
    """
    arr = _as_int_array(X, "pairs")
    if arr.ndim != 2 or arr.shape[1] < 2 or (arr.shape[1] > 2 and not extra_columns):
        raise ValueError(f"pairs must have shape (n, 2), got {arr.shape}")
    arr = arr[:, :2]
    if np.any(arr[:, 0] < 3) or np.any(arr[:, 1] < 0):
        raise ValueError("pairs need b >= 3 and i >= 0")
    return arr


def check_triangles(X) -> np.ndarray:
    """Validate triangles given as (n, 3, 2) or flat (n, 6); returns (n, 3, 2) int64.

    Collinear triples are rejected.
    """
    arr = _as_int_array(X, "triangles")
    if arr.ndim == 2 and arr.shape[1] == 6:
        arr = arr.reshape(-1, 3, 2)
    if arr.ndim != 3 or arr.shape[1:] != (3, 2):
        raise ValueError(f"triangles must have shape (n, 3, 2) or (n, 6), got {arr.shape}")
    e1 = arr[:, 1] - arr[:, 0]
    e2 = arr[:, 2] - arr[:, 0]
    degenerate = e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0] == 0
    if np.any(degenerate):
        raise ValueError(f"degenerate triangles at rows {np.flatnonzero(degenerate).tolist()}")
    return arr
