"""Input checking helpers shared by the public entry points."""
from __future__ import annotations

import numpy as np

from .exceptions import (
    DimensionMismatch,
    EmptyMatrix,
    InvalidValue,
    LengthMismatch,
    NegativeFeature,
)


def as_float_matrix(X, *, require_nonnegative: bool = False, allow_empty_rows: bool = False) -> np.ndarray:
    """Coerce X to a 2-D float64 array and validate it.

    Parameters
    ----------
    X : array-like of shape (rows, cols)
    require_nonnegative : bool
        Reject negative values (training and scoring input must already be
        normalized to a non-negative range).
    allow_empty_rows : bool
        Permit rows == 0 (e.g. scoring an empty batch).
    """
    try:
        arr = np.asarray(X, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidValue(f"feature matrix is not numeric: {exc}") from None
    if arr.ndim == 1:
        # a single record is not accepted implicitly; callers reshape on purpose
        raise EmptyMatrix("expected a 2-D feature matrix, got a 1-D array")
    if arr.ndim != 2:
        raise EmptyMatrix(f"expected a 2-D feature matrix, got {arr.ndim}-D")
    if arr.shape[1] == 0:
        raise EmptyMatrix("feature matrix has zero columns")
    if arr.shape[0] == 0 and not allow_empty_rows:
        raise EmptyMatrix("feature matrix has zero rows")
    if not np.all(np.isfinite(arr)):
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise InvalidValue(f"non-finite value at row {bad[0]}, column {bad[1]}")
    if require_nonnegative and arr.size and np.any(arr < 0.0):
        bad = np.argwhere(arr < 0.0)[0]
        raise NegativeFeature(
            f"negative value at row {bad[0]}, column {bad[1]}; "
            "normalize features to a non-negative range first"
        )
    return arr


def as_label_vector(y, n_rows: int) -> np.ndarray:
    """Coerce y to a 1-D array of length n_rows, preserving label dtype."""
    arr = np.asarray(y)
    if arr.ndim != 1:
        raise LengthMismatch(f"labels must be 1-D, got {arr.ndim}-D")
    if arr.shape[0] != n_rows:
        raise LengthMismatch(f"{arr.shape[0]} labels for {n_rows} records")
    return arr


def as_record(x, n_features: int) -> np.ndarray:
    """Coerce a single record to 1-D float64 of the model's width."""
    try:
        arr = np.asarray(x, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidValue(f"record is not numeric: {exc}") from None
    if arr.ndim != 1:
        raise DimensionMismatch(f"expected a 1-D record, got {arr.ndim}-D")
    if arr.shape[0] != n_features:
        raise DimensionMismatch(
            f"record has {arr.shape[0]} features, model expects {n_features}"
        )
    if not np.all(np.isfinite(arr)):
        raise InvalidValue("record contains a non-finite value")
    if np.any(arr < 0.0):
        raise NegativeFeature("record contains a negative value")
    return arr


def check_epsilon(epsilon: float) -> float:
    eps = float(epsilon)
    if not np.isfinite(eps) or eps < 0.0:
        raise InvalidValue(f"epsilon must be finite and >= 0, got {epsilon!r}")
    return eps
