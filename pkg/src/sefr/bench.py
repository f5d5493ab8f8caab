"""Grid benchmarks: wall time and MAC counts over data-size sweeps.

Each grid point trains on a stratified row subsample and the first n
columns, so scaling behavior is measured on the same distribution the
full dataset has. MAC counts come from the instrumentation hooks and are
deterministic; seconds are medians over the requested repeats.
"""
from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import core

from .exceptions import GridOutOfBounds, InvalidValue
from .instrument import MacCounter, mac_counter
from .validation import as_float_matrix, as_label_vector

__all__ = ["SweepResult", "sweep", "sweep_to_csv", "stratified_subsample", "mac_counter", "MacCounter"]

CSV_HEADER = "rows,cols,train_seconds,test_seconds,mac_count"


@dataclass(frozen=True)
class SweepResult:
    rows: int
    cols: int
    train_seconds: float
    test_seconds: float
    mac_count: int  # MACs spent in the two training data passes
    peak_model_values: int  # parameter floats held by the trained model


def stratified_subsample(y, n: int, seed: int = 42) -> np.ndarray:
    """n row indices whose class mix tracks the full vector.

    Largest-remainder allocation with at least one record per class, then
    a seeded shuffle picks the members. Returns sorted indices.
    """
    y = np.asarray(y)
    classes, counts = np.unique(y, return_counts=True)
    if n < classes.shape[0]:
        raise GridOutOfBounds(
            f"{n} rows cannot cover {classes.shape[0]} classes; "
            "the training core needs every class present"
        )
    if n > y.shape[0]:
        raise GridOutOfBounds(f"{n} rows requested, only {y.shape[0]} available")
    quota = n * counts / counts.sum()
    take = np.clip(np.floor(quota).astype(int), 1, counts)
    # settle rounding drift: hand out (or claw back) one at a time, biggest
    # fractional claim first, lowest class index breaking ties
    while take.sum() < n:
        frac = np.where(take < counts, quota - take, -np.inf)
        take[int(np.argmax(frac))] += 1
    while take.sum() > n:
        frac = np.where(take > 1, quota - take, np.inf)
        take[int(np.argmin(frac))] -= 1
    rng = np.random.default_rng(seed)
    picked = []
    for cls, cnt in zip(classes, take):
        idx = np.flatnonzero(y == cls)
        rng.shuffle(idx)
        picked.append(idx[:cnt])
    return np.sort(np.concatenate(picked))


def sweep(
    X,
    y,
    row_grid,
    col_grid,
    repeats: int = 3,
    seed: int = 42,
    epsilon: float = core.DEFAULT_EPSILON,
    mode: str = "auto",
) -> list[SweepResult]:
    """Train/test timings and MAC counts over the row x col grid.

    Grid points iterate row-major (each row count against every column
    count). Values must fit inside the dataset. Input features must
    already be scaled to the non-negative range training expects.
    """
    X = as_float_matrix(X)
    y = as_label_vector(y, X.shape[0])
    if repeats < 1:
        raise InvalidValue("repeats must be at least 1")
    row_grid = [int(r) for r in row_grid]
    col_grid = [int(c) for c in col_grid]
    if not row_grid or not col_grid:
        raise GridOutOfBounds("empty grid")
    for c in col_grid:
        if not 1 <= c <= X.shape[1]:
            raise GridOutOfBounds(f"column count {c} outside 1..{X.shape[1]}")

    n_classes = np.unique(y).shape[0]
    if mode == "auto":
        mode = "binary" if n_classes == 2 else "multiclass"
    train = core.train_binary if mode == "binary" else core.train_multiclass

    results = []
    for r in row_grid:
        idx = stratified_subsample(y, r, seed)
        for m in col_grid:
            Xs = np.ascontiguousarray(X[idx][:, :m])
            ys = y[idx]
            with mac_counter() as counter:
                model = train(Xs, ys, epsilon=epsilon)
            train_times = []
            test_times = []
            for _ in range(repeats):
                t0 = time.perf_counter()
                train(Xs, ys, epsilon=epsilon)
                t1 = time.perf_counter()
                core.predict_batch(model, Xs)
                t2 = time.perf_counter()
                train_times.append(t1 - t0)
                test_times.append(t2 - t1)
            if isinstance(model, core.MulticlassModel):
                peak = len(model.classes) * (m + 1)
            else:
                peak = m + 1
            results.append(
                SweepResult(
                    rows=r,
                    cols=m,
                    train_seconds=statistics.median(train_times),
                    test_seconds=statistics.median(test_times),
                    mac_count=counter.data_pass_macs,
                    peak_model_values=peak,
                )
            )
    return results


def sweep_to_csv(results) -> str:
    lines = [CSV_HEADER]
    for r in results:
        lines.append(
            f"{r.rows},{r.cols},{r.train_seconds:.9g},{r.test_seconds:.9g},{r.mac_count}"
        )
    return "\n".join(lines) + "\n"
