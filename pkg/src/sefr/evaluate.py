"""Evaluation: confusion metrics, stratified k-fold CV, and baselines.

The cross-validation harness is the measurement protocol used by the
benchmarks: stratified folds, min-max scaling, percent accuracy and
macro-F1 both per fold and pooled over all held-out predictions.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from . import core
from .exceptions import BadK, EmptyMatrix, InvalidValue, LengthMismatch
from .preprocess import apply_minmax, fit_minmax
from .validation import as_float_matrix, as_label_vector

__all__ = [
    "ConfusionMatrix",
    "confusion",
    "accuracy",
    "macro_f1",
    "stratified_kfold",
    "FoldMetrics",
    "EvalReport",
    "cross_validate",
    "NearestCentroidBaseline",
    "majority_baseline",
]

REPORT_VERSION = "sefr-eval/1"


@dataclass(frozen=True)
class ConfusionMatrix:
    """Row = true class, column = predicted class, ascending class order."""

    classes: list
    counts: np.ndarray  # int64, square

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def confusion(y_true, y_pred) -> ConfusionMatrix:
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    if y_true.shape != y_pred.shape or y_true.ndim != 1:
        raise LengthMismatch(
            f"shape mismatch: {y_true.shape} true vs {y_pred.shape} predicted"
        )
    classes = np.unique(np.concatenate([y_true, y_pred]))
    index = {c: i for i, c in enumerate(classes.tolist())}
    counts = np.zeros((len(index), len(index)), dtype=np.int64)
    for t, p in zip(y_true.tolist(), y_pred.tolist()):
        counts[index[t], index[p]] += 1
    return ConfusionMatrix(classes=list(classes.tolist()), counts=counts)


def accuracy(cm: ConfusionMatrix) -> float:
    """Percent of records on the diagonal."""
    if cm.total == 0:
        raise EmptyMatrix("confusion matrix has no records")
    return 100.0 * float(np.trace(cm.counts)) / cm.total


def macro_f1(cm: ConfusionMatrix) -> float:
    """Unweighted mean of per-class F1, in percent.

    A class with no true and no predicted records contributes F1 = 0.
    """
    if cm.total == 0:
        raise EmptyMatrix("confusion matrix has no records")
    counts = cm.counts.astype(np.float64)
    tp = np.diag(counts)
    predicted = counts.sum(axis=0)
    actual = counts.sum(axis=1)
    precision = np.divide(tp, predicted, out=np.zeros_like(tp), where=predicted > 0)
    recall = np.divide(tp, actual, out=np.zeros_like(tp), where=actual > 0)
    pr = precision + recall
    f1 = np.divide(2 * precision * recall, pr, out=np.zeros_like(tp), where=pr > 0)
    return 100.0 * float(f1.mean())


def stratified_kfold(y, k: int, seed: int = 42) -> list[np.ndarray]:
    """k index arrays with near-balanced class composition.

    Per class, indices are shuffled with the seeded generator and dealt
    round-robin into folds, continuing the deal position across classes so
    fold sizes stay within one record of each other.
    """
    y = np.asarray(y)
    if y.ndim != 1 or y.shape[0] == 0:
        raise EmptyMatrix("need a non-empty 1-D label vector")
    if k < 2:
        raise BadK(f"k must be at least 2, got {k}")
    if k > y.shape[0]:
        raise BadK(f"k={k} exceeds the {y.shape[0]} available records")
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    slot = 0
    for cls in np.unique(y):
        idx = np.flatnonzero(y == cls)
        rng.shuffle(idx)
        for i in idx:
            folds[slot % k].append(int(i))
            slot += 1
    return [np.array(sorted(f), dtype=np.int64) for f in folds]


@dataclass(frozen=True)
class FoldMetrics:
    fold: int
    accuracy: float
    macro_f1: float
    train_seconds: float
    test_seconds: float


@dataclass(frozen=True)
class EvalReport:
    dataset: str
    k: int
    seed: int
    epsilon: float
    mode: str
    accuracy: float  # pooled over all held-out predictions
    macro_f1: float
    folds: list[FoldMetrics] = field(repr=False)
    train_seconds: float = 0.0
    test_seconds: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": REPORT_VERSION,
            "dataset": self.dataset,
            "k": self.k,
            "seed": self.seed,
            "epsilon": self.epsilon,
            "mode": self.mode,
            "accuracy": self.accuracy,
            "macro_f1": self.macro_f1,
            "folds": [
                {
                    "fold": f.fold,
                    "accuracy": f.accuracy,
                    "macro_f1": f.macro_f1,
                    "train_seconds": f.train_seconds,
                    "test_seconds": f.test_seconds,
                }
                for f in self.folds
            ],
            "train_seconds": self.train_seconds,
            "test_seconds": self.test_seconds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _train_for_mode(X, y, epsilon, mode):
    if mode == "binary":
        return core.train_binary(X, y, epsilon=epsilon)
    return core.train_multiclass(X, y, epsilon=epsilon)


def cross_validate(
    X,
    y,
    k: int = 10,
    seed: int = 42,
    epsilon: float = core.DEFAULT_EPSILON,
    mode: str = "auto",
    normalization: str = "full",
    algorithm: str = "sefr",
    n_jobs: int = 1,
    dataset: str = "memory",
) -> EvalReport:
    """Stratified k-fold evaluation.

    normalization="full" fits min-max scaling once on the whole matrix
    (the benchmark protocol); "per-fold" refits on each training split
    and applies it to the held-out fold, which is the leakage-free
    variant. algorithm picks the model under test: "sefr" (default),
    "centroid", or "majority", all through the identical harness.

    Every class needs at least 2 records so each training split sees all
    classes. Parallel n_jobs changes nothing but wall time.
    """
    X = as_float_matrix(X)
    y = as_label_vector(y, X.shape[0])
    n_classes = np.unique(y).shape[0]
    if mode == "auto":
        mode = "binary" if n_classes == 2 else "multiclass"
    elif mode == "binary":
        if n_classes != 2:
            raise InvalidValue(f"binary mode needs 2 classes, found {n_classes}")
    elif mode != "multiclass":
        raise InvalidValue(f"unknown mode {mode!r}")
    if normalization not in ("full", "per-fold"):
        raise InvalidValue(f"unknown normalization {normalization!r}")
    if algorithm not in ("sefr", "centroid", "majority"):
        raise InvalidValue(f"unknown algorithm {algorithm!r}")

    folds = stratified_kfold(y, k, seed)
    if normalization == "full":
        X_scaled = apply_minmax(X, fit_minmax(X))

    def run_fold(fold_id: int):
        test_idx = folds[fold_id]
        train_idx = np.setdiff1d(np.arange(X.shape[0]), test_idx)
        if normalization == "full":
            X_train, X_test = X_scaled[train_idx], X_scaled[test_idx]
        else:
            params = fit_minmax(X[train_idx])
            X_train = apply_minmax(X[train_idx], params)
            X_test = apply_minmax(X[test_idx], params)
        y_train, y_test = y[train_idx], y[test_idx]

        t0 = time.perf_counter()
        if algorithm == "sefr":
            model = _train_for_mode(X_train, y_train, epsilon, mode)
        elif algorithm == "centroid":
            model = NearestCentroidBaseline().fit(X_train, y_train)
        else:
            model = majority_baseline(y_train)
        t1 = time.perf_counter()
        if algorithm == "sefr":
            y_pred = core.predict_batch(model, X_test)
        elif algorithm == "centroid":
            y_pred = model.predict(X_test)
        else:
            y_pred = np.full(y_test.shape[0], model, dtype=object)
        t2 = time.perf_counter()

        cm = confusion(y_test, y_pred)
        return (
            FoldMetrics(
                fold=fold_id,
                accuracy=accuracy(cm),
                macro_f1=macro_f1(cm),
                train_seconds=t1 - t0,
                test_seconds=t2 - t1,
            ),
            y_test,
            y_pred,
        )

    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(run_fold, range(k)))
    else:
        results = [run_fold(i) for i in range(k)]

    fold_metrics = [r[0] for r in results]
    pooled = confusion(
        np.concatenate([r[1] for r in results]),
        np.concatenate([r[2] for r in results]),
    )
    return EvalReport(
        dataset=dataset,
        k=k,
        seed=seed,
        epsilon=float(epsilon),
        mode=mode,
        accuracy=accuracy(pooled),
        macro_f1=macro_f1(pooled),
        folds=fold_metrics,
        train_seconds=sum(f.train_seconds for f in fold_metrics),
        test_seconds=sum(f.test_seconds for f in fold_metrics),
    )


class NearestCentroidBaseline(ClassifierMixin, BaseEstimator):
    """Predicts the class whose feature mean is nearest (Euclidean).

    Sanity floor for the benchmark tables; ties go to the lowest class
    index.
    """

    def fit(self, X, y):
        X = as_float_matrix(X)
        y = as_label_vector(y, X.shape[0])
        self.classes_ = np.unique(y)
        self.centroids_ = np.vstack(
            [X[y == c].mean(axis=0) for c in self.classes_]
        )
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        X = as_float_matrix(X, allow_empty_rows=True)
        d2 = ((X[:, np.newaxis, :] - self.centroids_[np.newaxis, :, :]) ** 2).sum(axis=2)
        return self.classes_[np.argmin(d2, axis=1)]


def majority_baseline(y):
    """Most frequent label; ties resolve to the lowest label."""
    y = np.asarray(y)
    if y.shape[0] == 0:
        raise EmptyMatrix("no labels")
    classes, counts = np.unique(y, return_counts=True)
    winner = classes[int(np.argmax(counts))]
    return winner.item() if isinstance(winner, np.generic) else winner
