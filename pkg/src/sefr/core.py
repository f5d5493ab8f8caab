"""Training and scoring for a linear similarity classifier.

The model is a single hyperplane per binary problem. Training makes two
passes over the data: one to take per-class feature means (which give the
weights), one to score every record with those weights (which gives the
bias). Multiclass works one-against-all with the *target* class on the
negative side of each hyperplane; the predicted class is the one whose
score is smallest.

Reduction order policy
----------------------
Floating-point addition is not associative, so every data reduction here
fixes a canonical order and accumulates strictly left to right (no pairwise
or compensated summation):

* column sums over the (non-negative) training matrix sort each column's
  values ascending;
* sums of signed record scores accumulate the positive values ascending
  and the negative values by magnitude ascending, then take one final
  difference, which makes the result exactly antisymmetric under negation;
* per-record dot products accumulate in feature order.

Sorting the addends makes results independent of record order down to the
bit, and the sign-split keeps relabeling the two classes an exact
negation of weights, bias, and scores.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .exceptions import DimensionMismatch, InvalidValue, MissingClass
from .instrument import add_macs
from .validation import (
    as_float_matrix,
    as_label_vector,
    as_record,
    check_epsilon,
)

__all__ = [
    "ClassMeans",
    "ScoreStats",
    "BinaryModel",
    "MulticlassModel",
    "class_means",
    "train_binary",
    "train_multiclass",
    "decision_score",
    "decision_scores",
    "score_stats",
    "predict_binary",
    "predict_multiclass",
    "predict_batch",
    "DEFAULT_EPSILON",
]

DEFAULT_EPSILON = 1e-7

# Open-interval guard for the weight bound |w| < 1. With epsilon > 0 the
# quotient is analytically inside (-1, 1) but a final rounding could land
# on the boundary; the clamp nudges such a result one ulp inward.
_W_HI = np.nextafter(1.0, 0.0)
_W_LO = np.nextafter(-1.0, 0.0)


@dataclass(frozen=True)
class ClassMeans:
    """Per-feature means of each class plus the class sizes."""

    mu_pos: np.ndarray
    mu_neg: np.ndarray
    n_pos: int
    n_neg: int


@dataclass(frozen=True)
class ScoreStats:
    """Mean weighted score (no bias) of each class's records."""

    tau_pos: float
    tau_neg: float


@dataclass(frozen=True)
class BinaryModel:
    """A trained hyperplane: weights, bias, and the label assignment.

    positive_label is None for one-against-all sub-models with more than
    one class on the positive side.
    """

    weights: np.ndarray
    bias: float
    epsilon: float
    positive_label: Any
    negative_label: Any

    @property
    def n_features(self) -> int:
        return int(self.weights.shape[0])


@dataclass(frozen=True)
class MulticlassModel:
    """One hyperplane per class; model i has class i on the negative side."""

    classes: list
    models: list[BinaryModel] = field(repr=False)

    @property
    def n_features(self) -> int:
        return self.models[0].n_features

    @property
    def n_classes(self) -> int:
        return len(self.classes)


def _ordered_column_sums(block: np.ndarray) -> np.ndarray:
    # non-negative entries only: ascending sort per column, sequential sum
    if block.shape[0] == 0:
        return np.zeros(block.shape[1])
    return np.cumsum(np.sort(block, axis=0), axis=0)[-1]


def _ordered_sum(values: np.ndarray) -> float:
    # sign-split canonical sum; exact under permutation and negation
    pos = np.sort(values[values > 0.0])
    neg = np.sort(-values[values < 0.0])
    p = float(np.cumsum(pos)[-1]) if pos.size else 0.0
    n = float(np.cumsum(neg)[-1]) if neg.size else 0.0
    return p - n


def _row_scores(X: np.ndarray, weights: np.ndarray) -> np.ndarray:
    # one dot product per record, accumulated in feature order
    return np.cumsum(X * weights, axis=1)[:, -1]


def _split_by_label(y: np.ndarray, positive_label):
    """Return (positive mask, positive label, negative label)."""
    labels = np.unique(y)
    if labels.shape[0] < 2:
        only = labels[0] if labels.shape[0] else "<none>"
        raise MissingClass(f"need records from two classes, found only {only!r}")
    if labels.shape[0] > 2:
        raise InvalidValue(
            f"binary training got {labels.shape[0]} distinct labels; "
            "use train_multiclass"
        )
    if positive_label is None:
        positive_label = labels[1]  # greater of the two
    elif positive_label not in labels:
        raise MissingClass(f"positive label {positive_label!r} not present in y")
    mask = y == positive_label
    negative_label = labels[0] if labels[1] == positive_label else labels[1]
    return mask, positive_label, negative_label


def _means_for_mask(X: np.ndarray, pos_mask: np.ndarray) -> ClassMeans:
    n_pos = int(np.count_nonzero(pos_mask))
    n_neg = X.shape[0] - n_pos
    mu_pos = _ordered_column_sums(X[pos_mask]) / n_pos
    mu_neg = _ordered_column_sums(X[~pos_mask]) / n_neg
    return ClassMeans(mu_pos=mu_pos, mu_neg=mu_neg, n_pos=n_pos, n_neg=n_neg)


def class_means(X, y, positive_label=None) -> ClassMeans:
    """Per-class feature means in a single pass over X.

    Requires non-negative, finite features and records from both classes.
    """
    X = as_float_matrix(X, require_nonnegative=True)
    y = as_label_vector(y, X.shape[0])
    pos_mask, _, _ = _split_by_label(y, positive_label)
    add_macs("means_pass", X.shape[0] * X.shape[1])
    return _means_for_mask(X, pos_mask)


def _weights_from_means(means: ClassMeans, epsilon: float) -> np.ndarray:
    num = means.mu_pos - means.mu_neg
    den = means.mu_pos + means.mu_neg + epsilon
    w = np.zeros_like(num)
    # den == 0 only when both means are 0 (and epsilon is 0): the feature
    # carries no signal, so its weight is exactly 0
    np.divide(num, den, out=w, where=den != 0.0)
    if epsilon > 0.0:
        np.clip(w, _W_LO, _W_HI, out=w)
    return w


def _bias_from_scores(e: np.ndarray, pos_mask: np.ndarray, n_pos: int, n_neg: int):
    tau_pos = _ordered_sum(e[pos_mask]) / n_pos
    tau_neg = _ordered_sum(e[~pos_mask]) / n_neg
    bias = -(tau_pos * n_neg + tau_neg * n_pos) / (n_neg + n_pos)
    return bias, ScoreStats(tau_pos=tau_pos, tau_neg=tau_neg)


def _fit_mask(X: np.ndarray, pos_mask: np.ndarray, epsilon: float):
    """Both training passes for one hyperplane. Returns (weights, bias)."""
    rows, cols = X.shape
    means = _means_for_mask(X, pos_mask)
    add_macs("means_pass", rows * cols)
    weights = _weights_from_means(means, epsilon)
    add_macs("weights", cols)
    e = _row_scores(X, weights)
    add_macs("scores_pass", rows * cols)
    bias, _ = _bias_from_scores(e, pos_mask, means.n_pos, means.n_neg)
    add_macs("taus", 2 * rows)
    add_macs("bias", 2)
    return weights, float(bias)


def train_binary(X, y, epsilon: float = DEFAULT_EPSILON, positive_label=None) -> BinaryModel:
    """Fit one hyperplane separating the two classes in y.

    Parameters
    ----------
    X : array-like of shape (rows, cols)
        Non-negative, finite feature values (normalize first).
    y : array-like of shape (rows,)
        Exactly two distinct labels, each present at least once.
    epsilon : float
        Stabilizer added to the weight denominator. 0 is allowed and keeps
        clean fixtures bit-exact; the default guards real data against
        near-zero denominators.
    positive_label : optional
        Which label sits on the positive side. Default: the greater label.
    """
    X = as_float_matrix(X, require_nonnegative=True)
    y = as_label_vector(y, X.shape[0])
    epsilon = check_epsilon(epsilon)
    pos_mask, pos_label, neg_label = _split_by_label(y, positive_label)
    weights, bias = _fit_mask(X, pos_mask, epsilon)
    return BinaryModel(
        weights=weights,
        bias=bias,
        epsilon=epsilon,
        positive_label=_plain(pos_label),
        negative_label=_plain(neg_label),
    )


def train_multiclass(X, y, epsilon: float = DEFAULT_EPSILON) -> MulticlassModel:
    """Fit one hyperplane per class, target class on the negative side."""
    X = as_float_matrix(X, require_nonnegative=True)
    y = as_label_vector(y, X.shape[0])
    epsilon = check_epsilon(epsilon)
    classes = np.unique(y)
    if classes.shape[0] < 2:
        raise MissingClass("multiclass training needs at least two classes")
    models = []
    for cls in classes:
        pos_mask = y != cls  # everything except the target class
        weights, bias = _fit_mask(X, pos_mask, epsilon)
        if classes.shape[0] == 2:
            # with two classes "all others" is a single concrete label
            other = classes[1] if cls == classes[0] else classes[0]
            pos_label = _plain(other)
        else:
            pos_label = None
        models.append(
            BinaryModel(
                weights=weights,
                bias=bias,
                epsilon=epsilon,
                positive_label=pos_label,
                negative_label=_plain(cls),
            )
        )
    return MulticlassModel(classes=[_plain(c) for c in classes], models=models)


def score_stats(model: BinaryModel, X, y) -> ScoreStats:
    """Mean weighted score of each class's records under an existing model."""
    X = as_float_matrix(X, require_nonnegative=True)
    y = as_label_vector(y, X.shape[0])
    pos_mask = y == model.positive_label
    n_pos = int(np.count_nonzero(pos_mask))
    n_neg = X.shape[0] - n_pos
    if n_pos == 0 or n_neg == 0:
        raise MissingClass("score_stats needs records from both classes")
    e = _row_scores(X, model.weights)
    _, stats = _bias_from_scores(e, pos_mask, n_pos, n_neg)
    return stats


def decision_score(model: BinaryModel, x) -> float:
    """Signed distance proxy w.x + b for a single record."""
    x = as_record(x, model.n_features)
    add_macs("predict", model.n_features)
    return float(_row_scores(x[np.newaxis, :], model.weights)[0] + model.bias)


def decision_scores(model: BinaryModel, X) -> np.ndarray:
    """Vector of w.x + b over a batch of records."""
    X = as_float_matrix(X, require_nonnegative=True, allow_empty_rows=True)
    if X.shape[1] != model.n_features:
        raise DimensionMismatch(
            f"matrix has {X.shape[1]} features, model expects {model.n_features}"
        )
    add_macs("predict", X.shape[0] * model.n_features)
    if X.shape[0] == 0:
        return np.zeros(0)
    return _row_scores(X, model.weights) + model.bias


def predict_binary(model: BinaryModel, x):
    """Label for one record: score <= 0 picks the negative side."""
    return model.negative_label if decision_score(model, x) <= 0.0 else model.positive_label


def predict_multiclass(model: MulticlassModel, x):
    """Label for one record: the class whose hyperplane scores lowest.

    Ties resolve to the lowest class index, i.e. the first minimum.
    """
    x = as_record(x, model.n_features)
    row = x[np.newaxis, :]
    scores = np.empty(model.n_classes)
    for i, sub in enumerate(model.models):
        add_macs("predict", sub.n_features)
        scores[i] = _row_scores(row, sub.weights)[0] + sub.bias
    return model.classes[int(np.argmin(scores))]


def predict_batch(model, X) -> np.ndarray:
    """Labels for many records at once. Accepts either model kind."""
    if isinstance(model, MulticlassModel):
        scores = np.column_stack([decision_scores(m, X) for m in model.models])
        picks = np.argmin(scores, axis=1)
        return np.asarray(model.classes, dtype=object)[picks]
    scores = decision_scores(model, X)
    pair = np.asarray([model.negative_label, model.positive_label], dtype=object)
    return pair[(scores > 0.0).astype(np.intp)]


def _plain(label):
    """Unwrap numpy scalar labels so models carry plain Python values."""
    return label.item() if isinstance(label, np.generic) else label
