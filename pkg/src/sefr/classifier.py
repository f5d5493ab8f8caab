"""Estimator-style front end over the training core.

SEFRClassifier plays nicely with pipelines, cross_val_score, and clone.
It does not rescale inputs itself; compose it with MinMaxNormalizer (or
any transformer that lands features in a non-negative range).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from . import core
from .exceptions import InvalidValue
from .validation import as_float_matrix, as_label_vector

__all__ = ["SEFRClassifier"]


class SEFRClassifier(ClassifierMixin, BaseEstimator):
    """Linear classifier trained in one pass per statistic.

    Parameters
    ----------
    epsilon : float
        Weight-denominator stabilizer; see train_binary.
    mode : "auto" | "binary" | "multiclass"
        auto picks binary for two classes, one-against-all otherwise.
    positive_label : optional
        Binary only: which label is the positive side (default: greater).

    Attributes
    ----------
    classes_ : ndarray, ascending label order.
    model_ : the underlying BinaryModel or MulticlassModel.
    """

    def __init__(self, epsilon: float = core.DEFAULT_EPSILON, mode: str = "auto",
                 positive_label=None):
        self.epsilon = epsilon
        self.mode = mode
        self.positive_label = positive_label

    def fit(self, X, y):
        X = as_float_matrix(X, require_nonnegative=True)
        y = as_label_vector(y, X.shape[0])
        self.classes_ = np.unique(y)
        mode = self.mode
        if mode == "auto":
            mode = "binary" if self.classes_.shape[0] == 2 else "multiclass"
        if mode == "binary":
            self.model_ = core.train_binary(
                X, y, epsilon=self.epsilon, positive_label=self.positive_label
            )
        elif mode == "multiclass":
            self.model_ = core.train_multiclass(X, y, epsilon=self.epsilon)
        else:
            raise InvalidValue(f"unknown mode {self.mode!r}")
        self.n_features_in_ = X.shape[1]
        return self

    def decision_function(self, X):
        """Binary: 1-D scores, positive favors the positive label.
        Multiclass: (n, c) score matrix where the SMALLEST entry wins
        (unlike the usual argmax convention; see predict)."""
        self._check_fitted()
        X = as_float_matrix(X, require_nonnegative=True, allow_empty_rows=True)
        if isinstance(self.model_, core.MulticlassModel):
            return np.column_stack(
                [core.decision_scores(m, X) for m in self.model_.models]
            )
        return core.decision_scores(self.model_, X)

    def predict(self, X):
        self._check_fitted()
        return core.predict_batch(self.model_, X)

    def _check_fitted(self):
        if not hasattr(self, "model_"):
            raise InvalidValue("this SEFRClassifier instance is not fitted yet")
