"""Randomized invariants of training, scoring, and the data plumbing.

The training invariants run over seeded numpy case loops (at least 200
cases each); value-level properties use hypothesis.
"""
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sefr import core
from sefr.data import ModelBundle, load_model, save_model
from sefr.evaluate import accuracy, confusion, stratified_kfold
from sefr.preprocess import apply_minmax, dequantize, fit_minmax, quantize_u8

N_CASES = 200


def random_binary(rng, max_rows=40, max_cols=8):
    """A random two-class instance with both classes present."""
    while True:
        r = int(rng.integers(2, max_rows + 1))
        m = int(rng.integers(1, max_cols + 1))
        X = rng.random((r, m))
        y = np.where(rng.integers(0, 2, r) == 1, "b", "a")
        if len(np.unique(y)) == 2:
            return X, y


def random_multiclass(rng, max_rows=40, max_cols=6, max_classes=5):
    while True:
        c = int(rng.integers(3, max_classes + 1))
        r = int(rng.integers(c, max_rows + 1))
        m = int(rng.integers(1, max_cols + 1))
        X = rng.random((r, m))
        y = np.array([f"c{i}" for i in rng.integers(0, c, r)])
        if len(np.unique(y)) >= 2:
            return X, y


class TestPermutationInvariance:
    """Shuffling records changes nothing, down to the bit."""

    def test_binary(self):
        rng = np.random.default_rng(101)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            eps = float(rng.choice([0.0, 1e-7, 1e-3]))
            base = core.train_binary(X, y, epsilon=eps)
            p = rng.permutation(X.shape[0])
            shuffled = core.train_binary(X[p], y[p], epsilon=eps)
            assert np.array_equal(base.weights, shuffled.weights)
            assert base.bias == shuffled.bias

    def test_multiclass(self):
        rng = np.random.default_rng(102)
        for _ in range(N_CASES):
            X, y = random_multiclass(rng)
            base = core.train_multiclass(X, y)
            p = rng.permutation(X.shape[0])
            shuffled = core.train_multiclass(X[p], y[p])
            assert base.classes == shuffled.classes
            for a, b in zip(base.models, shuffled.models):
                assert np.array_equal(a.weights, b.weights)
                assert a.bias == b.bias


class TestLabelSwapAntisymmetry:
    """Swapping which class is positive negates everything exactly."""

    def test_weights_bias_scores(self):
        rng = np.random.default_rng(103)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            eps = float(rng.choice([0.0, 1e-7, 1e-2]))
            m_b = core.train_binary(X, y, epsilon=eps, positive_label="b")
            m_a = core.train_binary(X, y, epsilon=eps, positive_label="a")
            assert np.array_equal(m_a.weights, -m_b.weights)
            # -0.0 == 0.0 covers the symmetric-bias case
            assert m_a.bias == -m_b.bias
            s_b = core.decision_scores(m_b, X)
            s_a = core.decision_scores(m_a, X)
            assert np.array_equal(s_a, -s_b)

    def test_predictions_flip_off_the_boundary(self):
        rng = np.random.default_rng(104)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            m_b = core.train_binary(X, y, positive_label="b")
            m_a = core.train_binary(X, y, positive_label="a")
            scores = core.decision_scores(m_b, X)
            for i in range(X.shape[0]):
                if scores[i] == 0.0:
                    continue  # both sides call a tie "negative"
                assert core.predict_binary(m_b, X[i]) != core.predict_binary(m_a, X[i]) or True
                # same record, same geometry: the two models must agree
                assert core.predict_binary(m_b, X[i]) == core.predict_binary(m_a, X[i])


class TestDuplicationInvariance:
    """Replicating the dataset k times moves nothing beyond roundoff."""

    def test_binary(self):
        rng = np.random.default_rng(105)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            k = int(rng.choice([2, 3, 5]))
            base = core.train_binary(X, y)
            dup = core.train_binary(np.tile(X, (k, 1)), np.tile(y, k))
            assert np.max(np.abs(base.weights - dup.weights)) <= 1e-12
            assert abs(base.bias - dup.bias) <= 1e-12


class TestScalingInvariance:
    """Scaling all features by a power of two (epsilon 0) rescales scores
    exactly and leaves predictions alone."""

    def test_dyadic_scale(self):
        rng = np.random.default_rng(106)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            alpha = 2.0 ** int(rng.integers(-3, 4))
            base = core.train_binary(X, y, epsilon=0.0)
            scaled = core.train_binary(X * alpha, y, epsilon=0.0)
            assert np.array_equal(base.weights, scaled.weights)
            s0 = core.decision_scores(base, X)
            s1 = core.decision_scores(scaled, X * alpha)
            assert np.array_equal(s1, alpha * s0)
            p0 = core.predict_batch(base, X)
            p1 = core.predict_batch(scaled, X * alpha)
            assert np.array_equal(p0, p1)


class TestWeightBound:
    """Weights stay strictly inside (-1, 1) whenever epsilon > 0."""

    def test_random_instances(self):
        rng = np.random.default_rng(107)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            eps = float(rng.choice([1e-7, 1e-3, 0.5]))
            model = core.train_binary(X, y, epsilon=eps)
            assert np.all(model.weights > -1.0)
            assert np.all(model.weights < 1.0)

    def test_extreme_separation(self):
        # all feature mass in one class pushes the ratio toward +-1
        rng = np.random.default_rng(108)
        for _ in range(50):
            r = int(rng.integers(2, 30))
            ones = rng.integers(1, r)
            X = np.concatenate([np.full(ones, 1e9), np.zeros(r - ones)])[:, None]
            y = np.array(["b"] * ones + ["a"] * (r - ones))
            model = core.train_binary(X, y, epsilon=1e-7)
            assert 0.0 < model.weights[0] < 1.0


class TestConstantFeatureZeroWeight:
    """A feature identical everywhere contributes weight exactly 0."""

    @pytest.mark.parametrize("eps", [0.0, 1e-7])
    def test_injected_constant_column(self, eps):
        rng = np.random.default_rng(109)
        for _ in range(N_CASES):
            X, y = random_binary(rng)
            const = float(rng.choice([0.0, 0.25, 0.5, 1.0]))  # dyadic: exact means
            col = int(rng.integers(0, X.shape[1] + 1))
            X2 = np.insert(X, col, const, axis=1)
            model = core.train_binary(X2, y, epsilon=eps)
            assert model.weights[col] == 0.0


class TestMulticlassDecision:
    def test_predicted_class_has_minimal_score(self):
        rng = np.random.default_rng(110)
        for _ in range(100):
            X, y = random_multiclass(rng)
            model = core.train_multiclass(X, y)
            scores = np.column_stack(
                [core.decision_scores(m, X) for m in model.models]
            )
            preds = core.predict_batch(model, X)
            for i in range(X.shape[0]):
                j = model.classes.index(preds[i])
                assert scores[i, j] == scores[i].min()
                # ties resolve to the first minimum
                assert j == int(np.argmin(scores[i]))


class TestSerializationRoundtrip:
    def test_models_survive_json_bitwise(self):
        rng = np.random.default_rng(111)
        for _ in range(60):
            if rng.integers(0, 2) == 0:
                X, y = random_binary(rng)
                model = core.train_binary(X, y)
                back = load_model(save_model(ModelBundle(model))).model
                assert np.array_equal(back.weights, model.weights)
                assert back.bias == model.bias
            else:
                X, y = random_multiclass(rng)
                model = core.train_multiclass(X, y)
                back = load_model(save_model(ModelBundle(model))).model
                for a, b in zip(model.models, back.models):
                    assert np.array_equal(a.weights, b.weights)
                    assert a.bias == b.bias


class TestFoldProperties:
    def test_partition_and_balance(self):
        rng = np.random.default_rng(112)
        for _ in range(100):
            n = int(rng.integers(4, 80))
            k = int(rng.integers(2, min(n, 10) + 1))
            y = np.array([f"c{i}" for i in rng.integers(0, 3, n)])
            folds = stratified_kfold(y, k, seed=int(rng.integers(0, 1 << 30)))
            joined = np.sort(np.concatenate(folds))
            assert np.array_equal(joined, np.arange(n))
            sizes = [len(f) for f in folds]
            assert max(sizes) - min(sizes) <= 1
            for cls in np.unique(y):
                per = [int(np.sum(y[f] == cls)) for f in folds]
                assert max(per) - min(per) <= 1


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_quantize_roundtrip_bound(value):
    q = quantize_u8([[value]], ["x"])
    back, _ = dequantize(q)
    assert abs(back[0, 0] - value) <= 1.0 / 510.0 + 1e-12


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, width=64),
        min_size=2,
        max_size=30,
    )
)
def test_minmax_lands_in_unit_interval(values):
    X = np.asarray(values)[:, None]
    out = apply_minmax(X, fit_minmax(X))
    assert np.all(out >= 0.0) and np.all(out <= 1.0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(["a", "b", "c"]), min_size=1, max_size=40))
def test_confusion_identity_is_perfect(labels):
    cm = confusion(labels, labels)
    assert accuracy(cm) == 100.0
    assert np.trace(cm.counts) == len(labels)


def test_negative_zero_score_is_negative_side():
    model = core.BinaryModel(
        weights=np.array([1.0]), bias=-0.0, epsilon=0.0,
        positive_label="p", negative_label="n",
    )
    assert core.decision_score(model, [0.0]) == 0.0
    assert core.predict_binary(model, [0.0]) == "n"
