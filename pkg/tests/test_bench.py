import numpy as np
import pytest

from sefr import bench, core
from sefr.bench import CSV_HEADER, stratified_subsample, sweep, sweep_to_csv
from sefr.data import gen_blobs
from sefr.exceptions import GridOutOfBounds, InvalidValue
from sefr.instrument import mac_counter


def blobs2(n=60, dims=6, seed=4):
    return gen_blobs(n, dims, [[0.2] * dims, [0.8] * dims], 0.15, seed=seed)


class TestMacCounting:
    def test_train_binary_full_count(self):
        X, y = blobs2(n=25, dims=6)
        r, m = X.shape
        with mac_counter() as counter:
            core.train_binary(X, y)
        assert counter.total == 2 * r * m + m + 2 * r + 2
        assert counter.data_pass_macs == 2 * r * m

    def test_train_multiclass_scales_by_class_count(self):
        X, y = gen_blobs(10, 4, [[0.1] * 4, [0.5] * 4, [0.9] * 4], 0.05, seed=6)
        r, m = X.shape
        with mac_counter() as counter:
            core.train_multiclass(X, y)
        assert counter.total == 3 * (2 * r * m + m + 2 * r + 2)

    def test_decision_score_counts_exactly_m(self):
        X, y = blobs2(n=10, dims=7)
        model = core.train_binary(X, y)
        with mac_counter() as counter:
            core.decision_score(model, X[0])
        assert counter.total == 7
        assert counter.counts == {"predict": 7}

    def test_predict_macs_independent_of_training_rows(self):
        counts = []
        for n in (10, 80):
            X, y = blobs2(n=n, dims=5)
            model = core.train_binary(X, y)
            with mac_counter() as counter:
                core.decision_score(model, X[0])
            counts.append(counter.total)
        assert counts[0] == counts[1] == 5

    def test_no_counter_no_effect(self):
        X, y = blobs2(n=10)
        with mac_counter() as outer:
            core.train_binary(X, y)
            baseline = outer.total
        # training outside any counter context leaves no trace anywhere
        core.train_binary(X, y)
        assert outer.total == baseline

    def test_nested_counters_are_independent(self):
        X, y = blobs2(n=10, dims=3)
        with mac_counter() as outer:
            core.decision_score(core.train_binary(X, y), X[0])
            with mac_counter() as inner:
                core.decision_score(core.train_binary(X, y), X[0])
        assert inner.predict_macs == 3
        assert outer.predict_macs == 3  # inner activity not double-booked


class TestSubsample:
    def test_proportions_tracked(self):
        y = np.array(["a"] * 75 + ["b"] * 25)
        idx = stratified_subsample(y, 20, seed=1)
        assert len(idx) == 20
        assert int(np.sum(y[idx] == "a")) == 15
        assert int(np.sum(y[idx] == "b")) == 5

    def test_every_class_present(self):
        y = np.array(["a"] * 97 + ["b"] * 2 + ["c"] * 1)
        idx = stratified_subsample(y, 5, seed=1)
        assert set(y[idx]) == {"a", "b", "c"}

    def test_deterministic(self):
        y = np.array(["a", "b"] * 30)
        assert np.array_equal(
            stratified_subsample(y, 10, seed=3), stratified_subsample(y, 10, seed=3)
        )

    def test_bounds(self):
        y = np.array(["a", "b"] * 5)
        with pytest.raises(GridOutOfBounds):
            stratified_subsample(y, 11)
        with pytest.raises(GridOutOfBounds):
            stratified_subsample(y, 1)  # cannot cover both classes


class TestSweep:
    def test_grid_row_major_and_macs(self):
        X, y = blobs2(n=40, dims=8)
        results = sweep(X, y, [20, 40], [4, 8], repeats=1)
        assert [(r.rows, r.cols) for r in results] == [
            (20, 4), (20, 8), (40, 4), (40, 8),
        ]
        for r in results:
            assert r.mac_count == 2 * r.rows * r.cols
            assert r.train_seconds >= 0 and r.test_seconds >= 0
            assert r.peak_model_values == r.cols + 1

    def test_multiclass_peak_and_macs(self):
        X, y = gen_blobs(20, 4, [[0.1] * 4, [0.5] * 4, [0.9] * 4], 0.05, seed=2)
        results = sweep(X, y, [30], [4], repeats=1, mode="multiclass")
        assert results[0].mac_count == 3 * 2 * 30 * 4
        assert results[0].peak_model_values == 3 * (4 + 1)

    def test_grid_bounds(self):
        X, y = blobs2(n=10, dims=3)
        with pytest.raises(GridOutOfBounds):
            sweep(X, y, [100], [2], repeats=1)
        with pytest.raises(GridOutOfBounds):
            sweep(X, y, [10], [99], repeats=1)
        with pytest.raises(GridOutOfBounds):
            sweep(X, y, [1], [2], repeats=1)  # one row cannot hold two classes
        with pytest.raises(GridOutOfBounds):
            sweep(X, y, [], [2], repeats=1)

    def test_repeats_validated(self):
        X, y = blobs2(n=10)
        with pytest.raises(InvalidValue):
            sweep(X, y, [10], [2], repeats=0)

    def test_csv_shape(self):
        X, y = blobs2(n=20, dims=4)
        text = sweep_to_csv(sweep(X, y, [10, 20], [2, 4], repeats=1))
        lines = text.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert CSV_HEADER == "rows,cols,train_seconds,test_seconds,mac_count"
        assert len(lines) == 5
        first = lines[1].split(",")
        assert first[0] == "10" and first[1] == "2"
        assert first[4] == str(2 * 10 * 2)
