import numpy as np
import pytest

from sefr import preprocess
from sefr.exceptions import (
    DimensionMismatch,
    InvalidValue,
    OutOfRange,
    SchemaError,
    VersionMismatch,
)
from sefr.preprocess import (
    MinMaxNormalizer,
    QuantizedMatrix,
    apply_minmax,
    dequantize,
    fit_minmax,
    quantize_u8,
    read_quantized,
    write_quantized,
)


class TestMinMax:
    def test_basic_scaling(self):
        X = [[0.0, 10.0], [5.0, 20.0], [10.0, 30.0]]
        params = fit_minmax(X)
        out = apply_minmax(X, params)
        assert out.min() == 0.0 and out.max() == 1.0
        assert list(out[1]) == [0.5, 0.5]

    def test_negative_input_allowed(self):
        X = [[-2.0], [0.0], [2.0]]
        out = apply_minmax(X, fit_minmax(X))
        assert list(out[:, 0]) == [0.0, 0.5, 1.0]

    def test_constant_feature_maps_to_zero(self):
        X = [[3.0, 1.0], [3.0, 2.0]]
        out = apply_minmax(X, fit_minmax(X))
        assert list(out[:, 0]) == [0.0, 0.0]

    def test_out_of_range_clamps(self):
        params = fit_minmax([[0.0], [10.0]])
        out = apply_minmax([[-5.0], [15.0]], params)
        assert list(out[:, 0]) == [0.0, 1.0]

    def test_width_checked(self):
        params = fit_minmax([[0.0], [1.0]])
        with pytest.raises(DimensionMismatch):
            apply_minmax([[0.0, 1.0]], params)

    def test_nan_rejected(self):
        with pytest.raises(InvalidValue):
            fit_minmax([[float("nan")]])

    def test_estimator_wrapper(self):
        X = np.array([[0.0, 1.0], [4.0, 3.0]])
        tr = MinMaxNormalizer().fit(X)
        out = tr.transform([[2.0, 2.0]])
        assert list(out[0]) == [0.5, 0.5]
        assert tr.n_features_in_ == 2

    def test_idempotent_on_unit_range(self):
        rng = np.random.default_rng(0)
        X = rng.random((20, 4))
        X[0] = 0.0
        X[1] = 1.0
        params = fit_minmax(X)
        once = apply_minmax(X, params)
        twice = apply_minmax(once, fit_minmax(once))
        assert np.array_equal(once, twice)


class TestQuantize:
    def test_pinned_cells(self):
        X = [[0.0, 1.0, 0.5, 0.2]]
        q = quantize_u8(X, ["a"])
        assert list(q.values[0]) == [0, 255, 128, 51]

    def test_round_half_away_from_zero(self):
        # 127.5 rounds up, never to even
        q = quantize_u8([[0.5]], ["a"])
        assert q.values[0, 0] == 128

    def test_label_ids_ascending_classes(self):
        q = quantize_u8([[0.0], [0.0], [0.0]], ["b", "a", "b"])
        assert q.classes == ["a", "b"]
        assert list(q.label_ids) == [1, 0, 1]

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRange):
            quantize_u8([[1.5]], ["a"])
        with pytest.raises(OutOfRange):
            quantize_u8([[-0.2]], ["a"])

    def test_tiny_slack_tolerated(self):
        q = quantize_u8([[1.0 + 1e-13], [-1e-13]], ["a", "a"])
        assert list(q.values[:, 0]) == [255, 0]

    def test_roundtrip_error_bound(self):
        rng = np.random.default_rng(1)
        X = rng.random((50, 8))
        q = quantize_u8(X, ["a"] * 50)
        back, _ = dequantize(q)
        assert np.max(np.abs(back - X)) <= 1.0 / 510.0 + 1e-12

    def test_dequantized_grid_is_exact(self):
        # multiples of 1/255 survive the round trip bit for bit
        X = np.arange(256, dtype=np.float64).reshape(16, 16) / 255.0
        q = quantize_u8(X, ["a"] * 16)
        back, _ = dequantize(q)
        assert np.array_equal(back, X)


class TestContainer:
    def roundtrip(self, q, tmp_path):
        path = tmp_path / "m.sefrq"
        write_quantized(q, path)
        return read_quantized(path), path

    def test_roundtrip(self, tmp_path):
        rng = np.random.default_rng(2)
        X = rng.random((5, 3))
        y = ["red", "green", "red", "blue", "green"]
        q = quantize_u8(X, y)
        q2, _ = self.roundtrip(q, tmp_path)
        assert np.array_equal(q.values, q2.values)
        assert np.array_equal(q.label_ids, q2.label_ids)
        assert q.classes == q2.classes

    def test_layout(self, tmp_path):
        q = QuantizedMatrix(
            values=np.array([[1, 2], [3, 4]], dtype=np.uint8),
            label_ids=np.array([0, 1], dtype=np.uint8),
            classes=["x", "yy"],
        )
        path = tmp_path / "m.sefrq"
        write_quantized(q, path)
        raw = path.read_bytes()
        assert raw.startswith(b"SEFRQ1")
        assert raw[6:10] == (2).to_bytes(4, "little")  # rows
        assert raw[10:14] == (2).to_bytes(4, "little")  # cols
        assert raw[14] == 2  # class count
        assert raw[15:17] == b"\x01x"
        assert raw[17:20] == b"\x02yy"
        assert raw[20:24] == bytes([1, 2, 3, 4])
        assert raw[24:26] == bytes([0, 1])
        assert len(raw) == 26

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "junk.bin"
        path.write_bytes(b"NOTSEFR" + b"\x00" * 16)
        with pytest.raises(VersionMismatch):
            read_quantized(path)

    def test_truncated_payload(self, tmp_path):
        q = quantize_u8([[0.5, 0.5]], ["a"])
        path = tmp_path / "m.sefrq"
        write_quantized(q, path)
        path.write_bytes(path.read_bytes()[:-1])
        with pytest.raises(SchemaError):
            read_quantized(path)

    def test_unicode_class_names(self, tmp_path):
        q = quantize_u8([[0.0], [1.0]], ["αβ", "γ"])
        q2, _ = self.roundtrip(q, tmp_path)
        assert q2.classes == ["αβ", "γ"]
