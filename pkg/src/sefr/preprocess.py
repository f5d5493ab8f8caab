"""Feature scaling and byte quantization.

Two steps feed the classifier: min-max scaling onto [0, 1] (fit on
training data, applied to anything later), and optional 8-bit
quantization for byte-oriented targets. Quantized datasets round-trip
through a small binary container so the same bytes can be replayed on
a microcontroller-class implementation.
"""
from __future__ import annotations

import io
import struct
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .exceptions import (
    DimensionMismatch,
    LengthMismatch,
    OutOfRange,
    SchemaError,
    VersionMismatch,
)
from .validation import as_float_matrix, as_label_vector

__all__ = [
    "NormalizationParams",
    "fit_minmax",
    "apply_minmax",
    "MinMaxNormalizer",
    "QuantizedMatrix",
    "quantize_u8",
    "dequantize",
    "write_quantized",
    "read_quantized",
]

_MAGIC = b"SEFRQ1"
# tolerance when checking that input claimed to be in [0, 1] really is;
# absorbs scaling roundoff without letting real violations through
_RANGE_SLACK = 1e-12


@dataclass(frozen=True)
class NormalizationParams:
    """Per-feature minimum and maximum captured from training data."""

    minimum: np.ndarray
    maximum: np.ndarray

    @property
    def n_features(self) -> int:
        return int(self.minimum.shape[0])


def fit_minmax(X) -> NormalizationParams:
    """Column minima and maxima of X. Negative input is fine here; the
    whole point is mapping arbitrary finite ranges onto [0, 1]."""
    X = as_float_matrix(X)
    return NormalizationParams(minimum=X.min(axis=0), maximum=X.max(axis=0))


def apply_minmax(X, params: NormalizationParams) -> np.ndarray:
    """Scale X into [0, 1] using stored ranges.

    Values outside the fitted range clamp to the boundary. A feature that
    was constant at fit time maps to 0.0.
    """
    X = as_float_matrix(X, allow_empty_rows=True)
    if X.shape[1] != params.n_features:
        raise DimensionMismatch(
            f"matrix has {X.shape[1]} features, normalizer expects {params.n_features}"
        )
    span = params.maximum - params.minimum
    out = np.zeros_like(X)
    np.divide(X - params.minimum, span, out=out, where=span != 0.0)
    np.clip(out, 0.0, 1.0, out=out)
    return out


class MinMaxNormalizer(TransformerMixin, BaseEstimator):
    """Estimator-style wrapper around fit_minmax/apply_minmax.

    Keeps the scaling step composable with pipelines while the plain
    functions stay available for the CLI and serialization paths.
    """

    def fit(self, X, y=None):
        self.params_ = fit_minmax(X)
        self.n_features_in_ = self.params_.n_features
        return self

    def transform(self, X):
        return apply_minmax(X, self.params_)


@dataclass(frozen=True)
class QuantizedMatrix:
    """Byte-quantized features plus dense label ids and the class table."""

    values: np.ndarray  # uint8, rows x cols
    label_ids: np.ndarray  # uint8, rows
    classes: list[str]  # ascending; index = label id

    @property
    def rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        return int(self.values.shape[1])


def _round_half_away(x: np.ndarray) -> np.ndarray:
    # x >= 0 here; comparing the fractional part avoids the floor(x + 0.5)
    # trap where adding 0.5 rounds across the next integer
    lower = np.floor(x)
    return lower + (x - lower >= 0.5)


def quantize_u8(X, y) -> QuantizedMatrix:
    """Map [0, 1] features onto 0..255 (round half away from zero) and
    labels onto dense ids in ascending class order."""
    X = as_float_matrix(X)
    y = as_label_vector(y, X.shape[0])
    if np.any(X < -_RANGE_SLACK) or np.any(X > 1.0 + _RANGE_SLACK):
        bad = np.argwhere((X < -_RANGE_SLACK) | (X > 1.0 + _RANGE_SLACK))[0]
        raise OutOfRange(
            f"value at row {bad[0]}, column {bad[1]} is outside [0, 1]; "
            "apply min-max scaling first"
        )
    classes = sorted({_as_str(v) for v in y})  # labels are opaque strings here
    if len(classes) > 256:
        raise OutOfRange(f"{len(classes)} classes exceed the 8-bit label space")
    index = {c: i for i, c in enumerate(classes)}
    label_ids = np.array([index[_as_str(v)] for v in y], dtype=np.uint8)
    clipped = np.clip(X, 0.0, 1.0)
    values = _round_half_away(clipped * 255.0).astype(np.uint8)
    return QuantizedMatrix(values=values, label_ids=label_ids, classes=classes)


def dequantize(q: QuantizedMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Back to floats in [0, 1] (cell / 255) and string labels."""
    X = q.values.astype(np.float64) / 255.0
    y = np.array([q.classes[i] for i in q.label_ids], dtype=object)
    return X, y


def write_quantized(q: QuantizedMatrix, path) -> None:
    """Binary container: magic, u32 rows, u32 cols (little endian),
    u8 class count, length-prefixed UTF-8 class names, row-major data
    bytes, then one label id byte per row."""
    if q.label_ids.shape[0] != q.rows:
        raise LengthMismatch(f"{q.label_ids.shape[0]} labels for {q.rows} rows")
    if len(q.classes) > 255:
        # the header stores the count in one byte
        raise OutOfRange("container format holds at most 255 classes")
    buf = io.BytesIO()
    buf.write(_MAGIC)
    buf.write(struct.pack("<II", q.rows, q.cols))
    buf.write(struct.pack("<B", len(q.classes)))
    for name in q.classes:
        raw = name.encode("utf-8")
        if len(raw) > 255:
            raise OutOfRange(f"class name longer than 255 bytes: {name[:32]!r}...")
        buf.write(struct.pack("<B", len(raw)))
        buf.write(raw)
    buf.write(np.ascontiguousarray(q.values, dtype=np.uint8).tobytes())
    buf.write(q.label_ids.astype(np.uint8).tobytes())
    with open(path, "wb") as fh:
        fh.write(buf.getvalue())


def read_quantized(path) -> QuantizedMatrix:
    with open(path, "rb") as fh:
        data = fh.read()
    view = memoryview(data)
    if len(data) < len(_MAGIC) + 9 or bytes(view[: len(_MAGIC)]) != _MAGIC:
        raise VersionMismatch("not a quantized-matrix file (bad magic)")
    off = len(_MAGIC)
    rows, cols = struct.unpack_from("<II", view, off)
    off += 8
    (n_classes,) = struct.unpack_from("<B", view, off)
    off += 1
    classes = []
    for _ in range(n_classes):
        if off >= len(data):
            raise SchemaError("truncated class table")
        (ln,) = struct.unpack_from("<B", view, off)
        off += 1
        if off + ln > len(data):
            raise SchemaError("truncated class name")
        classes.append(bytes(view[off : off + ln]).decode("utf-8"))
        off += ln
    need = rows * cols + rows
    if len(data) - off != need:
        raise SchemaError(
            f"payload is {len(data) - off} bytes, header implies {need}"
        )
    values = np.frombuffer(view, dtype=np.uint8, count=rows * cols, offset=off)
    off += rows * cols
    label_ids = np.frombuffer(view, dtype=np.uint8, count=rows, offset=off)
    if label_ids.size and classes and int(label_ids.max()) >= len(classes):
        raise SchemaError("label id exceeds class table")
    return QuantizedMatrix(
        values=values.reshape(rows, cols).copy(),
        label_ids=label_ids.copy(),
        classes=classes,
    )


def _as_str(label) -> str:
    if isinstance(label, bytes):
        return label.decode("utf-8")
    return str(label)
