"""Embedded-target export: model-as-data C source plus golden fixtures.

The exported file holds only static const arrays (no code), sized for
flash-resident use. Inputs on the target are raw bytes b scaled as
b / 255, so the model must have been trained on features already in
[0, 1] (e.g. a dequantized byte matrix). Golden fixtures pair byte
inputs with the class index the double-precision path predicts, keeping
only records whose score margin is wide enough that a float32
re-implementation cannot flip the label.
"""
from __future__ import annotations

import numpy as np

from . import core
from .core import BinaryModel, MulticlassModel
from .data import ModelBundle
from .exceptions import InvalidValue, ModelTooLarge
from .validation import as_float_matrix

__all__ = [
    "DEFAULT_FLASH_BUDGET",
    "DEFAULT_MARGIN",
    "flash_footprint",
    "render_c_model",
    "make_golden",
    "render_golden",
    "parse_golden",
]

DEFAULT_FLASH_BUDGET = 32768  # bytes
DEFAULT_MARGIN = 1e-4
GOLDEN_MAGIC = "SEFR-GOLDEN 1"


def _hyperplanes(model) -> tuple[list, np.ndarray, np.ndarray]:
    """(class table, weight matrix, bias vector) in prediction order.

    Binary models export one score row; index 0 is the negative label
    (score <= 0), index 1 the positive. Multiclass exports one row per
    class; the predicted index is the argmin.
    """
    if isinstance(model, MulticlassModel):
        classes = [str(c) for c in model.classes]
        W = np.vstack([m.weights for m in model.models])
        b = np.array([m.bias for m in model.models])
    elif isinstance(model, BinaryModel):
        classes = [str(model.negative_label), str(model.positive_label)]
        W = model.weights[np.newaxis, :]
        b = np.array([model.bias])
    else:
        raise InvalidValue(f"cannot export {type(model).__name__}")
    return classes, W, b


def flash_footprint(model) -> int:
    """Bytes of flash the exported arrays occupy (float32 weights and
    biases, NUL-terminated class strings, two u16 counts)."""
    classes, W, b = _hyperplanes(model)
    strings = sum(len(c.encode("utf-8")) + 1 for c in classes)
    return 4 * W.size + 4 * b.size + strings + 4


def _check_bundle(bundle: ModelBundle):
    norm = bundle.normalization
    if norm is not None and not (
        np.all(norm.minimum == 0.0) and np.all(norm.maximum == 1.0)
    ):
        raise InvalidValue(
            "model carries a non-trivial normalization; the byte target "
            "feeds raw b/255 inputs, so train on [0, 1] features "
            "(e.g. a dequantized byte matrix) before exporting"
        )
    return bundle.model


def render_c_model(bundle: ModelBundle, flash_budget: int = DEFAULT_FLASH_BUDGET) -> str:
    """C source with the model as static data. Raises ModelTooLarge when
    the arrays would not fit the flash budget."""
    model = _check_bundle(bundle)
    footprint = flash_footprint(model)
    if footprint > flash_budget:
        raise ModelTooLarge(
            f"exported arrays need {footprint} bytes, budget is {flash_budget}"
        )
    classes, W, b = _hyperplanes(model)
    scores, features = W.shape

    def f32(v: float) -> str:
        return f"{float(np.float32(v)):.9g}f"

    lines = [
        "/* Linear classifier model data. Generated file, do not edit. */",
        "#ifndef SEFR_MODEL_DATA_H",
        "#define SEFR_MODEL_DATA_H",
        "",
        f"#define SEFR_FEATURE_COUNT {features}",
        f"#define SEFR_CLASS_COUNT {len(classes)}",
        f"#define SEFR_SCORE_COUNT {scores}",
        "",
        "/* Input: SEFR_FEATURE_COUNT bytes, each scaled by (1.0f / 255.0f).",
        " * SEFR_SCORE_COUNT == 1: score = dot(w[0], x) + bias[0];",
        " *   predicted index = score > 0 ? 1 : 0.",
        " * Otherwise: one score per class; predicted index = argmin,",
        " *   first minimum on ties. Index into sefr_classes. */",
        "",
        "static const char *const sefr_classes[SEFR_CLASS_COUNT] = {",
    ]
    lines.extend(f'    "{_escape(c)}",' for c in classes)
    lines.append("};")
    lines.append("")
    lines.append(
        "static const float sefr_weights[SEFR_SCORE_COUNT][SEFR_FEATURE_COUNT] = {"
    )
    for row in W:
        body = ", ".join(f32(v) for v in row)
        lines.append(f"    {{ {body} }},")
    lines.append("};")
    lines.append("")
    lines.append("static const float sefr_biases[SEFR_SCORE_COUNT] = {")
    lines.append("    " + ", ".join(f32(v) for v in b) + ",")
    lines.append("};")
    lines.append("")
    lines.append("#endif /* SEFR_MODEL_DATA_H */")
    return "\n".join(lines) + "\n"


def _scores_for_bytes(model, raw: np.ndarray) -> np.ndarray:
    """Double-precision scores for byte rows, shape (rows, score_count)."""
    X = raw.astype(np.float64) / 255.0
    if isinstance(model, MulticlassModel):
        return np.column_stack([core.decision_scores(m, X) for m in model.models])
    return core.decision_scores(model, X)[:, np.newaxis]


def _margins(model, scores: np.ndarray) -> np.ndarray:
    if isinstance(model, MulticlassModel):
        part = np.partition(scores, 1, axis=1)
        return part[:, 1] - part[:, 0]  # gap between best and runner-up
    return np.abs(scores[:, 0])


def _expected_index(model, scores: np.ndarray) -> np.ndarray:
    if isinstance(model, MulticlassModel):
        return np.argmin(scores, axis=1).astype(np.uint8)
    return (scores[:, 0] > 0.0).astype(np.uint8)


def make_golden(
    bundle: ModelBundle,
    count: int = 512,
    seed: int = 42,
    margin: float = DEFAULT_MARGIN,
    source: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Byte inputs plus expected class indices for parity testing.

    Inputs come from source rows (a uint8 matrix, e.g. a quantized
    dataset) when given, otherwise from seeded uniform bytes. Rows whose
    score margin is below the threshold are discarded so float32
    evaluation cannot disagree on the label.
    """
    model = _check_bundle(bundle)
    features = model.n_features
    if count < 1:
        raise InvalidValue("count must be at least 1")
    rng = np.random.default_rng(seed)
    kept_inputs = []
    kept_expected = []
    have = 0

    def consume(raw: np.ndarray):
        nonlocal have
        scores = _scores_for_bytes(model, raw)
        keep = _margins(model, scores) > margin
        if not np.any(keep):
            return
        raw = raw[keep]
        idx = _expected_index(model, scores[keep])
        kept_inputs.append(raw[: count - have])
        kept_expected.append(idx[: count - have])
        have += kept_inputs[-1].shape[0]

    if source is not None:
        source = np.asarray(source)
        if source.ndim != 2 or source.shape[1] != features:
            raise InvalidValue(
                f"source must be rows x {features} bytes, got {source.shape}"
            )
        if source.dtype != np.uint8:
            raise InvalidValue("source must be uint8")
        consume(source)
        if have < count:
            raise InvalidValue(
                f"only {have} of {source.shape[0]} source rows clear the "
                f"{margin} margin; need {count}"
            )
    else:
        for _ in range(200):
            if have >= count:
                break
            consume(rng.integers(0, 256, size=(max(count, 64), features), dtype=np.uint8))
        if have < count:
            raise InvalidValue(
                f"could not find {count} byte vectors clearing the {margin} "
                "margin; the model scores too close to its boundaries"
            )
    return np.vstack(kept_inputs), np.concatenate(kept_expected)


def render_golden(inputs: np.ndarray, expected: np.ndarray) -> str:
    """Plain text: header line, then one record per line, space separated
    feature bytes with the expected class index last."""
    rows, features = inputs.shape
    lines = [f"{GOLDEN_MAGIC} {rows} {features}"]
    for row, idx in zip(inputs, expected):
        lines.append(" ".join(str(int(v)) for v in row) + f" {int(idx)}")
    return "\n".join(lines) + "\n"


def parse_golden(text: str) -> tuple[np.ndarray, np.ndarray]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(GOLDEN_MAGIC + " "):
        raise InvalidValue("not a golden fixture file")
    header = lines[0].split()
    if len(header) != 4:
        raise InvalidValue(f"bad golden header: {lines[0]!r}")
    rows, features = int(header[2]), int(header[3])
    if len(lines) - 1 != rows:
        raise InvalidValue(f"header says {rows} records, file has {len(lines) - 1}")
    inputs = np.zeros((rows, features), dtype=np.uint8)
    expected = np.zeros(rows, dtype=np.uint8)
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != features + 1:
            raise InvalidValue(f"record {i} has {len(parts)} fields, expected {features + 1}")
        inputs[i] = [int(p) for p in parts[:features]]
        expected[i] = int(parts[-1])
    return inputs, expected


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
