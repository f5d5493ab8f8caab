"""Dataset IO, synthetic data, model documents, and checksums.

Labels read from CSV stay strings end to end; nothing ever tries to parse
them as numbers. Model documents are UTF-8 JSON; floats serialize via
repr so weights and biases survive a round trip bit for bit.
"""
from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .core import BinaryModel, MulticlassModel
from .exceptions import (
    EmptyFile,
    InvalidValue,
    ParseError,
    RaggedRows,
    SchemaError,
    ShapeMismatch,
    VersionMismatch,
)
from .preprocess import NormalizationParams
from .validation import as_float_matrix

__all__ = [
    "DatasetSpec",
    "load_csv",
    "load_feature_csv",
    "gen_blobs",
    "ModelBundle",
    "save_model",
    "load_model",
    "MODEL_VERSION",
    "sha256_file",
    "write_manifest",
    "verify_manifest",
]

MODEL_VERSION = "sefr-model/1"


@dataclass(frozen=True)
class DatasetSpec:
    """Where a labeled CSV lives and how to read it."""

    path: str | Path
    label_col: str | int
    delimiter: str = ","
    has_header: bool = True


def _read_rows(path, delimiter):
    try:
        fh = open(path, "r", newline="", encoding="utf-8")
    except OSError as exc:
        raise EmptyFile(f"cannot open {path}: {exc}") from None
    with fh:
        for line_num, row in enumerate(csv.reader(fh, delimiter=delimiter), start=1):
            if not row or all(cell.strip() == "" for cell in row):
                continue  # blank line
            yield line_num, row


def _parse_cell(cell: str, line_num: int, col: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(
            f"line {line_num}, column {col}: {cell!r} is not a number",
            row=line_num,
            col=col,
        ) from None
    if not np.isfinite(value):
        raise ParseError(
            f"line {line_num}, column {col}: non-finite value {cell!r}",
            row=line_num,
            col=col,
        )
    return value


def load_csv(spec: DatasetSpec) -> tuple[np.ndarray, np.ndarray]:
    """Read a labeled dataset. Returns (X float64, y string labels)."""
    rows = _read_rows(spec.path, spec.delimiter)
    header = None
    if spec.has_header:
        try:
            _, header = next(rows)
        except StopIteration:
            raise EmptyFile(f"{spec.path} is empty") from None

    if isinstance(spec.label_col, str):
        if header is None:
            raise InvalidValue("label column by name requires a header row")
        try:
            label_idx = header.index(spec.label_col)
        except ValueError:
            raise SchemaError(
                f"no column named {spec.label_col!r}; header has {header}"
            ) from None
    else:
        label_idx = int(spec.label_col)

    width = None
    feats: list[list[float]] = []
    labels: list[str] = []
    for line_num, row in rows:
        if width is None:
            width = len(row)
            if header is not None and len(header) != width:
                raise RaggedRows(
                    f"line {line_num}: {width} cells but header has {len(header)}",
                    row=line_num,
                )
            idx = label_idx if label_idx >= 0 else width + label_idx
            if not 0 <= idx < width:
                raise SchemaError(
                    f"label column {spec.label_col!r} out of range for {width} columns"
                )
            label_idx = idx
        elif len(row) != width:
            raise RaggedRows(
                f"line {line_num}: {len(row)} cells, expected {width}",
                row=line_num,
            )
        labels.append(row[label_idx].strip())
        feats.append(
            [
                _parse_cell(cell, line_num, col + 1)
                for col, cell in enumerate(row)
                if col != label_idx
            ]
        )
    if not feats:
        raise EmptyFile(f"{spec.path} has no data rows")
    return np.asarray(feats, dtype=np.float64), np.asarray(labels, dtype=object)


def load_feature_csv(
    path, delimiter: str = ",", has_header: bool = True
) -> tuple[np.ndarray, list[str] | None]:
    """Read an unlabeled feature matrix. Returns (X, header or None)."""
    rows = _read_rows(path, delimiter)
    header = None
    if has_header:
        try:
            _, header = next(rows)
        except StopIteration:
            raise EmptyFile(f"{path} is empty") from None
    width = None
    feats: list[list[float]] = []
    for line_num, row in rows:
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise RaggedRows(
                f"line {line_num}: {len(row)} cells, expected {width}",
                row=line_num,
            )
        feats.append(
            [_parse_cell(cell, line_num, col + 1) for col, cell in enumerate(row)]
        )
    if not feats:
        raise EmptyFile(f"{path} has no data rows")
    return np.asarray(feats, dtype=np.float64), header


def gen_blobs(
    n_per_class: int,
    dims: int,
    centers,
    spread: float,
    seed: int = 42,
    labels: list[str] | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Synthetic clusters: uniform noise of +-spread around each center,
    clipped to [0, 1]. Labels default to "0", "1", ... per center."""
    centers = as_float_matrix(centers)
    if centers.shape[1] != dims:
        raise ShapeMismatch(f"centers are {centers.shape[1]}-D, dims says {dims}")
    if n_per_class < 1:
        raise InvalidValue("n_per_class must be at least 1")
    if spread < 0:
        raise InvalidValue("spread must be non-negative")
    if np.any(centers < 0.0) or np.any(centers > 1.0):
        raise InvalidValue("centers must lie in [0, 1]")
    if len(np.unique(centers, axis=0)) != centers.shape[0]:
        raise InvalidValue("centers must be distinct")
    if labels is None:
        labels = [str(i) for i in range(centers.shape[0])]
    elif len(labels) != centers.shape[0]:
        raise ShapeMismatch(f"{len(labels)} labels for {centers.shape[0]} centers")
    rng = np.random.default_rng(seed)
    parts = []
    ys = []
    for i in range(centers.shape[0]):
        noise = rng.uniform(-spread, spread, size=(n_per_class, dims))
        parts.append(np.clip(centers[i] + noise, 0.0, 1.0))
        ys.extend([labels[i]] * n_per_class)
    return np.vstack(parts), np.asarray(ys, dtype=object)


@dataclass(frozen=True)
class ModelBundle:
    """A trained model plus the scaling params its inputs expect."""

    model: BinaryModel | MulticlassModel
    normalization: NormalizationParams | None = None


def save_model(bundle: ModelBundle) -> str:
    """Serialize to the versioned JSON document format."""
    model = bundle.model
    doc: dict[str, Any] = {"version": MODEL_VERSION}
    if isinstance(model, MulticlassModel):
        doc["kind"] = "multiclass"
        doc["feature_count"] = model.n_features
        doc["epsilon"] = model.models[0].epsilon
        doc["classes"] = list(model.classes)
        doc["weights"] = [list(map(float, m.weights)) for m in model.models]
        doc["biases"] = [m.bias for m in model.models]
    elif isinstance(model, BinaryModel):
        doc["kind"] = "binary"
        doc["feature_count"] = model.n_features
        doc["epsilon"] = model.epsilon
        doc["weights"] = list(map(float, model.weights))
        doc["bias"] = model.bias
        doc["positive_label"] = model.positive_label
        doc["negative_label"] = model.negative_label
    else:
        raise SchemaError(f"cannot serialize {type(model).__name__}")
    if bundle.normalization is None:
        doc["normalization"] = None
    else:
        doc["normalization"] = {
            "minimum": list(map(float, bundle.normalization.minimum)),
            "maximum": list(map(float, bundle.normalization.maximum)),
        }
    return json.dumps(doc, indent=2) + "\n"


def _require(doc: dict, key: str):
    if key not in doc:
        raise SchemaError(f"model document missing {key!r}")
    return doc[key]


def _float_list(value, what: str, n: int | None = None) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=np.float64)
    except (TypeError, ValueError):
        raise SchemaError(f"{what} is not a numeric list") from None
    if arr.ndim != 1:
        raise SchemaError(f"{what} is not a flat list")
    if n is not None and arr.shape[0] != n:
        raise SchemaError(f"{what} has {arr.shape[0]} entries, expected {n}")
    if not np.all(np.isfinite(arr)):
        raise SchemaError(f"{what} contains a non-finite value")
    return arr


def load_model(text: str | bytes) -> ModelBundle:
    """Parse a model document. Rejects unknown versions and bad shapes."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"model document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("model document must be a JSON object")
    version = _require(doc, "version")
    if version != MODEL_VERSION:
        raise VersionMismatch(
            f"unsupported model version {version!r}, expected {MODEL_VERSION!r}"
        )
    kind = _require(doc, "kind")
    n_features = int(_require(doc, "feature_count"))
    epsilon = float(_require(doc, "epsilon"))

    if kind == "binary":
        weights = _float_list(_require(doc, "weights"), "weights", n_features)
        model: BinaryModel | MulticlassModel = BinaryModel(
            weights=weights,
            bias=float(_require(doc, "bias")),
            epsilon=epsilon,
            positive_label=_require(doc, "positive_label"),
            negative_label=_require(doc, "negative_label"),
        )
    elif kind == "multiclass":
        classes = _require(doc, "classes")
        if not isinstance(classes, list) or len(classes) < 2:
            raise SchemaError("classes must list at least two entries")
        weight_rows = _require(doc, "weights")
        biases = _float_list(_require(doc, "biases"), "biases", len(classes))
        if not isinstance(weight_rows, list) or len(weight_rows) != len(classes):
            raise SchemaError(
                f"weights has {len(weight_rows)} rows, expected {len(classes)}"
            )
        models = []
        for i, cls in enumerate(classes):
            w = _float_list(weight_rows[i], f"weights[{i}]", n_features)
            if len(classes) == 2:
                pos = classes[1] if i == 0 else classes[0]
            else:
                pos = None
            models.append(
                BinaryModel(
                    weights=w,
                    bias=float(biases[i]),
                    epsilon=epsilon,
                    positive_label=pos,
                    negative_label=cls,
                )
            )
        model = MulticlassModel(classes=list(classes), models=models)
    else:
        raise SchemaError(f"unknown model kind {kind!r}")

    norm_doc = doc.get("normalization")
    normalization = None
    if norm_doc is not None:
        if not isinstance(norm_doc, dict):
            raise SchemaError("normalization must be an object or null")
        normalization = NormalizationParams(
            minimum=_float_list(_require(norm_doc, "minimum"), "minimum", n_features),
            maximum=_float_list(_require(norm_doc, "maximum"), "maximum", n_features),
        )
    return ModelBundle(model=model, normalization=normalization)


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(paths, manifest_path) -> None:
    """sha256sum-compatible manifest, one "digest  name" line per file."""
    lines = []
    for p in paths:
        p = Path(p)
        lines.append(f"{sha256_file(p)}  {p.name}")
    Path(manifest_path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def verify_manifest(manifest_path, base_dir=None) -> list[tuple[str, str]]:
    """Check files against a manifest. Returns (name, status) pairs with
    status one of ok, missing, mismatch."""
    manifest_path = Path(manifest_path)
    base = Path(base_dir) if base_dir is not None else manifest_path.parent
    results = []
    for line in manifest_path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            digest, name = line.split(None, 1)
        except ValueError:
            raise SchemaError(f"bad manifest line: {line!r}") from None
        target = base / name.strip()
        if not target.exists():
            results.append((name.strip(), "missing"))
        elif sha256_file(target) == digest:
            results.append((name.strip(), "ok"))
        else:
            results.append((name.strip(), "mismatch"))
    return results
