"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad data, bad model, budget
exceeded), 2 usage error (argparse). All randomness is seeded; repeated
runs produce byte-identical outputs except for timing fields.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import bench, core, data, evaluate, export, preprocess, viz
from .exceptions import SefrError


def _dataset_args(p: argparse.ArgumentParser, with_label: bool = True) -> None:
    p.add_argument("--data", required=True, help="input CSV path")
    if with_label:
        p.add_argument(
            "--label-col",
            required=True,
            help="label column: header name, or 0-based index (negatives count from the end)",
        )
    p.add_argument("--delimiter", default=",", help="CSV delimiter (default ,)")
    p.add_argument(
        "--no-header", action="store_true", help="the CSV has no header row"
    )


def _spec_from(args) -> data.DatasetSpec:
    label = args.label_col
    try:
        label = int(label)
    except ValueError:
        pass  # header name
    return data.DatasetSpec(
        path=args.data,
        label_col=label,
        delimiter=args.delimiter,
        has_header=not args.no_header,
    )


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sefr",
        description="Train, evaluate, and export a linear-time classifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fit a model from a labeled CSV")
    _dataset_args(p)
    p.add_argument("--out", required=True, help="model document path")
    p.add_argument("--epsilon", type=float, default=core.DEFAULT_EPSILON)
    p.add_argument("--multiclass", action="store_true", help="one model per class")
    p.add_argument("--positive-label", default=None, help="binary only; default: greater label")
    p.add_argument(
        "--no-normalize",
        action="store_true",
        help="features are already in a non-negative range; do not fit min-max scaling",
    )

    p = sub.add_parser("predict", help="score records with a trained model")
    p.add_argument("--model", required=True)
    _dataset_args(p, with_label=False)
    p.add_argument("--out", default="-", help="output CSV path (default stdout)")

    p = sub.add_parser("eval", help="stratified k-fold cross-validation report")
    _dataset_args(p)
    p.add_argument("--out", default="-", help="report JSON path (default stdout)")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--epsilon", type=float, default=core.DEFAULT_EPSILON)
    p.add_argument("--multiclass", action="store_true")
    p.add_argument(
        "--per-fold-norm",
        action="store_true",
        help="fit min-max scaling on each training split instead of the full matrix",
    )

    p = sub.add_parser("quantize", help="scale to [0,1], quantize to bytes, write container")
    _dataset_args(p)
    p.add_argument("--out", required=True, help="quantized container path")

    p = sub.add_parser("bench", help="timing/MAC sweep over a size grid")
    _dataset_args(p)
    p.add_argument("--out", default="-", help="CSV output path (default stdout)")
    p.add_argument("--row-grid", required=True, help="comma-separated row counts")
    p.add_argument("--col-grid", required=True, help="comma-separated column counts")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--epsilon", type=float, default=core.DEFAULT_EPSILON)
    p.add_argument("--multiclass", action="store_true")

    p = sub.add_parser("viz", help="render weight vectors as PGM images")
    p.add_argument("--model", required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--out", required=True, help="output image path (multiclass: per-class suffix)")

    p = sub.add_parser("export", help="emit C model data and golden fixtures")
    p.add_argument("--model", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--flash-budget", type=int, default=export.DEFAULT_FLASH_BUDGET)
    p.add_argument("--count", type=int, default=512, help="golden record count")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--margin", type=float, default=export.DEFAULT_MARGIN)
    p.add_argument(
        "--source",
        default=None,
        help="quantized container to draw golden inputs from (default: random bytes)",
    )
    return parser


def _grid(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise SefrError(f"bad grid {text!r}; expected comma-separated integers") from None


def _load_bundle(path: str) -> data.ModelBundle:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise SefrError(f"cannot read model {path}: {exc}") from None
    return data.load_model(raw)


def _prepare(args, fit_scaling: bool):
    """Load a labeled CSV; optionally fit min-max scaling on it."""
    X, y = data.load_csv(_spec_from(args))
    if not fit_scaling:
        return X, y, None
    params = preprocess.fit_minmax(X)
    return preprocess.apply_minmax(X, params), y, params


def cmd_train(args) -> int:
    X, y, params = _prepare(args, fit_scaling=not args.no_normalize)
    if args.multiclass:
        model = core.train_multiclass(X, y, epsilon=args.epsilon)
        summary = f"multiclass, {model.n_classes} classes, {model.n_features} features"
    else:
        model = core.train_binary(
            X, y, epsilon=args.epsilon, positive_label=args.positive_label
        )
        summary = f"binary ({model.negative_label!s}/{model.positive_label!s}), {model.n_features} features"
    _write_text(args.out, data.save_model(data.ModelBundle(model, params)))
    print(f"wrote {args.out}: {summary}, {X.shape[0]} records")
    return 0


def cmd_predict(args) -> int:
    bundle = _load_bundle(args.model)
    X, _ = data.load_feature_csv(
        args.data, delimiter=args.delimiter, has_header=not args.no_header
    )
    if bundle.normalization is not None:
        X = preprocess.apply_minmax(X, bundle.normalization)
    model = bundle.model
    if isinstance(model, core.MulticlassModel):
        scores = np.column_stack([core.decision_scores(m, X) for m in model.models])
        best = np.argmin(scores, axis=1)
        out_scores = scores[np.arange(scores.shape[0]), best]
        labels = [str(model.classes[i]) for i in best]
    else:
        out_scores = core.decision_scores(model, X)
        labels = [
            str(model.negative_label) if s <= 0.0 else str(model.positive_label)
            for s in out_scores
        ]
    lines = [
        f"{i},{score:.9g},{label}"
        for i, (score, label) in enumerate(zip(out_scores, labels))
    ]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_eval(args) -> int:
    X, y = data.load_csv(_spec_from(args))
    report = evaluate.cross_validate(
        X,
        y,
        k=args.k,
        seed=args.seed,
        epsilon=args.epsilon,
        mode="multiclass" if args.multiclass else "binary",
        normalization="per-fold" if args.per_fold_norm else "full",
        dataset=Path(args.data).name,
    )
    _write_text(args.out, report.to_json())
    return 0


def cmd_quantize(args) -> int:
    X, y, _ = _prepare(args, fit_scaling=True)
    q = preprocess.quantize_u8(X, y)
    preprocess.write_quantized(q, args.out)
    print(f"wrote {args.out}: {q.rows} rows x {q.cols} cols, {len(q.classes)} classes")
    return 0


def cmd_bench(args) -> int:
    X, y, _ = _prepare(args, fit_scaling=True)
    results = bench.sweep(
        X,
        y,
        row_grid=_grid(args.row_grid),
        col_grid=_grid(args.col_grid),
        repeats=args.repeats,
        seed=args.seed,
        epsilon=args.epsilon,
        mode="multiclass" if args.multiclass else "binary",
    )
    _write_text(args.out, bench.sweep_to_csv(results))
    return 0


def cmd_viz(args) -> int:
    bundle = _load_bundle(args.model)
    images = viz.model_images(bundle.model, args.width, args.height)
    out = Path(args.out)
    if isinstance(bundle.model, core.MulticlassModel):
        for name, blob in images:
            path = out.with_name(f"{out.stem}_{name}{out.suffix or '.pgm'}")
            path.write_bytes(blob)
            print(str(path))
    else:
        out.write_bytes(images[0][1])
        print(str(out))
    return 0


def cmd_export(args) -> int:
    bundle = _load_bundle(args.model)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    c_text = export.render_c_model(bundle, flash_budget=args.flash_budget)
    source = None
    if args.source is not None:
        source = preprocess.read_quantized(args.source).values
    inputs, expected = export.make_golden(
        bundle, count=args.count, seed=args.seed, margin=args.margin, source=source
    )
    model_path = out_dir / "sefr_model_data.h"
    golden_path = out_dir / "sefr_golden.txt"
    model_path.write_text(c_text, encoding="utf-8")
    golden_path.write_text(export.render_golden(inputs, expected), encoding="utf-8")
    print(str(model_path))
    print(str(golden_path))
    return 0


_COMMANDS = {
    "train": cmd_train,
    "predict": cmd_predict,
    "eval": cmd_eval,
    "quantize": cmd_quantize,
    "bench": cmd_bench,
    "viz": cmd_viz,
    "export": cmd_export,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SefrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
