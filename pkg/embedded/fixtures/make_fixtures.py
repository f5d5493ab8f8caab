"""Regenerate the committed parity fixtures.

Trains two models on synthetic clusters and exports them through the
command-line interface, so the files here are exactly what a user's
export run would produce: a C data header plus a golden fixture of byte
inputs with expected class indices.

Run from this directory with the main package installed:

    python3 make_fixtures.py
"""
import csv
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

from sefr.data import gen_blobs

HERE = Path(__file__).parent


def write_csv(path: Path, X, y) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"f{j}" for j in range(X.shape[1])] + ["label"])
        for row, label in zip(X, y):
            writer.writerow([repr(float(v)) for v in row] + [str(label)])


def run_cli(*args: str) -> None:
    cmd = [sys.executable, "-m", "sefr.cli", *args]
    print("+", " ".join(cmd))
    subprocess.run(cmd, check=True)


def build(name: str, X, y, multiclass: bool, margin: str) -> None:
    out_dir = HERE / name
    out_dir.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        data_csv = Path(tmp) / "train.csv"
        model = Path(tmp) / "model.json"
        write_csv(data_csv, X, y)
        train_args = [
            "train", "--data", str(data_csv), "--label-col", "label",
            "--out", str(model), "--no-normalize",
        ]
        if multiclass:
            train_args.append("--multiclass")
        run_cli(*train_args)
        run_cli(
            "export", "--model", str(model), "--out-dir", str(out_dir),
            "--count", "512", "--seed", "7", "--margin", margin,
        )


def main() -> None:
    X, y = gen_blobs(
        n_per_class=400, dims=8,
        centers=[[0.25] * 8, [0.75] * 8], spread=0.25, seed=21,
    )
    build("binary", X, y, multiclass=False, margin="1e-3")

    rng = np.random.default_rng(22)
    X, y = gen_blobs(
        n_per_class=60, dims=256, centers=rng.random((10, 256)),
        spread=0.3, seed=22,
    )
    build("tenclass", X, y, multiclass=True, margin="2e-3")


if __name__ == "__main__":
    main()
