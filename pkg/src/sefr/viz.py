"""Weight-vector rendering as portable graymap images.

Weights live in [-1, 1]; the mapping sends -1 to black, 0 to mid-gray
(128), and +1 to white, so an all-zero hyperplane renders as a uniform
gray field. Output is binary PGM (P5), readable by basically anything.
"""
from __future__ import annotations

import numpy as np

from .core import BinaryModel, MulticlassModel
from .exceptions import ShapeMismatch

__all__ = ["weight_image", "model_images"]


def weight_image(weights, width: int, height: int) -> bytes:
    """One weight per pixel, row-major, mapped onto 0..255."""
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != width * height:
        raise ShapeMismatch(
            f"{w.shape[0] if w.ndim == 1 else w.shape} weights do not fill "
            f"a {width}x{height} image"
        )
    if width < 1 or height < 1:
        raise ShapeMismatch("image dimensions must be positive")
    shifted = (np.clip(w, -1.0, 1.0) + 1.0) * 127.5
    lower = np.floor(shifted)
    gray = (lower + (shifted - lower >= 0.5)).astype(np.uint8)  # half away from zero
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + gray.tobytes()


def model_images(model, width: int, height: int) -> list[tuple[str, bytes]]:
    """(name, pgm bytes) per hyperplane: one for a binary model, one per
    class for multiclass, class name as the image name."""
    if isinstance(model, MulticlassModel):
        return [
            (str(cls), weight_image(sub.weights, width, height))
            for cls, sub in zip(model.classes, model.models)
        ]
    if isinstance(model, BinaryModel):
        return [("weights", weight_image(model.weights, width, height))]
    raise ShapeMismatch(f"cannot render {type(model).__name__}")
