"""Apply a colormap to scalar data and render images for visual checks."""

from __future__ import annotations

import io
import pathlib
from typing import Optional

import numpy as np
from PIL import Image

from .colorspace import lab_to_srgb

__all__ = ["ramp_lookup", "apply_to_field", "field_to_png", "load_field", "ramp_strip"]


def ramp_lookup(points, t) -> np.ndarray:
    """Sample the colormap at scale positions t in [0, 1] (any shape).

    Linear interpolation in Lab between bracketing control points; positions
    are clipped to [0, 1].
    """
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    t = np.clip(np.asarray(t, dtype=np.float64), 0.0, 1.0)
    pos = t * (n - 1)
    idx = np.minimum(pos.astype(np.int64), n - 2)
    alpha = (pos - idx)[..., np.newaxis]
    return points[idx] + alpha * (points[idx + 1] - points[idx])


def apply_to_field(
    points,
    field,
    vmin: Optional[float] = None,
    vmax: Optional[float] = None,
) -> np.ndarray:
    """Map a 2D scalar field through the colormap; returns uint8 RGB.

    Values are min-max normalized unless an explicit range is given (then
    clipped to it). A constant field maps everything to the scale midpoint.
    """
    field = np.asarray(field, dtype=np.float64)
    if not np.all(np.isfinite(field)):
        raise ValueError("field contains non-finite values")
    lo = field.min() if vmin is None else float(vmin)
    hi = field.max() if vmax is None else float(vmax)
    if hi <= lo:
        t = np.full(field.shape, 0.5)
    else:
        t = (field - lo) / (hi - lo)
    rgb = lab_to_srgb(ramp_lookup(points, t))
    return np.round(rgb * 255.0).astype(np.uint8)


def field_to_png(points, field, vmin=None, vmax=None) -> bytes:
    """PNG bytes of the field rendered through the colormap."""
    rgb = apply_to_field(points, field, vmin=vmin, vmax=vmax)
    img = Image.fromarray(rgb, mode="RGB")
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def ramp_strip(points, width: int = 512, height: int = 32) -> bytes:
    """PNG bytes of the bare gradient, for previews."""
    t = np.tile(np.linspace(0.0, 1.0, width), (height, 1))
    return field_to_png(points, t, vmin=0.0, vmax=1.0)


def load_field(path) -> np.ndarray:
    """Read a scalar field from a CSV grid of numbers or a grayscale PNG."""
    path = pathlib.Path(path)
    if path.suffix.lower() == ".csv":
        try:
            field = np.loadtxt(path, delimiter=",", dtype=np.float64)
        except ValueError as exc:
            raise ValueError(f"could not parse {path} as a CSV grid: {exc}") from exc
        return np.atleast_2d(field)
    img = Image.open(path)
    if img.mode not in ("L", "I", "I;16", "F"):
        img = img.convert("L")
    return np.asarray(img, dtype=np.float64)
