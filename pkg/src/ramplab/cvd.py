"""Color-vision-deficiency simulation via severity-parameterized RGB
matrices (Machado et al. 2009).

A :class:`CvdModel` pairs a condition with a severity and carries the 3x3
transform. Condition ``"none"`` uses the identity matrix; the accessibility
cost keeps running with it, which degenerates into a plain minimum-distance
guard between same-luminance control points.

By default the matrix is applied to companded (display) sRGB channels.
Machado et al. define the model over linear RGB, but the display-space
variant is what common web tooling ships and what reproduces published
retention figures for reference colormaps; pass ``space="linear-rgb"`` for
the physically motivated pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _machado
from .colorspace import (
    lab_to_linear_rgb,
    lab_to_srgb,
    linear_rgb_to_lab,
    srgb_to_lab,
)

__all__ = ["CvdModel", "cvd_matrix", "simulate", "CONDITIONS", "SPACES"]

CONDITIONS = ("protan", "deutan", "tritan", "none")
SPACES = ("srgb", "linear-rgb")

_TABLES = {
    "protan": np.array(_machado.PROTAN),
    "deutan": np.array(_machado.DEUTAN),
    "tritan": np.array(_machado.TRITAN),
}


def cvd_matrix(condition: str, severity: float = 1.0) -> np.ndarray:
    """3x3 RGB transform for a condition at the given severity.

    Severities between the published 0.1 steps interpolate the two adjacent
    matrices element-wise.
    """
    if condition not in CONDITIONS:
        raise ValueError(f"unknown condition {condition!r}, expected one of {CONDITIONS}")
    if not np.isfinite(severity) or not 0.0 <= severity <= 1.0:
        raise ValueError(f"severity must be in [0, 1], got {severity}")
    if condition == "none":
        return np.eye(3)
    table = _TABLES[condition]
    pos = severity * 10.0
    lo = int(np.floor(pos))
    if lo == 10:
        return table[10].copy()
    w = pos - lo
    return (1.0 - w) * table[lo] + w * table[lo + 1]


@dataclass(frozen=True)
class CvdModel:
    """A deficiency condition plus severity, with its transform matrix."""

    condition: str = "deutan"
    severity: float = 1.0
    space: str = "srgb"
    matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.space not in SPACES:
            raise ValueError(f"space must be one of {SPACES}, got {self.space!r}")
        object.__setattr__(self, "matrix", cvd_matrix(self.condition, self.severity))

    @property
    def is_identity(self) -> bool:
        return self.condition == "none"

    @classmethod
    def none(cls) -> "CvdModel":
        return cls(condition="none", severity=0.0)

    @classmethod
    def parse(cls, spec: str) -> "CvdModel":
        """Parse ``"condition"``, ``"condition:severity"``, or ``"off"``."""
        spec = spec.strip().lower()
        if spec in ("off", "none", ""):
            return cls.none()
        condition, _, sev = spec.partition(":")
        return cls(condition=condition, severity=float(sev) if sev else 1.0)

    def spec_string(self) -> str:
        if self.is_identity:
            return "off"
        return f"{self.condition}:{self.severity:g}"


def simulate(lab, model: CvdModel) -> np.ndarray:
    """Simulated appearance of Lab color(s) under the model's deficiency.

    The transform runs in the model's RGB space with channels clamped to
    [0, 1] afterwards, so the result is always a displayable color.
    """
    if model.space == "linear-rgb":
        rgb = lab_to_linear_rgb(lab)
        rgb = np.clip(rgb @ model.matrix.T, 0.0, 1.0)
        return linear_rgb_to_lab(rgb)
    srgb = lab_to_srgb(lab)
    srgb = np.clip(srgb @ model.matrix.T, 0.0, 1.0)
    return srgb_to_lab(srgb)
