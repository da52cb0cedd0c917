"""Luminance profiles: the hard L* constraint on every colormap.

A profile fixes the luminance of each control point exactly; the optimizer
only ever moves colors within their L* plane. Three shapes are supported —
linear, diverging (single peak at the midpoint), and wave (a seesaw with
two peaks) — each with an inverted variant mirrored in L*.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["LuminanceProfile", "PROFILE_KINDS", "default_point_count"]

PROFILE_KINDS = ("linear", "diverging", "wave")

_DEFAULT_N = {"linear": 25, "diverging": 31, "wave": 31}


def default_point_count(kind: str) -> int:
    """Control points used for a profile kind: 25 for linear, 31 for the
    shapes whose extra structure needs more degrees of freedom."""
    return _DEFAULT_N[kind]


@dataclass(frozen=True)
class LuminanceProfile:
    kind: str = "linear"
    inverted: bool = False
    l_min: float = 5.0
    l_max: float = 95.0
    n: int = 0  # 0 means the kind's default

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}, expected one of {PROFILE_KINDS}")
        if self.n == 0:
            object.__setattr__(self, "n", _DEFAULT_N[self.kind])
        if not (0.0 <= self.l_min < self.l_max <= 100.0):
            raise ValueError(f"need 0 <= l_min < l_max <= 100, got [{self.l_min}, {self.l_max}]")
        if self.n < 5:
            raise ValueError(f"need at least 5 control points, got {self.n}")
        if self.kind in ("diverging", "wave") and self.n % 2 == 0:
            raise ValueError(f"{self.kind} profiles need an odd point count so extrema land on an index")

    def _anchors(self) -> tuple[np.ndarray, np.ndarray]:
        """(indices, L values) of the piecewise-linear shape, 0-based."""
        n, lo, hi = self.n, self.l_min, self.l_max
        if self.kind == "linear":
            idx = [0, n - 1]
            val = [lo, hi]
        elif self.kind == "diverging":
            idx = [0, (n - 1) // 2, n - 1]
            val = [lo, hi, lo]
        else:  # wave
            idx = [0, math.ceil(n / 3) - 1, math.ceil(2 * n / 3) - 1, n - 1]
            val = [lo, hi, 0.5 * (lo + hi), hi]
        if self.inverted:
            val = [lo + hi - v for v in val]
        return np.array(idx, dtype=np.float64), np.array(val, dtype=np.float64)

    def luminance(self, index: int) -> float:
        """Profile L* at a 0-based control-point index."""
        if not 0 <= index < self.n:
            raise ValueError(f"index {index} out of range for {self.n} points")
        return float(self.values()[index])

    def values(self) -> np.ndarray:
        """L* for all control points. Deterministic: identical calls yield
        bitwise-identical arrays."""
        idx, val = self._anchors()
        return np.interp(np.arange(self.n, dtype=np.float64), idx, val)

    def luminance_at_position(self, t: float) -> float:
        """Profile L* at a fractional scale position in [0, 1]."""
        idx, val = self._anchors()
        return float(np.interp(t * (self.n - 1), idx, val))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "inverted": self.inverted,
            "l_min": self.l_min,
            "l_max": self.l_max,
            "n": self.n,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LuminanceProfile":
        return cls(
            kind=d["kind"],
            inverted=bool(d.get("inverted", False)),
            l_min=float(d.get("l_min", 5.0)),
            l_max=float(d.get("l_max", 95.0)),
            n=int(d.get("n", 0)),
        )

    @classmethod
    def parse(cls, spec: str, **kwargs) -> "LuminanceProfile":
        """Parse names like ``"linear"``, ``"diverging-inverted"``."""
        spec = spec.strip().lower()
        inverted = False
        for suffix in ("-inverted", "_inverted", ":inverted"):
            if spec.endswith(suffix):
                inverted = True
                spec = spec[: -len(suffix)]
        return cls(kind=spec, inverted=inverted, **kwargs)

    def name(self) -> str:
        return self.kind + ("-inverted" if self.inverted else "")
