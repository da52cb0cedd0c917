"""Colormap serialization: a self-contained document with control points,
profile, preferences, generation settings, and scores.

Three formats: ``json`` (full document, canonical and byte-stable through
round trips), ``csv`` (index,L,A,B,r,g,b rows), and ``hex`` (one #RRGGBB
per line, for interop with anything that eats hex lists).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .annealer import Colormap, OptimizeResult, OptimizerConfig
from .colorspace import in_gamut, lab_to_srgb, srgb_to_lab
from .cost import CostBreakdown, CostWeights
from .cvd import CvdModel
from .preference import PreferenceShelf
from .profiles import LuminanceProfile

__all__ = [
    "ColormapDocument",
    "DocumentError",
    "ParseError",
    "ValidationError",
    "FORMATS",
    "srgb_to_hex",
    "hex_to_srgb",
]

FORMATS = ("json", "csv", "hex")
FORMAT_VERSION = 1


class DocumentError(ValueError):
    """Base for import/export failures."""


class ParseError(DocumentError):
    """Malformed input; carries line/offset where known."""

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", offset {offset}" if offset is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


class ValidationError(DocumentError):
    """Structurally valid input that breaks a colormap invariant."""


def srgb_to_hex(rgb) -> list[str]:
    arr = np.clip(np.asarray(rgb, dtype=np.float64), 0.0, 1.0)
    q = np.round(arr * 255.0).astype(int)
    return ["#%02X%02X%02X" % tuple(row) for row in np.atleast_2d(q)]


def hex_to_srgb(stop: str) -> np.ndarray:
    s = stop.strip().lstrip("#")
    if len(s) != 6 or any(c not in "0123456789abcdefABCDEF" for c in s):
        raise ParseError(f"not a #RRGGBB color: {stop!r}")
    return np.array([int(s[i : i + 2], 16) / 255.0 for i in (0, 2, 4)])


def _config_snapshot(config: OptimizerConfig) -> dict:
    w = config.weights
    return {
        "seed": config.seed,
        "iter_count": config.iter_count,
        "t_init": config.t_init,
        "t_end": config.t_end,
        "alpha": config.alpha,
        "step_size": config.step_size,
        "restart_temp": config.restart_temp,
        "cvd": config.cvd.spec_string(),
        "weights": {
            "omega_u": w.omega_u,
            "omega_s": w.omega_s,
            "omega_c": w.omega_c,
            "omega_s1": w.omega_s1,
            "omega_s2": w.omega_s2,
            "K": w.K,
        },
    }


def config_from_snapshot(snapshot: dict) -> OptimizerConfig:
    w = snapshot.get("weights", {})
    return OptimizerConfig(
        seed=snapshot.get("seed"),
        iter_count=int(snapshot.get("iter_count", 5500)),
        t_init=float(snapshot.get("t_init", 1.0)),
        t_end=float(snapshot.get("t_end", 0.0001)),
        alpha=float(snapshot.get("alpha", 0.925)),
        step_size=float(snapshot.get("step_size", 5.0)),
        restart_temp=float(snapshot.get("restart_temp", 0.1)),
        cvd=CvdModel.parse(snapshot.get("cvd", "off")),
        weights=CostWeights(
            omega_u=float(w.get("omega_u", 0.85)),
            omega_s=float(w.get("omega_s", 1.0)),
            omega_c=float(w.get("omega_c", 2.0)),
            omega_s2=float(w.get("omega_s2", 0.25)),
            K=float(w.get("K", 70.0)),
        ),
    )


@dataclass(frozen=True)
class ColormapDocument:
    """Everything needed to reproduce, redisplay, and re-score a colormap."""

    points: np.ndarray
    profile: Optional[LuminanceProfile] = None
    shelf: PreferenceShelf = field(default_factory=PreferenceShelf)
    config: dict = field(default_factory=dict)
    cost: Optional[CostBreakdown] = None
    format_version: int = FORMAT_VERSION

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 2:
            raise ValidationError(f"expected (n>=2, 3) control points, got shape {pts.shape}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        self._validate()

    def _validate(self):
        if not np.all(np.isfinite(self.points)):
            idx = int(np.nonzero(~np.isfinite(self.points).all(axis=1))[0][0])
            raise ValidationError(f"control point {idx} has non-finite components")
        gamut = in_gamut(self.points)
        if not np.all(gamut):
            idx = int(np.nonzero(~gamut)[0][0])
            raise ValidationError(f"control point {idx} is outside the display gamut")
        if self.profile is not None:
            if self.points.shape[0] != self.profile.n:
                raise ValidationError(
                    f"profile expects {self.profile.n} points, document has {self.points.shape[0]}"
                )
            L = self.profile.values()
            mismatch = np.nonzero(np.abs(self.points[:, 0] - L) > 1e-9)[0]
            if mismatch.size:
                idx = int(mismatch[0])
                raise ValidationError(
                    f"control point {idx} luminance {self.points[idx, 0]!r} "
                    f"does not match the profile value {L[idx]!r}"
                )

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def hex_stops(self) -> list[str]:
        return srgb_to_hex(lab_to_srgb(self.points))

    def colormap(self) -> Colormap:
        if self.profile is None:
            raise ValidationError("document has no profile (unconstrained import)")
        return Colormap(points=self.points, profile=self.profile)

    @classmethod
    def from_result(
        cls,
        result: OptimizeResult,
        config: OptimizerConfig,
        shelf: Optional[PreferenceShelf] = None,
    ) -> "ColormapDocument":
        snapshot = _config_snapshot(config)
        snapshot["seed"] = result.seed
        return cls(
            points=result.colormap.points,
            profile=result.colormap.profile,
            shelf=shelf if shelf is not None else PreferenceShelf(),
            config=snapshot,
            cost=result.cost,
        )

    # -- json ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        d = {
            "format_version": self.format_version,
            "profile": self.profile.to_dict() if self.profile else None,
            "points": [list(p) for p in self.points.tolist()],
            "hex": self.hex_stops,
            "shelf": self.shelf.to_json(),
            "config": self.config,
            "cost": None,
        }
        if self.cost is not None:
            d["cost"] = {
                "uniformity": self.cost.uniformity,
                "smoothness": self.cost.smoothness,
                "cvd": self.cost.cvd,
                "total": self.cost.total,
            }
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "ColormapDocument":
        try:
            points = np.array(d["points"], dtype=np.float64)
            profile = LuminanceProfile.from_dict(d["profile"]) if d.get("profile") else None
            shelf = PreferenceShelf.from_json(d.get("shelf", []))
            cost = None
            if d.get("cost"):
                c = d["cost"]
                cost = CostBreakdown(c["uniformity"], c["smoothness"], c["cvd"], c["total"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"document field missing or malformed: {exc}") from exc
        return cls(
            points=points,
            profile=profile,
            shelf=shelf,
            config=d.get("config", {}),
            cost=cost,
            format_version=int(d.get("format_version", FORMAT_VERSION)),
        )

    # -- generic ------------------------------------------------------------

    def export(self, format: str = "json") -> bytes:
        if format == "json":
            return (json.dumps(self.to_json_dict(), sort_keys=True, indent=1) + "\n").encode()
        if format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["index", "L", "A", "B", "r", "g", "b"])
            rgb = lab_to_srgb(self.points)
            for i, (lab, srgb) in enumerate(zip(self.points.tolist(), rgb.tolist())):
                writer.writerow([i, repr(lab[0]), repr(lab[1]), repr(lab[2]),
                                 repr(srgb[0]), repr(srgb[1]), repr(srgb[2])])
            return buf.getvalue().encode()
        if format == "hex":
            return ("\n".join(self.hex_stops) + "\n").encode()
        raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")

    @classmethod
    def import_(cls, data: bytes | str, format: str = "json") -> "ColormapDocument":
        text = data.decode() if isinstance(data, bytes) else data
        if format == "json":
            try:
                return cls.from_json_dict(json.loads(text))
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, offset=exc.colno) from exc
        if format == "csv":
            reader = csv.reader(io.StringIO(text))
            rows = list(reader)
            if not rows or rows[0][:4] != ["index", "L", "A", "B"]:
                raise ParseError("missing csv header 'index,L,A,B,r,g,b'", line=1)
            points = []
            for lineno, row in enumerate(rows[1:], start=2):
                if not row:
                    continue
                try:
                    points.append([float(row[1]), float(row[2]), float(row[3])])
                except (IndexError, ValueError) as exc:
                    raise ParseError(f"bad csv row: {exc}", line=lineno) from exc
            return cls(points=np.array(points), profile=None)
        if format == "hex":
            points = []
            for lineno, line in enumerate(text.splitlines(), start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    points.append(srgb_to_lab(hex_to_srgb(line)))
                except ParseError as exc:
                    raise ParseError(str(exc), line=lineno) from exc
            return cls(points=np.array(points), profile=None)
        raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")
