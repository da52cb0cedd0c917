"""User color preferences and the chromatic bias they exert on the search.

A preference block is a target color placed at a scale position with an
extent; a shelf is an ordered collection of blocks. During optimization each
block pulls control points toward its chromaticity with Gaussian weight
centered on the block, and the accumulated pull is blended with the random
walk direction at a fixed 60/40 ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "PreferenceBlock",
    "PreferenceShelf",
    "compute_bias",
    "blend_direction",
    "absorb_edit",
    "DEFAULT_EDIT_EXTENT",
]

#: Extent given to blocks absorbed from point edits: localized edits should
#: exert focused bias.
DEFAULT_EDIT_EXTENT = 0.1


@dataclass(frozen=True)
class PreferenceBlock:
    """A preferred color at a scale position.

    ``center`` is the block midpoint in [0, 1] along the scale; ``extent``
    is the block width in the same units and doubles as the 2-sigma width
    of its influence. The color's L component is advisory only — the
    luminance profile always wins.
    """

    color: tuple[float, float, float]
    center: float
    extent: float = DEFAULT_EDIT_EXTENT

    def __post_init__(self):
        object.__setattr__(self, "color", tuple(float(v) for v in self.color))
        if not 0.0 <= self.center <= 1.0:
            raise ValueError(f"center must be in [0, 1], got {self.center}")
        if not 0.0 < self.extent <= 1.0:
            raise ValueError(f"extent must be in (0, 1], got {self.extent}")

    def to_dict(self) -> dict:
        return {"lab": list(self.color), "center": self.center, "extent": self.extent}

    @classmethod
    def from_dict(cls, d: dict) -> "PreferenceBlock":
        return cls(color=tuple(d["lab"]), center=float(d["center"]), extent=float(d["extent"]))


@dataclass(frozen=True)
class PreferenceShelf:
    """Ordered, possibly empty, collection of preference blocks."""

    blocks: tuple[PreferenceBlock, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def to_json(self) -> list[dict]:
        return [b.to_dict() for b in self.blocks]

    @classmethod
    def from_json(cls, data) -> "PreferenceShelf":
        return cls(blocks=tuple(PreferenceBlock.from_dict(d) for d in data))

    def conformed(self, profile) -> "PreferenceShelf":
        """Copy with each block's L snapped to the profile at its center.

        Cosmetic consistency for display and storage; the bias itself only
        ever reads A and B.
        """
        out = []
        for b in self.blocks:
            L = profile.luminance_at_position(b.center)
            out.append(replace(b, color=(L, b.color[1], b.color[2])))
        return PreferenceShelf(blocks=tuple(out))


def compute_bias(index: int, current, shelf: PreferenceShelf, n: int) -> np.ndarray:
    """Accumulated chromatic pull on control point ``index`` (0-based).

    Each block contributes the offset from the current color to the block
    color in the A-B plane, weighted by a normal density over index
    positions with mean at the block center and sigma of half its extent.
    Returns a unit vector with zero L component, or the zero vector for an
    empty shelf / exactly cancelling pulls.
    """
    if not 0 <= index < n:
        raise ValueError(f"index {index} out of range for {n} control points")
    u_a = 0.0
    u_b = 0.0
    cur_a, cur_b = float(current[1]), float(current[2])
    for block in shelf:
        mu = block.center * (n - 1)
        sigma = 0.5 * block.extent * (n - 1)
        z = (index - mu) / sigma
        w = math.exp(-0.5 * z * z) / (sigma * math.sqrt(2.0 * math.pi))
        u_a += w * (block.color[1] - cur_a)
        u_b += w * (block.color[2] - cur_b)
    norm = math.hypot(u_a, u_b)
    if norm < 1e-12:
        return np.zeros(3)
    return np.array([0.0, u_a / norm, u_b / norm])


def blend_direction(random_dir, bias) -> np.ndarray:
    """Blend a random unit direction with the preference bias, 40/60.

    A zero bias leaves the random direction untouched; a (near-)zero blend
    falls back to it as well.
    """
    r = np.asarray(random_dir, dtype=np.float64)
    u = np.asarray(bias, dtype=np.float64)
    if np.all(u == 0.0):
        return r
    o = 0.4 * r + 0.6 * u
    norm = np.linalg.norm(o)
    if norm < 1e-9:
        return r
    return o / norm


def absorb_edit(
    shelf: PreferenceShelf,
    position: float,
    new_color,
    extent: float | None = None,
    tol: float = 1e-6,
) -> PreferenceShelf:
    """Fold a point edit into the shelf as a narrow preference block.

    Re-applying an identical edit (same position and color within ``tol``)
    is a no-op, so repeated drags do not pile up duplicate blocks.
    """
    block = PreferenceBlock(
        color=tuple(float(v) for v in new_color),
        center=float(position),
        extent=DEFAULT_EDIT_EXTENT if extent is None else float(extent),
    )
    for existing in shelf:
        if (
            abs(existing.center - block.center) <= tol
            and all(abs(a - b) <= tol for a, b in zip(existing.color, block.color))
        ):
            return shelf
    return PreferenceShelf(blocks=shelf.blocks + (block,))
