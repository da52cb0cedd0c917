"""Localized alternatives for a single scale position: chroma scalings and
hue rotations, clamped into the display gamut."""

from __future__ import annotations

import numpy as np

from .colorspace import in_gamut, lab_to_lch, lch_to_lab
from .render import ramp_lookup

__all__ = ["max_gamut_chroma", "suggestions", "CHROMA_FACTORS", "HUE_STEPS"]

CHROMA_FACTORS = (0.5, 0.75, 1.25, 1.5)
HUE_STEPS = (-40.0, -20.0, 20.0, 40.0)


def max_gamut_chroma(L: float, h: float, upper: float = 200.0) -> float:
    """Largest displayable chroma at the given lightness and hue."""
    if not in_gamut(lch_to_lab([L, 0.0, h])):
        return 0.0
    lo, hi = 0.0, upper
    for _ in range(48):
        mid = 0.5 * (lo + hi)
        if in_gamut(lch_to_lab([L, mid, h])):
            lo = mid
        else:
            hi = mid
    return lo


def _clamped(L: float, C: float, h: float) -> np.ndarray:
    return lch_to_lab([L, min(C, max_gamut_chroma(L, h)), h])


def suggestions(points, t: float) -> dict:
    """Alternative colors for the scale position t.

    Chroma variants scale the current chroma by fixed factors; hue variants
    rotate at constant lightness and chroma. Anything that would leave the
    gamut is pulled back to the gamut edge along chroma.
    """
    current = ramp_lookup(points, t)
    L, C, h = lab_to_lch(current)
    return {
        "position": float(t),
        "current": [float(v) for v in current],
        "chroma": [[float(v) for v in _clamped(L, C * f, h)] for f in CHROMA_FACTORS],
        "hue": [[float(v) for v in _clamped(L, C, (h + step) % 360.0)] for step in HUE_STEPS],
    }
