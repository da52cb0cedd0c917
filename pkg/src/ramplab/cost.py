"""Objective terms for colormap search: uniformity, smoothness, and a
CVD-separability penalty, plus their weighted total.

All terms take an ``(n, 3)`` Lab control-point array. Lower is better
throughout; every term is nonnegative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .colorspace import delta_e_2000, resample
from .cvd import CvdModel, simulate

__all__ = [
    "CostWeights",
    "CostBreakdown",
    "uniformity_cost",
    "curvature",
    "smoothness_cost",
    "cvd_cost",
    "total_cost",
    "luminance_pairs",
    "pair_threshold",
    "LUMINANCE_SLICE_EPS",
]

#: Two control points count as sharing an L* slice when their luminance
#: differs by less than this. Profiles are generated exactly, so this only
#: guards float noise.
LUMINANCE_SLICE_EPS = 0.5


@dataclass(frozen=True)
class CostWeights:
    """Relative weights of the objective terms.

    ``omega_s1`` is fixed at 1 by construction; ``omega_s2`` (the
    low-frequency curvature weight, exposed to users as the inverse of
    "colorfulness") is clamped to [0, 1]. ``K`` is the minimum simulated
    distance demanded of same-luminance pairs, in color-difference units.
    """

    omega_u: float = 0.85
    omega_s: float = 1.0
    omega_c: float = 2.0
    omega_s1: float = 1.0
    omega_s2: float = 0.25
    K: float = 70.0

    def __post_init__(self):
        if min(self.omega_u, self.omega_s, self.omega_c) < 0:
            raise ValueError("term weights must be nonnegative")
        if self.K <= 0:
            raise ValueError("K must be positive")
        object.__setattr__(self, "omega_s2", float(min(max(self.omega_s2, 0.0), 1.0)))

    def with_colorfulness(self, omega_s2: float) -> "CostWeights":
        return replace(self, omega_s2=omega_s2)


@dataclass(frozen=True)
class CostBreakdown:
    """Per-term cost values and their weighted sum."""

    uniformity: float
    smoothness: float
    cvd: float
    total: float


def uniformity_cost(points) -> float:
    """Coefficient of variation of adjacent CIEDE2000 distances.

    Zero means perfectly even perceptual steps. The standard deviation uses
    a 1/(n-2) divisor over the n-1 adjacent distances.
    """
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    if n < 3:
        raise ValueError("uniformity needs at least 3 control points")
    d = delta_e_2000(points[:-1], points[1:])
    d_mean = float(d.mean())
    if d_mean == 0.0:
        return 0.0
    var = float(np.sum((d - d_mean) ** 2)) / (n - 2)
    return math.sqrt(var) / d_mean


def curvature(points) -> float:
    """Mean bend of the control polyline, in [0, 1].

    Each interior point contributes (1 - cos theta)/2 where theta is the
    angle between its incoming and outgoing displacement vectors; 0 is a
    straight segment, 1 a full reversal. Zero-length displacements
    contribute 0.
    """
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    if n < 3:
        raise ValueError("curvature needs at least 3 control points")
    v = np.diff(points, axis=0)
    dots = np.sum(v[:-1] * v[1:], axis=1)
    norms = np.linalg.norm(v, axis=1)
    denom = norms[:-1] * norms[1:]
    cos_theta = np.where(denom > 0.0, dots / np.where(denom > 0.0, denom, 1.0), 1.0)
    return float(np.sum(1.0 - cos_theta)) / (2.0 * (n - 2))


def smoothness_cost(points, weights: CostWeights = CostWeights()) -> float:
    """Curvature penalty at full resolution plus, weighted by ``omega_s2``,
    at half resolution.

    The full-resolution term suppresses high-frequency bends; the
    half-resolution term controls how far the curve may swing overall (more
    swing, more hues). A resampled map with fewer than 3 points is straight
    by construction and contributes 0.
    """
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    if n < 5:
        raise ValueError("smoothness needs at least 5 control points")
    total = weights.omega_s1 * curvature(points)
    m = n // 2
    if m >= 3:
        total += weights.omega_s2 * curvature(resample(points, m))
    return total


def luminance_pairs(L, eps: float = LUMINANCE_SLICE_EPS) -> np.ndarray:
    """Index pairs (i < j) whose L* values lie on the same slice."""
    L = np.asarray(L, dtype=np.float64)
    i, j = np.triu_indices(L.shape[0], k=1)
    mask = np.abs(L[i] - L[j]) < eps
    return np.column_stack([i[mask], j[mask]])


def pair_threshold(K: float, i, j, n: int) -> np.ndarray:
    """Minimum required simulated distance for the pair (i, j).

    Grows exponentially with sequence separation, from 0 at i == j to K at
    |i - j| == n - 1, so neighbors may stay similar while distant pairs
    must remain separable.
    """
    sep = np.abs(np.asarray(i, dtype=np.float64) - np.asarray(j, dtype=np.float64))
    return K * (np.exp(sep / (n - 1)) - 1.0) / (math.e - 1.0)


def cvd_cost(points, model: CvdModel, weights: CostWeights = CostWeights()) -> float:
    """Mean shortfall of simulated pair distances below their thresholds.

    Every same-luminance pair is simulated under the model and its CIEDE2000
    distance compared against :func:`pair_threshold`; a pair at or above its
    threshold costs 0, one at zero distance costs 1. With no same-luminance
    pairs the cost is 0.
    """
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    if n < 2:
        raise ValueError("cvd cost needs at least 2 control points")
    pairs = luminance_pairs(points[:, 0])
    if pairs.shape[0] == 0:
        return 0.0
    sim = simulate(points, model)
    de = delta_e_2000(sim[pairs[:, 0]], sim[pairs[:, 1]])
    k_ij = pair_threshold(weights.K, pairs[:, 0], pairs[:, 1], n)
    with np.errstate(divide="ignore", invalid="ignore"):
        shortfall = np.where(de >= k_ij, 0.0, 1.0 - de / np.where(k_ij > 0, k_ij, 1.0))
    # i == j never occurs (pairs are strict), but a zero threshold from a
    # degenerate profile would mean the pair can never fall short
    shortfall = np.where(k_ij <= 0.0, 0.0, shortfall)
    return float(shortfall.mean())


def total_cost(points, model: CvdModel, weights: CostWeights = CostWeights()) -> CostBreakdown:
    """Weighted sum of the three terms, with the per-term values."""
    u = uniformity_cost(points)
    s = smoothness_cost(points, weights)
    c = cvd_cost(points, model, weights)
    total = weights.omega_u * u + weights.omega_s * s + weights.omega_c * c
    return CostBreakdown(uniformity=u, smoothness=s, cvd=c, total=total)
