"""Simulated annealing over profile-constrained colormaps.

The search walks the chromatic (A, B) components of the control points;
luminance is pinned to the profile and never written after initialization.
Perturbation directions blend a uniform random direction with the
preference-shelf bias 40/60, candidates outside the display gamut are
rejection-resampled, and worse solutions are accepted with logistic
probability 1/(1 + e^(delta/T)) on a geometric cooling ladder.

Refinement reuses a previous solution as the starting state at a reduced
temperature, preserving global structure while responding to edits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from . import _kernel
from .colorspace import GAMUT_TOL, in_gamut
from .cost import CostBreakdown, CostWeights, luminance_pairs, pair_threshold
from .cvd import CvdModel
from .preference import PreferenceShelf, blend_direction, compute_bias
from .profiles import LuminanceProfile

__all__ = [
    "OptimizerConfig",
    "Colormap",
    "AnnealProgress",
    "OptimizeResult",
    "CancelToken",
    "random_init",
    "perturb",
    "accept",
    "optimize",
    "refine",
    "rung_count",
]


@dataclass(frozen=True)
class OptimizerConfig:
    """Annealing schedule, step size, weights and deficiency model."""

    t_init: float = 1.0
    t_end: float = 0.0001
    alpha: float = 0.925
    iter_count: int = 5500
    step_size: float = 5.0
    restart_temp: float = 0.1
    seed: Optional[int] = None
    weights: CostWeights = field(default_factory=CostWeights)
    cvd: CvdModel = field(default_factory=CvdModel.none)
    track_global_best: bool = True

    def __post_init__(self):
        if not (0.0 < self.t_end < self.t_init):
            raise ValueError("need 0 < t_end < t_init")
        if not (0.0 < self.alpha < 1.0):
            raise ValueError("cooling rate must be in (0, 1)")
        if self.iter_count < 1:
            raise ValueError("iter_count must be >= 1")
        if self.step_size <= 0:
            raise ValueError("step_size must be positive")

    def scaled(self, quality: float) -> "OptimizerConfig":
        """Scale the per-rung iteration count by a quality factor."""
        return replace(self, iter_count=max(1, round(self.iter_count * quality)))


@dataclass(frozen=True)
class Colormap:
    """A profile plus its control points; L* matches the profile exactly."""

    points: np.ndarray
    profile: LuminanceProfile

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        self.validate()

    def validate(self):
        if self.points.shape != (self.profile.n, 3):
            raise ValueError(
                f"expected {self.profile.n} control points, got shape {self.points.shape}"
            )
        if not np.array_equal(self.points[:, 0], self.profile.values()):
            raise ValueError("control-point luminance must match the profile exactly")
        bad = np.nonzero(~in_gamut(self.points))[0]
        if bad.size:
            raise ValueError(f"control point {bad[0]} is outside the display gamut")

    @property
    def n(self) -> int:
        return self.profile.n


@dataclass(frozen=True)
class AnnealProgress:
    """Snapshot emitted once per temperature rung."""

    temperature: float
    iterations_done: int
    rung: int
    rung_total: int
    cost: CostBreakdown
    best: Colormap


@dataclass(frozen=True)
class OptimizeResult:
    colormap: Colormap
    cost: CostBreakdown
    seed: int
    cancelled: bool
    iterations_done: int


class CancelToken:
    """Cooperative cancellation shared with the compiled loop.

    The flag lives in a one-element array the kernel polls every iteration,
    so cancellation latency is bounded by a single perturbation.
    """

    def __init__(self):
        self._flag = np.zeros(1, dtype=np.int64)

    def set(self):
        self._flag[0] = 1

    def is_set(self) -> bool:
        return bool(self._flag[0])


def rung_count(t_start: float, t_end: float, alpha: float) -> int:
    """Number of temperature rungs in the geometric ladder."""
    return math.ceil(math.log(t_end / t_start) / math.log(alpha))


def accept(delta: float, temperature: float, rng: np.random.Generator) -> bool:
    """Logistic acceptance: improvements always pass, worse solutions pass
    with probability 1/(1 + e^(delta/T))."""
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    if delta <= 0:
        return True
    return rng.random() < 1.0 / (1.0 + math.exp(delta / temperature))


def random_init(profile: LuminanceProfile, seed: int) -> Colormap:
    """Random displayable start: L pinned to the profile, chromatic
    components uniform over the in-gamut slice."""
    points = np.empty((profile.n, 3))
    _kernel._seed(seed % (2**32))
    _kernel._init_random(points, profile.values(), GAMUT_TOL)
    return Colormap(points=points, profile=profile)


def perturb(
    colormap: Colormap,
    index: int,
    shelf: PreferenceShelf,
    rng: np.random.Generator,
    step_size: float = 5.0,
) -> Colormap:
    """Offset one control point's (A, B) along a bias-blended direction.

    Direction and magnitude are redrawn until the candidate stays in gamut;
    luminance is untouched. Reference implementation of the move the
    compiled loop applies.
    """
    points = np.array(colormap.points)
    n = points.shape[0]
    bias = compute_bias(index, points[index], shelf, n)
    scale = 1.0
    for attempt in range(50):
        theta = rng.random() * 2.0 * math.pi
        r = np.array([0.0, math.cos(theta), math.sin(theta)])
        # the 60/40 blend caps direction spread; when the bias pins a
        # boundary point, later attempts go unbiased with a shrinking step
        if attempt < 20:
            o = blend_direction(r, bias)
        else:
            o = r
            scale *= 0.9
        mag = (1.0 - rng.random()) * step_size * scale
        candidate = points[index] + mag * o
        if in_gamut(candidate):
            points[index] = candidate
            break
    return Colormap(points=points, profile=colormap.profile)


def _shelf_arrays(shelf: Optional[PreferenceShelf], n: int):
    blocks = list(shelf) if shelf is not None else []
    mu = np.array([b.center * (n - 1) for b in blocks])
    sigma = np.array([0.5 * b.extent * (n - 1) for b in blocks])
    a = np.array([b.color[1] for b in blocks])
    bb = np.array([b.color[2] for b in blocks])
    return mu, sigma, a, bb


def _pair_csr(pairs: np.ndarray, n: int):
    """Per-index adjacency over the same-luminance pair list."""
    counts = np.zeros(n + 1, dtype=np.int64)
    for i, j in pairs:
        counts[i + 1] += 1
        counts[j + 1] += 1
    ptr = np.cumsum(counts)
    lst = np.empty(ptr[-1], dtype=np.int64)
    cursor = ptr[:-1].copy()
    for t, (i, j) in enumerate(pairs):
        lst[cursor[i]] = t
        cursor[i] += 1
        lst[cursor[j]] = t
        cursor[j] += 1
    return ptr, lst


def _resample_positions(n: int):
    m = n // 2
    if m < 3:
        return np.empty(0, dtype=np.int64), np.empty(0)
    k = np.arange(m)
    pos = k * (n - 1) / (m - 1)
    idx = np.minimum(pos.astype(np.int64), n - 2)
    return idx, pos - idx


def optimize(
    profile: LuminanceProfile,
    config: OptimizerConfig = OptimizerConfig(),
    shelf: Optional[PreferenceShelf] = None,
    initial: Optional[Colormap] = None,
    progress: Optional[Callable[[AnnealProgress], None]] = None,
    cancel: Optional[CancelToken] = None,
) -> OptimizeResult:
    """Run the full annealing ladder and return the best state visited.

    Starts from a random displayable colormap at ``t_init``, or from
    ``initial`` at ``restart_temp`` when given (warm restart). Deterministic
    for a fixed seed. Emits one progress snapshot per rung; a cancel token
    stops the run within one iteration and the best-so-far is returned.
    """
    n = profile.n
    L = profile.values()
    w = config.weights

    seed = config.seed
    if seed is None:
        seed = int(np.random.SeedSequence().entropy % (2**63))
    _kernel._seed(seed % (2**32))

    points = np.empty((n, 3))
    if initial is not None:
        if initial.profile != profile:
            raise ValueError("initial colormap does not match the profile")
        points[:] = initial.points
        t_start = config.restart_temp
    else:
        _kernel._init_random(points, L, GAMUT_TOL)
        t_start = config.t_init

    pairs = luminance_pairs(L)
    k_ij = (
        pair_threshold(w.K, pairs[:, 0], pairs[:, 1], n)
        if pairs.shape[0]
        else np.empty(0)
    )
    pairs = np.ascontiguousarray(pairs.astype(np.int64).reshape(-1, 2))
    ptr, lst = _pair_csr(pairs, n)
    max_deg = int(np.max(np.diff(ptr))) if ptr[-1] else 1
    rs_idx, rs_alpha = _resample_positions(n)

    adj_de = np.empty(n - 1)
    sim = np.empty((n, 3))
    psi_de = np.empty(pairs.shape[0])
    scratch = np.empty((max(rs_idx.shape[0], 3), 3))
    psi_save = np.empty(max_deg)
    blk_mu, blk_sigma, blk_a, blk_b = _shelf_arrays(shelf, n)
    M = np.ascontiguousarray(config.cvd.matrix)
    use_srgb = config.cvd.space == "srgb"

    u, s, c, total = _kernel._eval_full(
        points, adj_de, sim, psi_de, pairs, k_ij, M, use_srgb, rs_idx, rs_alpha,
        scratch, w.omega_u, w.omega_s, w.omega_c, w.omega_s2,
    )
    best_points = points.copy()
    e_cur = total
    e_best = total

    rungs = rung_count(t_start, config.t_end, config.alpha)
    token = cancel if cancel is not None else CancelToken()
    iterations = 0
    cancelled = False

    report_adj = np.empty_like(adj_de)
    report_sim = np.empty_like(sim)
    report_psi = np.empty_like(psi_de)

    for k in range(rungs):
        T = t_start * config.alpha**k
        e_cur, e_best, done = _kernel._anneal_rung(
            points, adj_de, sim, psi_de, pairs, k_ij, ptr, lst,
            rs_idx, rs_alpha, scratch, psi_save,
            blk_mu, blk_sigma, blk_a, blk_b, M, use_srgb,
            w.omega_u, w.omega_s, w.omega_c, w.omega_s2,
            T, config.iter_count, config.step_size, GAMUT_TOL,
            best_points, e_cur, e_best, config.track_global_best, token._flag,
        )
        iterations += done
        if progress is not None:
            shown = best_points if config.track_global_best else points
            ru, rs_, rc, rtotal = _kernel._eval_full(
                shown, report_adj, report_sim, report_psi, pairs, k_ij, M, use_srgb,
                rs_idx, rs_alpha, scratch, w.omega_u, w.omega_s, w.omega_c, w.omega_s2,
            )
            progress(
                AnnealProgress(
                    temperature=T,
                    iterations_done=iterations,
                    rung=k + 1,
                    rung_total=rungs,
                    cost=CostBreakdown(ru, rs_, rc, rtotal),
                    best=Colormap(points=shown.copy(), profile=profile),
                )
            )
        if token.is_set():
            cancelled = True
            break

    final_points = best_points if config.track_global_best else points
    fu, fs, fc, ftotal = _kernel._eval_full(
        final_points, report_adj, report_sim, report_psi, pairs, k_ij, M, use_srgb,
        rs_idx, rs_alpha, scratch, w.omega_u, w.omega_s, w.omega_c, w.omega_s2,
    )
    return OptimizeResult(
        colormap=Colormap(points=final_points.copy(), profile=profile),
        cost=CostBreakdown(fu, fs, fc, ftotal),
        seed=seed,
        cancelled=cancelled,
        iterations_done=iterations,
    )


def refine(
    previous: Colormap,
    config: OptimizerConfig = OptimizerConfig(),
    shelf: Optional[PreferenceShelf] = None,
    progress: Optional[Callable[[AnnealProgress], None]] = None,
    cancel: Optional[CancelToken] = None,
) -> OptimizeResult:
    """Warm-restart optimization from a previous solution."""
    return optimize(
        previous.profile, config, shelf=shelf, initial=previous,
        progress=progress, cancel=cancel,
    )
