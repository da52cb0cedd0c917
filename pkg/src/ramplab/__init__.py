"""Perceptually uniform, CVD-accessible continuous colormap generation.

Colormaps are sequences of CIE Lab control points with a pinned luminance
profile, searched by biased simulated annealing against uniformity,
smoothness, and deficiency-separability objectives, and steerable through
approximate user color preferences.
"""

from .annealer import (
    AnnealProgress,
    CancelToken,
    Colormap,
    OptimizeResult,
    OptimizerConfig,
    optimize,
    refine,
)
from .benchmarks import BenchmarkMap, benchmark, benchmark_names
from .colorspace import (
    delta_e_2000,
    in_gamut,
    lab_to_lch,
    lab_to_srgb,
    lch_to_lab,
    lerp_lab,
    resample,
    srgb_to_lab,
)
from .cost import (
    CostBreakdown,
    CostWeights,
    curvature,
    cvd_cost,
    smoothness_cost,
    total_cost,
    uniformity_cost,
)
from .cvd import CvdModel, cvd_matrix, simulate
from .document import ColormapDocument
from .estimator import ColormapGenerator
from .metrics import EvalReport, benchmark_sweep, cvd_discriminability, discriminability, evaluate
from .preference import PreferenceBlock, PreferenceShelf, absorb_edit, blend_direction, compute_bias
from .profiles import LuminanceProfile
from .render import apply_to_field, ramp_lookup

__version__ = "0.1.0"

__all__ = [
    "AnnealProgress",
    "BenchmarkMap",
    "CancelToken",
    "Colormap",
    "ColormapDocument",
    "ColormapGenerator",
    "CostBreakdown",
    "CostWeights",
    "CvdModel",
    "EvalReport",
    "LuminanceProfile",
    "OptimizeResult",
    "OptimizerConfig",
    "PreferenceBlock",
    "PreferenceShelf",
    "absorb_edit",
    "apply_to_field",
    "benchmark",
    "benchmark_names",
    "benchmark_sweep",
    "blend_direction",
    "compute_bias",
    "curvature",
    "cvd_cost",
    "cvd_discriminability",
    "cvd_matrix",
    "delta_e_2000",
    "discriminability",
    "evaluate",
    "in_gamut",
    "lab_to_lch",
    "lab_to_srgb",
    "lch_to_lab",
    "lerp_lab",
    "optimize",
    "ramp_lookup",
    "refine",
    "resample",
    "simulate",
    "smoothness_cost",
    "srgb_to_lab",
    "total_cost",
    "uniformity_cost",
    "__version__",
]
