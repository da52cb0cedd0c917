"""Scikit-learn style front door: configure, fit (= run the optimizer),
then transform scalar data into display colors.

The estimator composes with the wider ecosystem: ``get_params`` /
``set_params`` work with model-selection tooling, ``transform`` maps any
array of scalars through the fitted ramp, and ``to_matplotlib`` hands back
a standard colormap object.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .annealer import Colormap, OptimizerConfig, optimize
from .cost import CostWeights
from .cvd import CvdModel
from .document import ColormapDocument
from .metrics import evaluate
from .preference import PreferenceBlock, PreferenceShelf
from .profiles import LuminanceProfile
from .render import apply_to_field, ramp_lookup

__all__ = ["ColormapGenerator"]


def _as_shelf(X) -> PreferenceShelf:
    if X is None:
        return PreferenceShelf()
    if isinstance(X, PreferenceShelf):
        return X
    blocks = []
    for item in X:
        if isinstance(item, PreferenceBlock):
            blocks.append(item)
        elif isinstance(item, dict):
            blocks.append(PreferenceBlock.from_dict(item))
        else:
            raise TypeError(f"cannot interpret {type(item).__name__} as a preference block")
    return PreferenceShelf(blocks=tuple(blocks))


class ColormapGenerator(BaseEstimator):
    """Generate a perceptually optimized colormap honoring color preferences.

    Parameters
    ----------
    profile : str, default="linear"
        Luminance shape: "linear", "diverging", or "wave", optionally with
        an "-inverted" suffix.
    n : int, default=0
        Control-point count; 0 picks the shape's default (25 linear,
        31 diverging/wave).
    l_min, l_max : float
        Luminance range endpoints in L* units.
    colorfulness : float, default=0.25
        Low-frequency curvature weight in [0, 1]. Lower values free the
        curve to pass through more hues; 0.9 yields restrained designs.
    cvd : str, default="off"
        Deficiency to optimize for, e.g. "deutan", "protan:0.8", or "off".
        When off, the separability term still runs with an identity
        transform, which keeps the map from reusing the same color on
        different luminance arms.
    quality : float, default=1.0
        Multiplier on the per-temperature iteration count (0.25 fast draft,
        4.0 thorough).
    seed : int or None
        Fixing the seed makes generation fully deterministic.

    Attributes
    ----------
    colormap_ : Colormap
        The optimized control points plus their profile.
    cost_ : CostBreakdown
        Objective terms of the returned solution.
    report_ : EvalReport
        Post-hoc scores (uniformity, smoothness, discriminability,
        retention) under the default deficiency model.
    seed_ : int
        The seed actually used (recorded when drawn randomly).

    Examples
    --------
    >>> gen = ColormapGenerator(profile="linear", seed=7, quality=0.25)
    >>> rgb = gen.fit().transform(np.linspace(0, 1, 256))
    """

    def __init__(
        self,
        profile: str = "linear",
        n: int = 0,
        l_min: float = 5.0,
        l_max: float = 95.0,
        colorfulness: float = 0.25,
        cvd: str = "off",
        quality: float = 1.0,
        iter_count: int = 5500,
        step_size: float = 5.0,
        seed: Optional[int] = None,
    ):
        self.profile = profile
        self.n = n
        self.l_min = l_min
        self.l_max = l_max
        self.colorfulness = colorfulness
        self.cvd = cvd
        self.quality = quality
        self.iter_count = iter_count
        self.step_size = step_size
        self.seed = seed

    def _build(self) -> tuple[LuminanceProfile, OptimizerConfig]:
        profile = LuminanceProfile.parse(
            self.profile, n=self.n, l_min=self.l_min, l_max=self.l_max
        )
        config = OptimizerConfig(
            seed=self.seed,
            iter_count=self.iter_count,
            step_size=self.step_size,
            weights=CostWeights(omega_s2=self.colorfulness),
            cvd=CvdModel.parse(self.cvd),
        ).scaled(self.quality)
        return profile, config

    def fit(self, X=None, y=None):
        """Run the optimization. X is an optional preference shelf
        (PreferenceShelf, or an iterable of blocks / block dicts)."""
        profile, config = self._build()
        shelf = _as_shelf(X)
        result = optimize(profile, config, shelf=shelf)
        self.colormap_ = result.colormap
        self.cost_ = result.cost
        self.seed_ = result.seed
        self.shelf_ = shelf
        self.config_ = config
        self.report_ = evaluate(result.colormap.points)
        return self

    def refine(self, X=None):
        """Re-optimize from the current solution at reduced temperature,
        honoring an updated preference shelf."""
        check_is_fitted(self, "colormap_")
        profile, config = self._build()
        shelf = _as_shelf(X) if X is not None else self.shelf_
        result = optimize(profile, config, shelf=shelf, initial=self.colormap_)
        self.colormap_ = result.colormap
        self.cost_ = result.cost
        self.seed_ = result.seed
        self.shelf_ = shelf
        self.report_ = evaluate(result.colormap.points)
        return self

    def transform(self, X) -> np.ndarray:
        """Map scalars in [0, 1] (any array shape) to sRGB rows in [0, 1]."""
        check_is_fitted(self, "colormap_")
        X = np.asarray(X, dtype=np.float64)
        if not np.all(np.isfinite(X)):
            raise ValueError("transform input contains non-finite values")
        from .colorspace import lab_to_srgb

        return lab_to_srgb(ramp_lookup(self.colormap_.points, X))

    def fit_transform(self, X, y=None, preferences=None):
        """Fit with optional preferences, then transform the scalar array X."""
        return self.fit(preferences).transform(X)

    def render(self, field, vmin=None, vmax=None) -> np.ndarray:
        """Map a 2D scalar field to a uint8 RGB image."""
        check_is_fitted(self, "colormap_")
        return apply_to_field(self.colormap_.points, field, vmin=vmin, vmax=vmax)

    def document(self) -> ColormapDocument:
        """The fitted result as a serializable document."""
        check_is_fitted(self, "colormap_")
        from .document import _config_snapshot

        snapshot = _config_snapshot(self.config_)
        snapshot["seed"] = self.seed_
        return ColormapDocument(
            points=self.colormap_.points,
            profile=self.colormap_.profile,
            shelf=self.shelf_,
            config=snapshot,
            cost=self.cost_,
        )

    def to_matplotlib(self, name: str = "ramplab", samples: int = 256):
        """The fitted ramp as a matplotlib ListedColormap (matplotlib must
        be installed)."""
        check_is_fitted(self, "colormap_")
        from matplotlib.colors import ListedColormap

        rgb = self.transform(np.linspace(0.0, 1.0, samples))
        return ListedColormap(rgb, name=name)
