"""Post-hoc colormap scoring and batch comparison against the benchmarks.

Discriminability is the mean pairwise CIEDE2000 distance over all control
points; its ratio after CVD simulation ("retention") measures how much
distinctive power a deficient viewer keeps.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .annealer import OptimizerConfig, optimize
from .benchmarks import BENCHMARK_DEFAULT_N, benchmark, benchmark_names
from .colorspace import delta_e_2000
from .cost import CostWeights, curvature, uniformity_cost
from .cvd import CvdModel, simulate
from .profiles import LuminanceProfile

__all__ = [
    "EvalReport",
    "discriminability",
    "cvd_discriminability",
    "evaluate",
    "SweepResult",
    "benchmark_sweep",
]


def discriminability(points) -> float:
    """Mean pairwise CIEDE2000 distance, 2/(n(n-1)) * sum over i < j."""
    points = np.asarray(points, dtype=np.float64)
    n = points.shape[0]
    if n < 2:
        raise ValueError("discriminability needs at least 2 control points")
    i, j = np.triu_indices(n, k=1)
    return float(delta_e_2000(points[i], points[j]).mean())


def cvd_discriminability(points, model: CvdModel) -> float:
    """Discriminability with every color replaced by its simulated appearance."""
    return discriminability(simulate(points, model))


@dataclass(frozen=True)
class EvalReport:
    """Scores for one colormap at its native control-point count."""

    uniformity: float
    smoothness: float
    discriminability: float
    cvd_discriminability: float
    retention: float
    n: int

    def to_dict(self) -> dict:
        return {
            "uniformity": self.uniformity,
            "smoothness": self.smoothness,
            "discriminability": self.discriminability,
            "cvd_discriminability": self.cvd_discriminability,
            "retention": self.retention,
            "n": self.n,
        }


def evaluate(points, model: CvdModel = CvdModel()) -> EvalReport:
    """Score a control-point sequence.

    ``smoothness`` here is the plain full-resolution curvature (the
    comparison metric), not the weighted two-scale optimization term, so
    scores are comparable across maps regardless of weight settings.
    """
    points = np.asarray(points, dtype=np.float64)
    disc = discriminability(points)
    cvd_disc = cvd_discriminability(points, model)
    return EvalReport(
        uniformity=uniformity_cost(points),
        smoothness=curvature(points),
        discriminability=disc,
        cvd_discriminability=cvd_disc,
        retention=cvd_disc / disc if disc > 0 else 1.0,
        n=points.shape[0],
    )


_SWEEP_CSV_FIELDS = [
    "seed",
    "family",
    "colorfulness",
    "cvd",
    "uniformity",
    "smoothness",
    "discriminability",
    "cvd_discriminability",
    "retention",
]


@dataclass(frozen=True)
class SweepResult:
    """Batch scores for generated maps plus matched benchmark scores."""

    family: str
    colorfulness: float
    cvd_enabled: bool
    seeds: list[int]
    reports: list[EvalReport]
    benchmark_reports: dict[str, EvalReport]

    def quantiles(self, metric: str, q=(0.1, 0.25, 0.5, 0.75, 0.9)) -> dict[float, float]:
        values = np.array([getattr(r, metric) for r in self.reports])
        return {qq: float(np.quantile(values, qq)) for qq in q}

    def median(self, metric: str) -> float:
        return self.quantiles(metric, (0.5,))[0.5]

    def mean(self, metric: str) -> float:
        return float(np.mean([getattr(r, metric) for r in self.reports]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_SWEEP_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for seed, rep in zip(self.seeds, self.reports):
            writer.writerow(
                {
                    "seed": seed,
                    "family": self.family,
                    "colorfulness": self.colorfulness,
                    "cvd": "on" if self.cvd_enabled else "off",
                    "uniformity": repr(rep.uniformity),
                    "smoothness": repr(rep.smoothness),
                    "discriminability": repr(rep.discriminability),
                    "cvd_discriminability": repr(rep.cvd_discriminability),
                    "retention": repr(rep.retention),
                }
            )
        return buf.getvalue()

    def histogram(self, metric: str, bins: int = 20) -> dict:
        values = np.array([getattr(r, metric) for r in self.reports])
        counts, edges = np.histogram(values, bins=bins)
        return {"metric": metric, "counts": counts.tolist(), "edges": edges.tolist()}


def benchmark_sweep(
    count: int,
    family: str = "sequential",
    colorfulness: float = 0.25,
    cvd: bool = False,
    seed: int = 0,
    iter_count: int = 5500,
    scoring_model: Optional[CvdModel] = None,
    progress: Optional[callable] = None,
) -> SweepResult:
    """Generate ``count`` maps and score them alongside the benchmarks.

    Each map draws its own luminance range (start uniform in [5, 15], end
    uniform in [85, 95]) to promote design diversity, mirroring the spread
    found across the benchmark designs. ``colorfulness`` is the
    low-frequency curvature weight (0.9 restrains hues, 0.25 frees them);
    ``cvd`` toggles deuteranopia-aware generation. All maps, generated and
    benchmark alike, are scored under ``scoring_model`` (deutan 1.0 by
    default) at the family's control-point count.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if family not in ("sequential", "diverging"):
        raise ValueError("family must be 'sequential' or 'diverging'")
    kind = "linear" if family == "sequential" else "diverging"
    n = BENCHMARK_DEFAULT_N[family]
    model = scoring_model if scoring_model is not None else CvdModel()
    gen_cvd = CvdModel() if cvd else CvdModel.none()
    weights = CostWeights(omega_s2=colorfulness)

    rng = np.random.default_rng(seed)
    seeds = []
    reports = []
    for k in range(count):
        l0 = rng.uniform(5.0, 15.0)
        l1 = rng.uniform(85.0, 95.0)
        run_seed = int(rng.integers(0, 2**31))
        seeds.append(run_seed)
        profile = LuminanceProfile(kind=kind, l_min=l0, l_max=l1, n=n)
        config = OptimizerConfig(seed=run_seed, iter_count=iter_count, weights=weights, cvd=gen_cvd)
        result = optimize(profile, config)
        reports.append(evaluate(result.colormap.points, model))
        if progress is not None:
            progress(k + 1, count)

    bench_reports = {}
    for name in benchmark_names():
        bm = benchmark(name)
        if family == "sequential" and bm.family != "sequential":
            continue
        if family == "diverging" and bm.family == "sequential":
            continue
        bench_reports[name] = evaluate(bm.lab_points(n), model)

    return SweepResult(
        family=family,
        colorfulness=colorfulness,
        cvd_enabled=cvd,
        seeds=seeds,
        reports=reports,
        benchmark_reports=bench_reports,
    )
