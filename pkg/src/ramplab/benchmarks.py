"""Embedded reference colormaps used for comparison scoring.

Eight widely used designs spanning sequential, diverging, and rainbow
styles; stop lists live in ``data/benchmarks.json`` (see
``scripts/make_benchmarks.py`` for their provenance). Scoring samples each
scale at n equidistant points through this package's own Lab interpolation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .colorspace import resample, srgb_to_lab

__all__ = ["BenchmarkMap", "benchmark", "benchmark_names", "BENCHMARK_DEFAULT_N"]

#: Control points used when scoring a benchmark, by family; matches the
#: counts the generator uses for the corresponding profile shapes.
BENCHMARK_DEFAULT_N = {"sequential": 25, "diverging": 31, "rainbow": 31}


@dataclass(frozen=True)
class BenchmarkMap:
    name: str
    family: str
    source: str
    stops: np.ndarray  # (k, 3) sRGB in [0, 1]

    def __post_init__(self):
        stops = np.asarray(self.stops, dtype=np.float64)
        if stops.min() < 0.0 or stops.max() > 1.0:
            raise ValueError(f"benchmark {self.name} has out-of-range sRGB stops")
        stops.setflags(write=False)
        object.__setattr__(self, "stops", stops)

    @property
    def default_n(self) -> int:
        return BENCHMARK_DEFAULT_N[self.family]

    def lab_points(self, n: int | None = None) -> np.ndarray:
        """The scale sampled at n equidistant points, as Lab control points."""
        if n is None:
            n = self.default_n
        return resample(srgb_to_lab(self.stops), n)


@lru_cache(maxsize=1)
def _load() -> dict[str, BenchmarkMap]:
    raw = json.loads(resources.files("ramplab").joinpath("data/benchmarks.json").read_text())
    return {
        name: BenchmarkMap(name=name, family=d["family"], source=d["source"], stops=d["stops"])
        for name, d in raw.items()
    }


def benchmark_names() -> list[str]:
    return sorted(_load())


def benchmark(name: str) -> BenchmarkMap:
    try:
        return _load()[name]
    except KeyError:
        raise KeyError(f"unknown benchmark {name!r}; available: {benchmark_names()}") from None
