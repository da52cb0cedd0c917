#!/usr/bin/env python3
"""Regenerate src/ramplab/data/benchmarks.json from canonical sources.

Stop lists come from:
  * viridis, plasma  — matplotlib's 256-entry listed tables (the original
    mpl-colormaps release by van der Walt & Smith, CC0)
  * coolwarm         — matplotlib's 'coolwarm', Moreland's smooth diverging
    design, sampled at 257 points
  * blues, red-grey, red-blue, spectral — ColorBrewer 9/11-class classes
    (Brewer & Harrower, colorbrewer2.org)
  * d3-rainbow       — d3-scale-chromatic interpolateRainbow (cubehelix
    formula), sampled at 256 points

Run from the repository root: python3 scripts/make_benchmarks.py
"""

import json
import math
import pathlib

import matplotlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "ramplab" / "data" / "benchmarks.json"

BREWER = {
    "blues": [
        (247, 251, 255), (222, 235, 247), (198, 219, 239), (158, 202, 225),
        (107, 174, 214), (66, 146, 198), (33, 113, 181), (8, 81, 156), (8, 48, 107),
    ],
    "red-grey": [
        (103, 0, 31), (178, 24, 43), (214, 96, 77), (244, 165, 130), (253, 219, 199),
        (255, 255, 255), (224, 224, 224), (186, 186, 186), (135, 135, 135),
        (77, 77, 77), (26, 26, 26),
    ],
    "red-blue": [
        (103, 0, 31), (178, 24, 43), (214, 96, 77), (244, 165, 130), (253, 219, 199),
        (247, 247, 247), (209, 229, 240), (146, 197, 222), (67, 147, 195),
        (33, 102, 172), (5, 48, 97),
    ],
    "spectral": [
        (158, 1, 66), (213, 62, 79), (244, 109, 67), (253, 174, 97), (254, 224, 139),
        (255, 255, 191), (230, 245, 152), (171, 221, 164), (102, 194, 165),
        (50, 136, 189), (94, 79, 162),
    ],
}


def d3_rainbow(t: float) -> tuple[float, float, float]:
    """d3.interpolateRainbow: cubehelix with rotating hue and seesaw l/s."""
    ts = abs(t - 0.5)
    h = 360.0 * t - 100.0
    s = 1.5 - 1.5 * ts
    l = 0.8 - 0.9 * ts
    # cubehelix -> rgb, constants from d3-color
    A, B, C, D, E = -0.14861, +1.78277, -0.29227, -0.90649, +1.97294
    hr = math.radians(h + 120.0)
    a = s * l * (1 - l)
    cosh, sinh = math.cos(hr), math.sin(hr)
    r = l + a * (A * cosh + B * sinh)
    g = l + a * (C * cosh + D * sinh)
    b = l + a * (E * cosh)
    return tuple(min(max(v, 0.0), 1.0) for v in (r, g, b))


def mpl_stops(name: str, count: int) -> list[list[float]]:
    cmap = matplotlib.colormaps[name]
    return [[float(v) for v in cmap(i / (count - 1))[:3]] for i in range(count)]


def main():
    maps = {}
    maps["viridis"] = {
        "family": "sequential",
        "source": "matplotlib viridis (mpl-colormaps, CC0), 256 stops",
        "stops": mpl_stops("viridis", 256),
    }
    maps["plasma"] = {
        "family": "sequential",
        "source": "matplotlib plasma (mpl-colormaps, CC0), 256 stops",
        "stops": mpl_stops("plasma", 256),
    }
    maps["cool-warm"] = {
        "family": "diverging",
        "source": "matplotlib coolwarm (Moreland 2009 smooth diverging), 257 stops",
        "stops": mpl_stops("coolwarm", 257),
    }
    for name, rgb255 in BREWER.items():
        maps[name] = {
            "family": "diverging" if name in ("red-grey", "red-blue") else
                      ("rainbow" if name == "spectral" else "sequential"),
            "source": f"ColorBrewer {len(rgb255)}-class (colorbrewer2.org)",
            "stops": [[v / 255.0 for v in rgb] for rgb in rgb255],
        }
    maps["d3-rainbow"] = {
        "family": "rainbow",
        "source": "d3-scale-chromatic interpolateRainbow (cubehelix), 256 stops",
        "stops": [list(d3_rainbow(i / 255.0)) for i in range(256)],
    }

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(maps, indent=1))
    print(f"wrote {OUT} ({len(maps)} maps)")


if __name__ == "__main__":
    main()
