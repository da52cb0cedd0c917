"""Command-line interface: generate, eval, apply, bench, refine, serve.

Exit codes: 0 ok, 1 validation problem, 2 I/O failure, 3 cancelled.
Randomized commands print the seed they used so runs can be reproduced.
"""

from __future__ import annotations

import json
import pathlib
import re
import signal
import sys

import click
import numpy as np

from .annealer import CancelToken, OptimizerConfig, optimize
from .cost import CostWeights
from .cvd import CvdModel
from .document import ColormapDocument, DocumentError, config_from_snapshot
from .metrics import benchmark_sweep, evaluate
from .preference import PreferenceBlock, PreferenceShelf, absorb_edit
from .profiles import LuminanceProfile
from .render import field_to_png, load_field
from .suggest import suggestions as _suggestions

EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_CANCELLED = 3

_PREF_RE = re.compile(
    r"^(?P<L>-?[\d.]+),(?P<A>-?[\d.]+),(?P<B>-?[\d.]+)"
    r"@(?P<center>[\d.]+)"
    r"(?:(?:±|\+-)(?P<extent>[\d.]+))?$"
)


def _parse_pref(text: str) -> PreferenceBlock:
    m = _PREF_RE.match(text.strip())
    if not m:
        raise click.BadParameter(
            f"{text!r}; expected L,A,B@center or L,A,B@center±extent (e.g. 60,40,30@0.5±0.2)"
        )
    extent = m.group("extent")
    return PreferenceBlock(
        color=(float(m.group("L")), float(m.group("A")), float(m.group("B"))),
        center=float(m.group("center")),
        extent=float(extent) if extent else 0.1,
    )


def _detect_format(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    suffix = pathlib.Path(path).suffix.lower()
    return {".json": "json", ".csv": "csv", ".hex": "hex", ".txt": "hex"}.get(suffix, "json")


def _read_document(path: str, format: str | None) -> ColormapDocument:
    fmt = _detect_format(path, format)
    try:
        data = pathlib.Path(path).read_bytes()
    except OSError as exc:
        raise SystemExit(_fail(f"cannot read {path}: {exc}", EXIT_IO))
    return ColormapDocument.import_(data, fmt)


def _write_output(data: bytes, out: str | None):
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        return
    try:
        pathlib.Path(out).write_bytes(data)
    except OSError as exc:
        raise SystemExit(_fail(f"cannot write {out}: {exc}", EXIT_IO))


def _interruptible() -> CancelToken:
    token = CancelToken()

    def handler(signum, frame):
        token.set()

    try:
        signal.signal(signal.SIGINT, handler)
    except ValueError:
        pass  # not on the main thread
    return token


@click.group()
def main():
    """Design and evaluate perceptually optimized continuous colormaps."""


@main.command()
@click.option("--profile", default="linear", help="linear | diverging | wave, plus -inverted.")
@click.option("--n", default=0, help="Control points (0 = profile default).")
@click.option("--lmin", default=5.0, show_default=True, help="Darkest L*.")
@click.option("--lmax", default=95.0, show_default=True, help="Brightest L*.")
@click.option("--colorfulness", default=0.25, show_default=True,
              help="Low-frequency curvature weight in [0,1]; 0.9 restrains hues.")
@click.option("--cvd", default="off", show_default=True,
              help="Deficiency to optimize for: condition[:severity] or 'off'.")
@click.option("--quality", default=1.0, show_default=True,
              help="Iteration multiplier (0.25 draft / 1 default / 4 thorough).")
@click.option("--pref", "prefs", multiple=True,
              help="Preference block L,A,B@center±extent; repeatable.")
@click.option("--seed", type=int, default=None, help="RNG seed for reproducible output.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "hex"]), default="json",
              show_default=True)
@click.option("--out", default=None, help="Output path ('-' for stdout).")
def generate(profile, n, lmin, lmax, colorfulness, cvd, quality, prefs, seed, fmt, out):
    """Generate a colormap from scratch."""
    try:
        prof = LuminanceProfile.parse(profile, n=n, l_min=lmin, l_max=lmax)
        config = OptimizerConfig(
            seed=seed,
            weights=CostWeights(omega_s2=colorfulness),
            cvd=CvdModel.parse(cvd),
        ).scaled(quality)
        shelf = PreferenceShelf(blocks=tuple(_parse_pref(p) for p in prefs))
    except (ValueError, DocumentError) as exc:
        raise SystemExit(_fail(str(exc), EXIT_VALIDATION))

    token = _interruptible()
    result = optimize(prof, config, shelf=shelf, cancel=token)
    click.echo(f"seed: {result.seed}", err=True)
    doc = ColormapDocument.from_result(result, config, shelf=shelf)
    _write_output(doc.export(fmt), out)
    if result.cancelled:
        raise SystemExit(EXIT_CANCELLED)


@main.command("eval")
@click.argument("map_path")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "hex"]), default=None)
@click.option("--cvd", default="deutan:1", show_default=True, help="Model for retention scoring.")
def eval_cmd(map_path, fmt, cvd):
    """Score a colormap: uniformity, smoothness, discriminability, retention."""
    try:
        doc = _read_document(map_path, fmt)
        model = CvdModel.parse(cvd)
        report = evaluate(doc.points, model if not model.is_identity else CvdModel())
    except DocumentError as exc:
        raise SystemExit(_fail(str(exc), EXIT_VALIDATION))
    click.echo(json.dumps(report.to_dict(), indent=1))


@main.command()
@click.argument("map_path")
@click.argument("field_path")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "hex"]), default=None)
@click.option("--vmin", type=float, default=None, help="Fixed lower data bound.")
@click.option("--vmax", type=float, default=None, help="Fixed upper data bound.")
@click.option("--out", default="out.png", show_default=True)
def apply(map_path, field_path, fmt, vmin, vmax, out):
    """Render a scalar field (CSV grid or grayscale PNG) through a colormap."""
    try:
        doc = _read_document(map_path, fmt)
    except DocumentError as exc:
        raise SystemExit(_fail(str(exc), EXIT_VALIDATION))
    try:
        field = load_field(field_path)
    except (OSError, FileNotFoundError) as exc:
        raise SystemExit(_fail(f"cannot read {field_path}: {exc}", EXIT_IO))
    except ValueError as exc:
        raise SystemExit(_fail(str(exc), EXIT_VALIDATION))
    _write_output(field_to_png(doc.points, field, vmin=vmin, vmax=vmax), out)


@main.command()
@click.option("--count", default=50, show_default=True, help="Maps per sweep.")
@click.option("--family", type=click.Choice(["sequential", "diverging"]), default="sequential",
              show_default=True)
@click.option("--colorfulness", default=0.25, show_default=True)
@click.option("--cvd/--no-cvd", default=False, help="Optimize sweeps for deuteranopia.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--iter-count", default=5500, show_default=True)
@click.option("--out", default=None, help="CSV output path ('-' for stdout).")
def bench(count, family, colorfulness, cvd, seed, iter_count, out):
    """Generate a batch and score it against the embedded benchmarks."""
    click.echo(f"seed: {seed}", err=True)
    sweep = benchmark_sweep(
        count, family=family, colorfulness=colorfulness, cvd=cvd,
        seed=seed, iter_count=iter_count,
        progress=lambda k, total: click.echo(f"\r{k}/{total}", err=True, nl=(k == total)),
    )
    _write_output(sweep.to_csv().encode(), out)
    summary = {
        "median": {m: sweep.median(m) for m in
                   ("uniformity", "smoothness", "discriminability", "retention")},
        "benchmarks": {name: rep.to_dict() for name, rep in sweep.benchmark_reports.items()},
    }
    click.echo(json.dumps(summary, indent=1), err=True)


@main.command()
@click.argument("map_path")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "hex"]), default=None)
@click.option("--pref", "prefs", multiple=True, help="Extra preference blocks (absorbed as edits).")
@click.option("--quality", default=1.0, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--out-format", type=click.Choice(["json", "csv", "hex"]), default="json",
              show_default=True)
@click.option("--out", default=None)
def refine(map_path, fmt, prefs, quality, seed, out_format, out):
    """Warm-restart optimization of an existing colormap with new preferences."""
    try:
        doc = _read_document(map_path, fmt)
        colormap = doc.colormap()
    except DocumentError as exc:
        raise SystemExit(_fail(str(exc), EXIT_VALIDATION))
    shelf = doc.shelf
    for p in prefs:
        block = _parse_pref(p)
        shelf = absorb_edit(shelf, block.center, block.color, extent=block.extent)
    config = config_from_snapshot(doc.config)
    if seed is not None:
        config = OptimizerConfig(**{**config.__dict__, "seed": seed})
    config = config.scaled(quality)

    token = _interruptible()
    result = optimize(colormap.profile, config, shelf=shelf, initial=colormap, cancel=token)
    click.echo(f"seed: {result.seed}", err=True)
    new_doc = ColormapDocument.from_result(result, config, shelf=shelf)
    _write_output(new_doc.export(out_format), out)
    if result.cancelled:
        raise SystemExit(EXIT_CANCELLED)


@main.command()
@click.argument("map_path")
@click.argument("t", type=float)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "hex"]), default=None)
def suggest(map_path, t, fmt):
    """Chroma/hue alternatives for the color at scale position t."""
    try:
        doc = _read_document(map_path, fmt)
    except DocumentError as exc:
        raise SystemExit(_fail(str(exc), EXIT_VALIDATION))
    click.echo(json.dumps(_suggestions(doc.points, t), indent=1))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8750, show_default=True, envvar="RAMPLAB_PORT")
@click.option("--parallel/--serial", default=False,
              help="Run queued jobs concurrently instead of one at a time.")
def serve(host, port, parallel):
    """Start the local HTTP service (and studio UI when built)."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(parallel=parallel), host=host, port=port)


def _fail(message: str, code: int) -> int:
    click.echo(f"error: {message}", err=True)
    return code


if __name__ == "__main__":
    main()
