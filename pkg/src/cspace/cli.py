"""Command-line front end.

Subcommands::

    cspace surface      one metric surface -> CSV / JSON / SVG
    cspace sensitivity  sensitivity curves over a ratio schedule
    cspace compare      rank metrics by sensitivity at one ratio
    cspace reproduce    emit the bundled showcase figures + manifest

Ratio schedules are either an explicit comma list (``1,2,5``) or a geometric
range ``start:stop:factor`` (inclusive start; stop included when hit
exactly).  The environment variable ``CSPACE_OUT_DIR`` sets the default
output directory.  Exit status is 0 on success and 2 on usage or
configuration errors; files are written to a temporary name and renamed on
success, so failed runs leave no partial outputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .errors import CspaceError, UsageError
from .formats import curve_to_csv, curves_to_json, surface_to_csv, surface_to_json
from .metrics import MetricDescriptor, get_metric, list_metrics
from .render import RenderSpec, render_curves_svg, render_surface_pair_svg, render_surface_svg
from .sensitivity import (
    DEFAULT_AGNOSTIC_TOL,
    RatioSchedule,
    log_growth_check,
    sensitivity,
    sensitivity_curve,
)
from .surface import DEFAULT_RESOLUTION, GridSpec, build_surface

__all__ = ["main"]


def _default_out_dir() -> Path:
    return Path(os.environ.get("CSPACE_OUT_DIR", "."))


def _write_text(path: Path, text: str) -> None:
    # Write-to-temp + rename keeps outputs atomic: either the full file
    # appears or nothing does.
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _parse_schedule(spec: str) -> RatioSchedule:
    s = spec.strip()
    if ":" in s:
        parts = s.split(":")
        if len(parts) != 3:
            raise UsageError(f"geometric schedule must be start:stop:factor, got {spec!r}")
        try:
            start, stop, factor = (float(p) for p in parts)
        except ValueError as exc:
            raise UsageError(f"invalid geometric schedule {spec!r}") from exc
        return RatioSchedule.geometric(start, stop, factor)
    try:
        ratios = tuple(float(p) for p in s.split(","))
    except ValueError as exc:
        raise UsageError(f"invalid ratio list {spec!r}") from exc
    return RatioSchedule(ratios)


def _parse_metrics(spec: str) -> list[MetricDescriptor]:
    ids = [part.strip() for part in spec.split(",") if part.strip()]
    if not ids:
        raise UsageError("no metrics named")
    return [get_metric(mid) for mid in ids]


def _cmd_surface(args: argparse.Namespace) -> int:
    metric = get_metric(args.metric)
    grid = GridSpec(args.t)
    surf = build_surface(metric, args.ratio, grid)
    if args.out:
        out = Path(args.out)
    else:
        out = _default_out_dir() / f"surface_{metric.id}_r{surf.ratio:g}_t{args.t}.{args.format}"
    if args.format == "csv":
        text = surface_to_csv(surf)
    elif args.format == "json":
        text = surface_to_json(surf)
    else:
        text = render_surface_svg(surf, RenderSpec())
    _write_text(out, text)
    vals = surf.values
    print(
        f"surface metric={metric.id} r={surf.ratio:g} t={args.t} "
        f"min={np.min(vals):.9g} max={np.max(vals):.9g} mean={np.mean(vals):.9g} -> {out}"
    )
    return 0


def _cmd_sensitivity(args: argparse.Namespace) -> int:
    if args.tol <= 0:
        raise UsageError(f"--tol must be positive, got {args.tol!r}")
    metrics = _parse_metrics(args.metrics)
    schedule = _parse_schedule(args.ratios)
    grid = GridSpec(args.t)
    out_dir = Path(args.out_dir) if args.out_dir else _default_out_dir()
    curves = [sensitivity_curve(m, schedule, grid) for m in metrics]

    if args.format == "json":
        _write_text(out_dir / "sensitivity.json", curves_to_json(curves))
    else:
        for curve in curves:
            _write_text(out_dir / f"sensitivity_{curve.metric_id}.csv", curve_to_csv(curve))
    if args.svg:
        _write_text(out_dir / args.svg, render_curves_svg(curves, RenderSpec(log_x=args.log_x)))

    for curve in curves:
        distinct_ge1 = len({r for r in curve.ratios if r >= 1.0})
        growth = ""
        if distinct_ge1 >= 3:
            report = log_growth_check(curve)
            growth = " growth=" + ("logarithmic-like" if report.logarithmic_like else "irregular")
        if all(s <= args.tol for s in curve.values):
            print(f"{curve.metric_id}: agnostic (tol={args.tol:g})")
        else:
            print(f"{curve.metric_id}: sensitive max_s={max(curve.values):.9g}{growth}")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    metrics = _parse_metrics(args.metrics)
    if len(metrics) < 2:
        raise UsageError("compare needs at least two metrics")
    grid = GridSpec(args.t)
    rows = sorted(
        ((sensitivity(m, args.ratio, grid), m.id) for m in metrics),
        key=lambda pair: (-pair[0], pair[1]),
    )
    print(f"rank  metric       s@r={args.ratio:g}")
    for rank, (s, mid) in enumerate(rows, start=1):
        print(f"{rank:>4}  {mid:<11}  {s:.9g}")
    if args.svg:
        schedule = _parse_schedule(args.ratios)
        curves = [sensitivity_curve(m, schedule, grid) for m in metrics]
        out_dir = Path(args.out_dir) if args.out_dir else _default_out_dir()
        _write_text(out_dir / args.svg, render_curves_svg(curves, RenderSpec(log_x=args.log_x)))
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir) if args.out_dir else _default_out_dir()
    grid = GridSpec(args.t)
    schedule = _parse_schedule(args.ratios)
    spec = RenderSpec()

    f1 = get_metric("f1")
    balanced = build_surface(f1, 1.0, grid)
    skewed = build_surface(f1, 49.0, grid)
    core = [m for m in list_metrics() if not m.extension]
    curves = [sensitivity_curve(m, schedule, grid) for m in core]

    files = {
        "fig2_f1_contour_r1.svg": render_surface_svg(balanced, spec),
        "fig3_f1_contours_r1_r49.svg": render_surface_pair_svg(balanced, skewed, spec),
        "fig4_sensitivity_curves.svg": render_curves_svg(curves, RenderSpec(log_x=True)),
    }
    manifest = {
        "files": sorted(files),
        "parameters": {
            "t": args.t,
            "surface_metric": "f1",
            "surface_ratios": [1.0, 49.0],
            "curve_metrics": [m.id for m in core],
            "schedule": list(schedule.ratios),
            "contour_levels": list(spec.contour_levels),
        },
        "version": __version__,
    }
    for name, text in files.items():
        _write_text(out_dir / name, text)
    _write_text(out_dir / "manifest.json", json.dumps(manifest, indent=2) + "\n")
    for name in [*sorted(files), "manifest.json"]:
        print(f"wrote {out_dir / name}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cspace",
        description="Metric surfaces and class-imbalance sensitivity analysis.",
        epilog="CSPACE_OUT_DIR sets the default output directory.",
    )
    parser.add_argument("--version", action="version", version=f"cspace {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("surface", help="evaluate one metric surface and write it out")
    ps.add_argument("--metric", required=True, help="catalog metric id")
    ps.add_argument("--ratio", required=True, type=float, help="imbalance ratio r (1:r)")
    ps.add_argument("--t", type=int, default=DEFAULT_RESOLUTION, help="grid resolution per axis")
    ps.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    ps.add_argument("--out", help="output file (default: surface_<metric>_r<r>_t<t>.<fmt>)")
    ps.set_defaults(func=_cmd_surface)

    pn = sub.add_parser("sensitivity", help="sensitivity curves over a ratio schedule")
    pn.add_argument("--metrics", required=True, help="comma-separated metric ids")
    pn.add_argument("--ratios", required=True, help="comma list or start:stop:factor")
    pn.add_argument("--t", type=int, default=DEFAULT_RESOLUTION)
    pn.add_argument("--format", choices=("csv", "json"), default="csv")
    pn.add_argument("--svg", help="also write a combined curve plot with this file name")
    pn.add_argument("--tol", type=float, default=DEFAULT_AGNOSTIC_TOL, help="agnostic tolerance")
    pn.add_argument("--log-x", action="store_true", help="log-scale ratio axis in the SVG")
    pn.add_argument("--out-dir", help="output directory")
    pn.set_defaults(func=_cmd_sensitivity)

    pc = sub.add_parser("compare", help="rank metrics by sensitivity at one ratio")
    pc.add_argument("--metrics", required=True, help="comma-separated metric ids (at least two)")
    pc.add_argument("--ratio", required=True, type=float)
    pc.add_argument("--t", type=int, default=DEFAULT_RESOLUTION)
    pc.add_argument("--svg", help="also write a curve plot with this file name")
    pc.add_argument("--ratios", default="1:1024:2", help="schedule for the SVG curves")
    pc.add_argument("--log-x", action="store_true")
    pc.add_argument("--out-dir", help="output directory")
    pc.set_defaults(func=_cmd_compare)

    pr = sub.add_parser("reproduce", help="emit the bundled showcase figures")
    pr.add_argument("--out-dir", help="output directory")
    pr.add_argument("--t", type=int, default=DEFAULT_RESOLUTION)
    pr.add_argument("--ratios", default="1:1024:2", help="curve schedule")
    pr.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CspaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
