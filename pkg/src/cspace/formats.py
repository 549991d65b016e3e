"""CSV and JSON serialisation of surfaces and sensitivity curves.

Surface CSV: header ``tnr,tpr,value``, one row per grid cell in row-major
order (tpr index outer, tnr index inner), all numbers printed with 9
significant digits.  Surface JSON carries full metadata and full-precision
values: ``{"metric", "ratio", "t", "rescale", "values"}``.  Curve CSV:
header ``ratio,sensitivity``; curve JSON: ``{"metric", "samples"}`` with
``{"r", "s"}`` sample objects.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .sensitivity import SensitivityCurve
from .surface import GridSpec, MetricSurface

__all__ = [
    "curve_to_csv",
    "curve_to_json_obj",
    "curves_to_json",
    "fmt9",
    "surface_from_json",
    "surface_to_csv",
    "surface_to_json",
    "surface_values_from_csv",
]


def fmt9(x: float) -> str:
    """A float at 9 significant digits (round-trip error below 1e-8 on [0,1])."""
    return format(float(x), ".9g")


def surface_to_csv(surface: MetricSurface) -> str:
    xs = surface.tnr_coords
    ys = surface.tpr_coords
    values = surface.values
    t = surface.grid.resolution
    lines = ["tnr,tpr,value"]
    for i in range(t):
        for j in range(t):
            lines.append(f"{fmt9(xs[j])},{fmt9(ys[i])},{fmt9(values[i, j])}")
    return "\n".join(lines) + "\n"


def surface_values_from_csv(text: str) -> np.ndarray:
    """Parse a surface CSV back into its t x t value matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "tnr,tpr,value":
        raise ValueError("not a surface CSV: missing 'tnr,tpr,value' header")
    rows = lines[1:]
    t = math.isqrt(len(rows))
    if t * t != len(rows):
        raise ValueError(f"surface CSV must have a square number of data rows, got {len(rows)}")
    out = np.empty((t, t), dtype=np.float64)
    for k, row in enumerate(rows):
        _, _, value = row.split(",")
        out[k // t, k % t] = float(value)
    return out


def surface_to_json(surface: MetricSurface) -> str:
    obj = {
        "metric": surface.metric_id,
        "ratio": surface.ratio,
        "t": surface.grid.resolution,
        "rescale": list(surface.rescale_interval),
        "values": [[float(v) for v in row] for row in surface.values],
    }
    return json.dumps(obj, indent=2) + "\n"


def surface_from_json(text: str) -> MetricSurface:
    obj = json.loads(text)
    return MetricSurface(
        metric_id=obj["metric"],
        ratio=obj["ratio"],
        grid=GridSpec(obj["t"]),
        values=np.asarray(obj["values"], dtype=np.float64),
        rescale_interval=(obj["rescale"][0], obj["rescale"][1]),
    )


def curve_to_csv(curve: SensitivityCurve) -> str:
    lines = ["ratio,sensitivity"]
    for r, s in curve.samples:
        lines.append(f"{fmt9(r)},{fmt9(s)}")
    return "\n".join(lines) + "\n"


def curve_to_json_obj(curve: SensitivityCurve) -> dict:
    return {"metric": curve.metric_id, "samples": [{"r": r, "s": s} for r, s in curve.samples]}


def curves_to_json(curves: list[SensitivityCurve]) -> str:
    obj = {curve.metric_id: curve_to_json_obj(curve) for curve in curves}
    return json.dumps(obj, indent=2) + "\n"
