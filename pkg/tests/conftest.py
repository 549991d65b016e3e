"""Shared test oracles, deliberately independent of the library internals."""

from __future__ import annotations

import re


def metric_from_counts(metric_id: str, tp: float, fn: float, tn: float, fp: float) -> float:
    """Raw-count metric formulas, written straight from their definitions.

    This is the reference oracle for the closed forms in cspace.metrics; it
    shares no code with them.  Indeterminate 0/0 points return 0.0, matching
    the library's undefined policy.
    """
    p = tp + fn
    n = tn + fp
    if metric_id == "accuracy":
        return (tp + tn) / (p + n)
    if metric_id == "precision":
        return tp / (tp + fp) if tp + fp != 0 else 0.0
    if metric_id == "recall":
        return tp / p
    if metric_id == "f1":
        if tp + fp == 0:
            pre = 0.0
        else:
            pre = tp / (tp + fp)
        rec = tp / p
        return 2.0 * (pre * rec) / (pre + rec) if pre + rec != 0 else 0.0
    if metric_id == "tss":
        return tp / p - fp / n
    if metric_id == "hss":
        return 2.0 * (tp * tn - fn * fp) / (p * (fn + tn) + n * (tp + fp))
    if metric_id == "youden_j":
        return (tp * tn - fn * fp) / ((tp + fn) * (fp + tn))
    if metric_id == "gilbert":
        return tp / (tp + fp + fn) if tp + fp + fn != 0 else 0.0
    if metric_id == "doolittle":
        den = p * n * (tp + fp) * (fn + tn)
        return (tp * tn - fn * fp) ** 2 / den if den != 0 else 0.0
    raise KeyError(metric_id)


def bilinear(surface, x: float, y: float) -> float:
    """Bilinear interpolation of a surface's sample lattice at (x=tnr, y=tpr)."""
    xs = surface.tnr_coords
    ys = surface.tpr_coords
    values = surface.values
    t = len(xs)
    j = min(max(int((x - xs[0]) / (xs[1] - xs[0])), 0), t - 2)
    i = min(max(int((y - ys[0]) / (ys[1] - ys[0])), 0), t - 2)
    fx = (x - xs[j]) / (xs[j + 1] - xs[j])
    fy = (y - ys[i]) / (ys[i + 1] - ys[i])
    return float(
        values[i, j] * (1 - fx) * (1 - fy)
        + values[i, j + 1] * fx * (1 - fy)
        + values[i + 1, j] * (1 - fx) * fy
        + values[i + 1, j + 1] * fx * fy
    )


_PATH_TOKEN = re.compile(r"([MLZ])|(-?\d+(?:\.\d+)?(?:e-?\d+)?)")


def parse_path_d(d: str) -> list[list[tuple[float, float]]]:
    """Split an absolute M/L/Z path string into subpath point lists."""
    subpaths: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    nums: list[float] = []
    for match in _PATH_TOKEN.finditer(d):
        cmd, num = match.groups()
        if num is not None:
            nums.append(float(num))
            if len(nums) == 2:
                current.append((nums[0], nums[1]))
                nums = []
            continue
        if cmd == "M" and current:
            subpaths.append(current)
            current = []
    if current:
        subpaths.append(current)
    return subpaths


def shoelace(points: list[tuple[float, float]]) -> float:
    """Signed polygon area (positive = counterclockwise in y-up coordinates)."""
    area = 0.0
    n = len(points)
    for k in range(n):
        x1, y1 = points[k]
        x2, y2 = points[(k + 1) % n]
        area += x1 * y2 - x2 * y1
    return area / 2.0
