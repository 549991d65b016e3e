from __future__ import annotations

import json

import numpy as np
import pytest

from cspace import GridSpec, RatioSchedule, build_surface, get_metric, sensitivity_curve
from cspace.formats import (
    curve_to_csv,
    curve_to_json_obj,
    curves_to_json,
    surface_from_json,
    surface_to_csv,
    surface_to_json,
    surface_values_from_csv,
)


@pytest.fixture
def f1_surface():
    return build_surface(get_metric("f1"), 49.0, GridSpec(16))


def test_surface_csv_shape_and_header(f1_surface):
    text = surface_to_csv(f1_surface)
    lines = text.strip().split("\n")
    assert lines[0] == "tnr,tpr,value"
    assert len(lines) == 1 + 16 * 16
    # row-major: the first 16 rows share the first tpr sample
    first_tpr = lines[1].split(",")[1]
    assert all(ln.split(",")[1] == first_tpr for ln in lines[1:17])


def test_surface_csv_round_trip_within_print_precision(f1_surface):
    values = surface_values_from_csv(surface_to_csv(f1_surface))
    assert values.shape == (16, 16)
    assert np.max(np.abs(values - f1_surface.values)) < 1e-8


def test_surface_csv_parser_rejects_garbage():
    with pytest.raises(ValueError):
        surface_values_from_csv("nope\n1,2,3\n")
    with pytest.raises(ValueError):
        surface_values_from_csv("tnr,tpr,value\n0.1,0.1,0.5\n0.3,0.1,0.5\n")


def test_surface_json_schema_and_exact_round_trip(f1_surface):
    text = surface_to_json(f1_surface)
    obj = json.loads(text)
    assert list(obj) == ["metric", "ratio", "t", "rescale", "values"]
    assert obj["metric"] == "f1"
    assert obj["ratio"] == 49.0
    assert obj["t"] == 16
    assert obj["rescale"] == [0.0, 1.0]
    back = surface_from_json(text)
    assert np.array_equal(back.values, f1_surface.values)
    assert back.grid == f1_surface.grid


def test_curve_csv_format():
    curve = sensitivity_curve(get_metric("accuracy"), RatioSchedule((1.0,)), GridSpec(8))
    assert curve_to_csv(curve) == "ratio,sensitivity\n1,0\n"


def test_curve_json_objects():
    curves = [
        sensitivity_curve(get_metric(mid), RatioSchedule((1.0, 2.0)), GridSpec(8))
        for mid in ("recall", "accuracy")
    ]
    obj = json.loads(curves_to_json(curves))
    assert list(obj) == ["recall", "accuracy"]
    assert obj["recall"]["samples"][0] == {"r": 1.0, "s": 0.0}
    single = curve_to_json_obj(curves[1])
    assert single["metric"] == "accuracy"
    assert len(single["samples"]) == 2
