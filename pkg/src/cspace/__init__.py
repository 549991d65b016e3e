"""cspace: metric surfaces and class-imbalance sensitivity analysis.

Every deterministic binary-classification metric is a function of
``(tpr, tnr, r)`` on the base contingency space (ROC flipped so x = tnr) and
so forms a surface over the unit square at each imbalance ratio ``r``.  The
normalised volume between a metric's balanced surface and its surface at
ratio ``r`` quantifies how sensitive the metric is to class imbalance.  This
package computes those surfaces, sensitivities and the corresponding
contour/curve plots.
"""

__version__ = "0.1.0"

from .errors import (
    CspaceError,
    DegenerateClassError,
    EmptyLevelsError,
    GridMismatchError,
    InsufficientSamplesError,
    InvalidGridError,
    InvalidRatioError,
    MetricMismatchError,
    ScheduleMismatchError,
    UnknownMetricError,
    UsageError,
)
from .metrics import (
    CountConfusion,
    MetricDescriptor,
    RelativePerformance,
    evaluate,
    fbeta,
    get_metric,
    list_metrics,
    relatively_identical,
    to_relative,
)
from .render import (
    ContourSet,
    RenderSpec,
    default_color_map,
    extract_contours,
    render_curves_svg,
    render_surface_pair_svg,
    render_surface_svg,
)
from .sensitivity import (
    DEFAULT_AGNOSTIC_SCHEDULE,
    DEFAULT_AGNOSTIC_TOL,
    GrowthReport,
    RatioSchedule,
    SensitivityCurve,
    is_agnostic,
    log_growth_check,
    sensitivity,
    sensitivity_curve,
)
from .surface import (
    DEFAULT_GRID,
    DEFAULT_RESOLUTION,
    GridSpec,
    MetricSurface,
    build_surface,
    surface_delta,
)

__all__ = [
    "ContourSet",
    "CountConfusion",
    "CspaceError",
    "DEFAULT_AGNOSTIC_SCHEDULE",
    "DEFAULT_AGNOSTIC_TOL",
    "DEFAULT_GRID",
    "DEFAULT_RESOLUTION",
    "DegenerateClassError",
    "EmptyLevelsError",
    "GridMismatchError",
    "GridSpec",
    "GrowthReport",
    "InsufficientSamplesError",
    "InvalidGridError",
    "InvalidRatioError",
    "MetricDescriptor",
    "MetricMismatchError",
    "MetricSurface",
    "RatioSchedule",
    "RelativePerformance",
    "RenderSpec",
    "ScheduleMismatchError",
    "SensitivityCurve",
    "UnknownMetricError",
    "UsageError",
    "build_surface",
    "default_color_map",
    "evaluate",
    "extract_contours",
    "fbeta",
    "get_metric",
    "is_agnostic",
    "list_metrics",
    "log_growth_check",
    "relatively_identical",
    "render_curves_svg",
    "render_surface_pair_svg",
    "render_surface_svg",
    "sensitivity",
    "sensitivity_curve",
    "surface_delta",
    "to_relative",
]
