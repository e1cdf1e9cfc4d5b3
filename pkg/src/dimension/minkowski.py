import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Union

import numpy as np

from core.errors import PreconditionError
from core.logspace import safe_exp2
from covering.profiles import covering_profile
from dimension.trend import Kind, bisect_boundary, tends_to_zero, window_size
from gauges.families import GaugeFamily
from models.profiles import CoveringProfile, LogCountProfile
from models.reports import DimensionEstimate
from spaces.metric_spaces import MetricSpace

logger = logging.getLogger(__name__)

ProfileLike = Union[CoveringProfile, LogCountProfile]


def as_log_counts(profile: ProfileLike) -> LogCountProfile:
    if isinstance(profile, CoveringProfile):
        return profile.log_counts("n_cover")
    return profile


def _window_bounds(log_deltas: Sequence[float]):
    return (safe_exp2(log_deltas[0]), safe_exp2(log_deltas[-1])), (log_deltas[0], log_deltas[-1])


def minkowski_dimension(profile: ProfileLike, family: GaugeFamily, kind: Kind = "upper",
                        s_min: Optional[float] = None, s_max: Optional[float] = None,
                        tolerance: Optional[float] = None, window: Optional[int] = None,
                        max_iter: Optional[int] = None) -> DimensionEstimate:
    """
    Gauged lower/upper Minkowski dimension of a covering (or log-count) profile.

    For candidate s the window sequence v_i = log2 N(delta_i) + log2 phi_s(delta_i)
    is classified by the half-window trend rule; the boundary s* between
    rejected and accepted s is found by bisection.
    """
    counts = as_log_counts(profile)
    n = len(counts)
    if n < 4:
        raise PreconditionError(f"profile has {n} scales, at least 4 are needed", module="dimension")
    size = window_size(n, window)
    log_deltas = counts.log2_deltas[-size:]
    log_counts = counts.log2_counts[-size:]

    def decide(s: float):
        values = [c + family.log2_at(s, L) for c, L in zip(log_counts, log_deltas)]
        return tends_to_zero(s, values, kind)

    boundary = bisect_boundary(decide, s_min, s_max, tolerance, max_iter)
    scale_window, log2_window = _window_bounds(log_deltas)
    logger.info(f"[Dimension] {kind} {family.descriptor} estimate {boundary.value:.4f} "
                f"on {size} scales ({counts.source})")
    return DimensionEstimate(
        value=boundary.value,
        bracket=boundary.bracket,
        kind=kind,
        scale_window=scale_window,
        log2_window=log2_window,
        method="bisection",
        family=family.descriptor,
        at_floor=boundary.at_floor,
        iterations=boundary.iterations,
        diagnostics=boundary.diagnostics,
        summary={"source": counts.source, "window": size},
    )


def loglog_slope(profile: ProfileLike, window: Optional[int] = None, kind: Kind = "upper") -> DimensionEstimate:
    """Least-squares slope of log N(delta) against log(1/delta); the classical box-counting fit."""
    counts = as_log_counts(profile)
    size = len(counts) if window is None else window
    if size < 3 or size > len(counts):
        raise PreconditionError(f"loglog fit needs 3 to {len(counts)} scales, got {size}", module="dimension")
    x = -np.asarray(counts.log2_deltas[-size:])
    y = np.asarray(counts.log2_counts[-size:])
    if np.any(~np.isfinite(y)) or np.any(y < 0):
        raise PreconditionError("loglog fit needs finite counts >= 1", module="dimension")
    if np.ptp(x) == 0:
        raise PreconditionError("zero variance in log(1/delta)", module="dimension")
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = np.sum((y - y.mean()) ** 2)
    r_squared = 1.0 - float(np.sum(residual ** 2) / total) if total > 0 else 1.0
    scale_window, log2_window = _window_bounds(counts.log2_deltas[-size:])
    return DimensionEstimate(
        value=float(slope),
        bracket=(float(slope), float(slope)),
        kind=kind,
        scale_window=scale_window,
        log2_window=log2_window,
        method="loglog",
        family="theta",
        summary={"intercept": float(intercept), "r_squared": r_squared, "window": size},
    )


def ratio_dimension(profile: ProfileLike, kind: Kind = "upper", window: Optional[int] = None) -> DimensionEstimate:
    """Direct liminf/limsup surrogate: min/max of log2 N / log2(1/delta) over the window."""
    counts = as_log_counts(profile)
    size = window_size(len(counts), window)
    log_deltas = counts.log2_deltas[-size:]
    if any(L >= 0 for L in log_deltas):
        raise PreconditionError("ratio dimension needs scales below 1", module="dimension")
    ratios = [c / -L for c, L in zip(counts.log2_counts[-size:], log_deltas)]
    value = max(ratios) if kind == "upper" else min(ratios)
    scale_window, log2_window = _window_bounds(log_deltas)
    return DimensionEstimate(
        value=value,
        bracket=(min(ratios), max(ratios)),
        kind=kind,
        scale_window=scale_window,
        log2_window=log2_window,
        method="ratio",
        family="theta",
        summary={"ratios": ratios},
    )


@dataclass
class FullDimensionPoint:
    point: Any
    local: DimensionEstimate
    overall: DimensionEstimate


def full_dimension_point(space: MetricSpace, E: Sequence, radius, delta_schedule: Sequence,
                         family: GaugeFamily, kind: Kind = "upper", **options) -> FullDimensionPoint:
    """
    The point x of E whose localized set E cap B(x, radius) has the largest
    estimate, next to the estimate for all of E. For self-similar sets the
    two agree.
    """
    if len(E) == 0:
        raise PreconditionError("point set E is empty", module="dimension")
    overall = minkowski_dimension(covering_profile(space, E, delta_schedule, include_pack=False),
                                  family, kind, **options)
    best = None
    for x in E:
        local_set = [y for y in E if space.distance(x, y) < radius]
        profile = covering_profile(space, local_set, delta_schedule, include_pack=False)
        estimate = minkowski_dimension(profile, family, kind, **options)
        if best is None or estimate.value > best.local.value:
            best = FullDimensionPoint(point=x, local=estimate, overall=overall)
    logger.info(f"[Dimension] Full-dimension point {best.point}: local {best.local.value:.4f}, "
                f"overall {overall.value:.4f}")
    return best
