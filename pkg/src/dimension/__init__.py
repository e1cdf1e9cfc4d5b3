from .trend import bisect_boundary, tends_to_zero, diverges, window_size
from .minkowski import (
    minkowski_dimension,
    loglog_slope,
    ratio_dimension,
    full_dimension_point,
    FullDimensionPoint,
    as_log_counts,
)
from .sums import GaugeSum, cover_sum, packing_sum, hausdorff_upper_bound, packing_lower_bound

__all__ = [
    'bisect_boundary',
    'tends_to_zero',
    'diverges',
    'window_size',
    'minkowski_dimension',
    'loglog_slope',
    'ratio_dimension',
    'full_dimension_point',
    'FullDimensionPoint',
    'as_log_counts',
    'GaugeSum',
    'cover_sum',
    'packing_sum',
    'hausdorff_upper_bound',
    'packing_lower_bound',
]
