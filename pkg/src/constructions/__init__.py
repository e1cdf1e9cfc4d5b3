from .bit_source import BitSource
from .seven_adic import (
    seven_adic_children,
    build_construction,
    self_similar_e0,
    level_violations,
    g_map_digits,
    arrange_bits_for_g_map,
    point_from_digits,
    interval_set_diameters,
)
from .counterexamples import one_over_n_points
from .sampling import sample_points, prefix_complexity_trace

__all__ = [
    'BitSource',
    'seven_adic_children',
    'build_construction',
    'self_similar_e0',
    'level_violations',
    'g_map_digits',
    'arrange_bits_for_g_map',
    'point_from_digits',
    'interval_set_diameters',
    'one_over_n_points',
    'sample_points',
    'prefix_complexity_trace',
]
