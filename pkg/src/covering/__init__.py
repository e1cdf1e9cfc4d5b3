from .covering_numbers import (
    CoverResult,
    candidate_centers,
    cover,
    covering_number,
    packing,
    packing_number,
    dense_center_bridge,
    bounding_region,
)
from .profiles import covering_profile, check_schedule
from .oracle import brute_force_cover, brute_force_packing

__all__ = [
    'CoverResult',
    'candidate_centers',
    'cover',
    'covering_number',
    'packing',
    'packing_number',
    'dense_center_bridge',
    'bounding_region',
    'covering_profile',
    'check_schedule',
    'brute_force_cover',
    'brute_force_packing',
]
