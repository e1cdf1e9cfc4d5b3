from .hausdorff import CompactApprox, hausdorff_distance, subset_hausdorff, mask_points
from .hyperspace_covering import (
    hyperspace_net,
    hyperspace_covering_number,
    brute_force_hyperspace_cover,
    ball_table,
)
from .verification import (
    hyperspace_profile,
    verify_hyperspace_minkowski,
    interval_net_generator,
    fixed_set_generator,
)

__all__ = [
    'CompactApprox',
    'hausdorff_distance',
    'subset_hausdorff',
    'mask_points',
    'hyperspace_net',
    'hyperspace_covering_number',
    'brute_force_hyperspace_cover',
    'ball_table',
    'hyperspace_profile',
    'verify_hyperspace_minkowski',
    'interval_net_generator',
    'fixed_set_generator',
]
