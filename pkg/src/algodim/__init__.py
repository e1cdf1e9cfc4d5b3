from .lz_coder import ProxyCoder, lz_complexity
from .complexity import (
    complexity_profile_of_point,
    candidate_codewords,
    dyadic_schedule,
    precision_doubling_schedule,
)
from .functionals import (
    gauged_dim_from_profile,
    direct_dim_from_profile,
    jump_characterization,
    ratio_dimension_from_profile,
    synthetic_profile,
    random_power_profiles,
)

__all__ = [
    'ProxyCoder',
    'lz_complexity',
    'complexity_profile_of_point',
    'candidate_codewords',
    'dyadic_schedule',
    'precision_doubling_schedule',
    'gauged_dim_from_profile',
    'direct_dim_from_profile',
    'jump_characterization',
    'ratio_dimension_from_profile',
    'synthetic_profile',
    'random_power_profiles',
]
