from .dispatcher import CommandDispatcher, dispatcher, EXIT_OK, EXIT_COMPUTATION, EXIT_CONFIG
from .gauge_runner import run_gauge_validate
from .dimension_runner import run_dim_estimate
from .hyperspace_runner import run_hyper_verify
from .construction_runner import run_construct
from .algodim_runner import run_algodim
from .oracle_runner import run_oracle_suite

__all__ = [
    'CommandDispatcher',
    'dispatcher',
    'EXIT_OK',
    'EXIT_COMPUTATION',
    'EXIT_CONFIG',
    'run_gauge_validate',
    'run_dim_estimate',
    'run_hyper_verify',
    'run_construct',
    'run_algodim',
    'run_oracle_suite',
]
