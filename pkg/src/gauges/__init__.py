from .families import (
    GaugeFamily,
    GaugeFunction,
    PowerFamily,
    JumpFamily,
    FunctionFamily,
    canonical,
    jump,
    jump_log_identity,
    jump_log_identity_holds,
)
from .precision import PrecisionFamily, PrecisionScale, canonical_precision, harmonic_precision, geometric_closed_form
from .validation import validate_gauge_family, validate_precision_family, ordering_check, doubling_check, jump_smallness
from .grammar import parse_gauge

__all__ = [
    'GaugeFamily',
    'GaugeFunction',
    'PowerFamily',
    'JumpFamily',
    'FunctionFamily',
    'canonical',
    'jump',
    'jump_log_identity',
    'jump_log_identity_holds',
    'PrecisionFamily',
    'PrecisionScale',
    'canonical_precision',
    'harmonic_precision',
    'geometric_closed_form',
    'validate_gauge_family',
    'validate_precision_family',
    'ordering_check',
    'doubling_check',
    'jump_smallness',
    'parse_gauge',
]
