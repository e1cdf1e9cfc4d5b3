from .errors import (
    GaugeDimError,
    PreconditionError,
    CapacityError,
    NoBracketError,
    NetTooCoarseError,
    BitSourceExhaustedError,
    ConfigError,
    GaugeSyntaxError,
)
from .logspace import LogValue, log2_sum, log2_real, log2_pow2_minus_one, safe_exp2

__all__ = [
    'GaugeDimError',
    'PreconditionError',
    'CapacityError',
    'NoBracketError',
    'NetTooCoarseError',
    'BitSourceExhaustedError',
    'ConfigError',
    'GaugeSyntaxError',
    'LogValue',
    'log2_sum',
    'log2_real',
    'log2_pow2_minus_one',
    'safe_exp2',
]
