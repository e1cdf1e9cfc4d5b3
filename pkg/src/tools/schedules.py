"""
Scale schedule descriptors.

    geo:base,count[,start[,step]]   base^-(start + k*step) for k = 0..count-1 (start 1, step 1)
    list:d1,d2,...                  explicit scales, decimals or p/q
    dyadic:depth                    log2 schedule -1, ..., -depth
    doubling:depth                  log2 schedule -2, -4, ..., -2^depth
"""

import math
from fractions import Fraction
from typing import List

from algodim.complexity import dyadic_schedule, precision_doubling_schedule
from core.errors import ConfigError, GaugeDimError
from core.logspace import log2_real
from covering.profiles import check_schedule
from spaces.ingest import parse_number


def _numbers(args: str, descriptor: str) -> List[Fraction]:
    try:
        return [parse_number(a) for a in args.split(",") if a.strip()]
    except GaugeDimError as e:
        raise ConfigError(f"bad number in schedule '{descriptor}': {e}", module="cli")


def parse_schedule(descriptor: str) -> list:
    """Scales in decreasing order; exact Fractions wherever the exponents are integers."""
    name, _, args = descriptor.strip().partition(":")
    values = _numbers(args, descriptor)
    if name == "geo":
        if len(values) not in (2, 3, 4):
            raise ConfigError(f"geo schedule takes base,count[,start[,step]], got '{descriptor}'", module="cli")
        base, count = values[0], values[1]
        start = values[2] if len(values) > 2 else Fraction(1)
        step = values[3] if len(values) > 3 else Fraction(1)
        if base <= 1 or count < 1 or count.denominator != 1 or step <= 0:
            raise ConfigError(f"geo schedule needs base > 1, integer count >= 1, step > 0: '{descriptor}'",
                              module="cli")
        scales = []
        for k in range(int(count)):
            exponent = start + k * step
            if exponent.denominator == 1:
                scales.append(base ** -int(exponent))
            else:
                scales.append(float(base) ** -float(exponent))
    elif name == "list":
        scales = values
    else:
        raise ConfigError(f"unknown schedule kind in '{descriptor}'; use geo:... or list:...", module="cli")
    try:
        return check_schedule(scales, module="cli")
    except GaugeDimError as e:
        raise ConfigError(str(e), module="cli")


def parse_log2_schedule(descriptor: str) -> List[float]:
    """log2 precisions for complexity profiles; geo/list descriptors are converted."""
    name, _, args = descriptor.strip().partition(":")
    if name in ("dyadic", "doubling"):
        try:
            depth = int(args)
        except ValueError:
            raise ConfigError(f"'{descriptor}' needs an integer depth", module="cli")
        try:
            return dyadic_schedule(depth) if name == "dyadic" else precision_doubling_schedule(depth)
        except GaugeDimError as e:
            raise ConfigError(str(e), module="cli")
    logs = [log2_real(d) for d in parse_schedule(descriptor)]
    if any(math.isinf(L) for L in logs):
        raise ConfigError(f"schedule '{descriptor}' leaves the float range", module="cli")
    return logs
