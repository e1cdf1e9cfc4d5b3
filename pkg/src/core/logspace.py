"""
Base-2 log-space arithmetic.

Gauge values such as 2^(-1/delta^s) leave the float range long before the
scales of interest do, so every gauge, count and sum is carried as its
base-2 logarithm and only materialized on demand.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

Real = Union[int, float, Fraction]

# Bounds of 2**x inside the double range (subnormals included)
_EXP2_MAX = 1024.0
_EXP2_MIN = -1074.0
_NORMAL_MIN_LOG2 = -1022.0


def safe_exp2(x: float) -> float:
    """2**x clamped to [0, inf] instead of raising OverflowError."""
    if math.isnan(x):
        return math.nan
    if x >= _EXP2_MAX:
        return math.inf
    if x < _EXP2_MIN - 1:
        return 0.0
    return 2.0 ** x


def log2_real(x: Real) -> float:
    """Base-2 log of a positive int, float or Fraction; exact-ish for huge rationals."""
    if x <= 0:
        raise ValueError("log2 of a non-positive value")
    if isinstance(x, Fraction):
        return _log2_int(x.numerator) - _log2_int(x.denominator)
    if isinstance(x, int):
        return _log2_int(x)
    return math.log2(x)


def _log2_int(n: int) -> float:
    # math.log2 accepts arbitrarily large ints, but keep precision for powers of two
    if n & (n - 1) == 0:
        return float(n.bit_length() - 1)
    return math.log2(n)


@dataclass(frozen=True)
class LogValue:
    """A nonnegative real stored as log2; log2 == -inf encodes exact zero."""

    log2: float

    @classmethod
    def from_value(cls, value: Real) -> "LogValue":
        if value < 0:
            raise ValueError("LogValue holds nonnegative reals only")
        if value == 0:
            return cls(-math.inf)
        return cls(log2_real(value))

    @property
    def value(self) -> float:
        return safe_exp2(self.log2)

    @property
    def underflow(self) -> bool:
        """True when the linear value is zero or subnormal although the quantity is positive."""
        return self.log2 != -math.inf and self.log2 < _NORMAL_MIN_LOG2

    @property
    def overflow(self) -> bool:
        return self.log2 >= _EXP2_MAX

    @property
    def is_zero(self) -> bool:
        return self.log2 == -math.inf

    def __mul__(self, other: "LogValue") -> "LogValue":
        return LogValue(self.log2 + other.log2)

    def __add__(self, other: "LogValue") -> "LogValue":
        return LogValue(float(np.logaddexp2(self.log2, other.log2)))

    def __lt__(self, other: "LogValue") -> bool:
        return self.log2 < other.log2


def log2_sum(log_terms: Iterable[float]) -> float:
    """
    log2 of sum(2**t) with compensated summation.

    Terms are shifted by their maximum so the linear partial sums stay in
    range, then added with math.fsum.
    """
    terms = [t for t in log_terms if t != -math.inf]
    if not terms:
        return -math.inf
    top = max(terms)
    if top == math.inf:
        return math.inf
    total = math.fsum(safe_exp2(t - top) for t in terms)
    return top + math.log2(total)


def log2_pow2_minus_one(m: int) -> float:
    """log2(2**m - 1) for m >= 1 without forming the integer."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m > 60:
        return float(m) + math.log1p(-safe_exp2(-m)) / math.log(2)
    return math.log2(2 ** m - 1)
