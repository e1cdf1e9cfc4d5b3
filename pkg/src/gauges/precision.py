import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from core.errors import PreconditionError
from core.logspace import log2_real

Real = Union[int, float, Fraction]


@dataclass(frozen=True)
class PrecisionScale:
    value: Real
    exact: bool

    @property
    def log2(self) -> float:
        return log2_real(self.value)


class PrecisionFamily:
    """
    Parameterized precision sequences alpha_s(r) with positive rational values.

    `alpha_fn(s, r)` may return a Fraction (exact) or a float (flagged approximate).
    """

    def __init__(self, alpha_fn: Callable[[float, int], Real], descriptor: str):
        self.alpha_fn = alpha_fn
        self.descriptor = descriptor

    def alpha(self, s: float, r: int) -> PrecisionScale:
        if r < 0:
            raise PreconditionError("precision index must be a natural number", module="gauge")
        value = self.alpha_fn(s, r)
        if value <= 0:
            raise PreconditionError(f"alpha({s}, {r}) = {value} is not positive", module="gauge")
        return PrecisionScale(value=value, exact=isinstance(value, (int, Fraction)))


def _dyadic_alpha(s: float, r: int) -> Real:
    exponent = s * r
    if float(exponent).is_integer():
        return Fraction(1, 2 ** int(exponent))
    return 2.0 ** (-exponent)


def canonical_precision() -> PrecisionFamily:
    """alpha_s(r) = 2**(-s*r), exact whenever s*r is an integer."""
    return PrecisionFamily(_dyadic_alpha, "dyadic")


def harmonic_precision() -> PrecisionFamily:
    """alpha_s(r) = 1/(r+1); vanishes, but its cross sums diverge against theta."""
    return PrecisionFamily(lambda s, r: Fraction(1, r + 1), "harmonic")


def geometric_closed_form(s: float, t: float) -> float:
    """Limit of sum_r theta_t(alpha_s(r))/theta_s(alpha_s(r)) for the dyadic family."""
    return 1.0 / (1.0 - math.pow(2.0, -s * (t - s)))
