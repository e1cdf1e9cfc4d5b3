import logging
import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Tuple, Union

from core.errors import PreconditionError
from core.logspace import LogValue, log2_real, safe_exp2

logger = logging.getLogger(__name__)

Real = Union[int, float, Fraction]


class GaugeFamily(ABC):
    """
    One-parameter family s -> phi_s of gauge functions.

    Every family is evaluated in log space: `log2_at(s, log2_delta)` returns
    log2 phi_s(delta) given log2 delta, so scales far below the float range
    never have to be materialized.
    """

    descriptor: str = "family"
    # 2**(anything finite) is positive; a log2 of -inf then means log-space underflow
    positive_by_construction: bool = True

    @abstractmethod
    def log2_at(self, s: float, log2_delta: float) -> float:
        ...

    def member(self, s: float) -> "GaugeFunction":
        if not s > 0:
            raise PreconditionError(f"gauge parameter must be positive, got {s}", module="gauge")
        return GaugeFunction(self, s)

    def evaluate(self, s: float, delta: Real) -> LogValue:
        return LogValue(self.log2_at(s, _checked_log2(delta)))

    def value(self, s: float, delta: Real) -> Real:
        return self.evaluate(s, delta).value

    def __repr__(self) -> str:
        return f"GaugeFamily({self.descriptor})"


class GaugeFunction:
    """A single member phi_s; thin view over its family."""

    def __init__(self, family: GaugeFamily, s: float):
        self.family = family
        self.s = s
        self.descriptor = f"{family.descriptor}[s={s:g}]"

    def log2_at(self, log2_delta: float) -> float:
        return self.family.log2_at(self.s, log2_delta)

    def evaluate(self, delta: Real) -> LogValue:
        return self.family.evaluate(self.s, delta)

    def eval(self, delta: Real) -> Real:
        return self.family.value(self.s, delta)

    def __call__(self, delta: Real) -> Real:
        return self.eval(delta)


class PowerFamily(GaugeFamily):
    """phi_s(delta) = delta**(c*s); c = 1 is the canonical family theta."""

    def __init__(self, c: float = 1.0):
        if not c > 0:
            raise PreconditionError(f"pow exponent must be positive, got {c}", module="gauge")
        self.c = c
        self.descriptor = "theta" if c == 1 else f"pow({c:g})"

    def log2_at(self, s: float, log2_delta: float) -> float:
        return self.c * s * log2_delta

    def value(self, s: float, delta: Real) -> Real:
        _checked_log2(delta)
        exponent = self.c * s
        if isinstance(delta, (int, Fraction)) and float(exponent).is_integer():
            return Fraction(delta) ** int(exponent)
        return float(delta) ** exponent


class JumpFamily(GaugeFamily):
    """The jump of a family: phi~_s(delta) = 2**(-1/phi_s(delta))."""

    def __init__(self, base: GaugeFamily):
        self.base = base
        self.descriptor = f"jump({base.descriptor})"

    def log2_at(self, s: float, log2_delta: float) -> float:
        # log2 phi~ = -1/phi = -2**(-log2 phi), exact in log space
        return -safe_exp2(-self.base.log2_at(s, log2_delta))


class FunctionFamily(GaugeFamily):
    """Wraps a plain callable f(s, delta) -> positive value."""

    positive_by_construction = False

    def __init__(self, func: Callable[[float, float], float], descriptor: str = "custom"):
        self.func = func
        self.descriptor = descriptor

    def log2_at(self, s: float, log2_delta: float) -> float:
        value = self.func(s, safe_exp2(log2_delta))
        if value <= 0:
            return -math.inf
        return math.log2(value)


def canonical() -> GaugeFamily:
    return PowerFamily(1.0)


def jump(family: GaugeFamily) -> GaugeFamily:
    return JumpFamily(family)


def jump_log_identity(k: float, phi: float) -> Tuple[float, float]:
    """
    Both sides of log2(2**k * phi~) = (k*phi - 1)/phi for a gauge value phi.
    """
    if not phi > 0:
        raise PreconditionError("gauge value must be positive", module="gauge")
    lhs = k + (-1.0 / phi)
    rhs = (k * phi - 1.0) / phi
    return lhs, rhs


def jump_log_identity_holds(k: float, phi: float, rel_tol: float = 1e-12) -> bool:
    lhs, rhs = jump_log_identity(k, phi)
    scale = max(abs(k), 1.0 / phi, 1.0)
    return abs(lhs - rhs) <= rel_tol * scale


def _checked_log2(delta: Real) -> float:
    if delta <= 0:
        raise PreconditionError(f"gauge functions are evaluated on delta > 0, got {delta}", module="gauge")
    return log2_real(delta)
