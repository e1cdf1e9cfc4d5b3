import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from core.errors import CapacityError, PreconditionError

logger = logging.getLogger(__name__)

Real = Union[int, float, Fraction]


@dataclass(frozen=True)
class BinaryExpansion:
    """A point of [0, 1] given exactly by the binary digits 0.b1b2b3..."""

    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise PreconditionError("binary expansion digits must be 0 or 1", module="metric_core")

    def ratio(self) -> Tuple[int, int]:
        """(numerator, denominator) with a power-of-two denominator."""
        if not self.bits:
            return 0, 1
        return int(self.bits, 2), 1 << len(self.bits)

    def to_fraction(self) -> Fraction:
        num, den = self.ratio()
        return Fraction(num, den)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class Region:
    """Closed axis-aligned box with exact rational bounds."""

    lows: Tuple[Fraction, ...]
    highs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.lows) != len(self.highs) or not self.lows:
            raise PreconditionError("region bounds must have matching nonzero dimension", module="metric_core")
        if any(not hi > lo for lo, hi in zip(self.lows, self.highs)):
            raise PreconditionError("region must have positive width on every axis", module="metric_core")

    @classmethod
    def interval(cls, lo: Real = 0, hi: Real = 1) -> "Region":
        return cls((Fraction(lo),), (Fraction(hi),))

    @classmethod
    def box(cls, bounds: Sequence[Tuple[Real, Real]]) -> "Region":
        return cls(tuple(Fraction(lo) for lo, _ in bounds), tuple(Fraction(hi) for _, hi in bounds))

    @property
    def dim(self) -> int:
        return len(self.lows)

    @property
    def widths(self) -> Tuple[Fraction, ...]:
        return tuple(hi - lo for lo, hi in zip(self.lows, self.highs))

    def contains(self, p) -> bool:
        coords = p if isinstance(p, tuple) else (p,)
        return all(lo <= c <= hi for c, lo, hi in zip(coords, self.lows, self.highs))

    def describe(self) -> str:
        return " x ".join(f"[{lo},{hi}]" for lo, hi in zip(self.lows, self.highs))


class DyadicEnumeration:
    """
    Dense enumeration of the dyadic points of a region.

    A codeword w of length n = m+1 per axis decodes to
    lo + (hi - lo) * min(int(w, 2), 2**m) / 2**m, so every string length is
    total and level m codewords name the closed grid with 2**m + 1 points.
    """

    def __init__(self, region: Region):
        self.region = region
        self.descriptor = f"dyadic{region.describe()}"

    def decode(self, word: str):
        d = self.region.dim
        if not word or len(word) % d or set(word) - {"0", "1"}:
            raise PreconditionError(
                f"codeword must be a nonempty binary string split into {d} equal parts", module="metric_core"
            )
        n = len(word) // d
        top = 1 << (n - 1)
        coords = []
        for axis in range(d):
            j = min(int(word[axis * n:(axis + 1) * n], 2), top)
            lo, hi = self.region.lows[axis], self.region.highs[axis]
            coords.append(lo + (hi - lo) * Fraction(j, top))
        return coords[0] if d == 1 else tuple(coords)

    @staticmethod
    def codeword(index: Sequence[int], level: int) -> str:
        return "".join(format(j, f"0{level + 1}b") for j in index)

    def level_for(self, delta: Real) -> int:
        """Smallest level whose grid has covering radius at most delta."""
        if not delta > 0:
            raise PreconditionError(f"delta must be positive, got {delta}", module="metric_core")
        # covering radius of the grid is h*sqrt(d)/2 with h the widest axis spacing
        reach = max(self.region.widths) * math.sqrt(self.region.dim) / 2
        level = max(0, math.ceil(math.log2(float(reach) / float(delta))))
        while level > 0 and _radius(self.region, level - 1) <= delta:
            level -= 1
        while _radius(self.region, level) > delta:
            level += 1
        return level

    def candidates_within(self, x, log2_delta: float) -> List[Tuple[str, int]]:
        """
        Codewords of the level-matched grid within delta = 2**log2_delta of x,
        on a line region, in exact integer arithmetic. Returns (codeword, level)
        pairs.

        Works for precisions far below the float range; `x` is a Fraction,
        an int or a BinaryExpansion.
        """
        if self.region.dim != 1:
            raise PreconditionError("candidate search is implemented on intervals", module="metric_core")
        if not float(log2_delta).is_integer() or log2_delta > 0:
            raise PreconditionError("candidate search needs delta = 2**-r with r >= 0", module="metric_core")
        r = int(-log2_delta)
        lo = self.region.lows[0]
        width = self.region.highs[0] - lo
        num, den = _ratio(x)
        # t = (x - lo)/width = tn/td
        tn = (num * lo.denominator - lo.numerator * den) * width.denominator
        td = _times(den, lo.denominator * width.numerator)
        if tn < 0 or tn > td:
            raise PreconditionError("point lies outside the enumerated region", module="metric_core")

        # delta/width = dn/dd; level m is the smallest with 2**-m <= 2*dn/dd
        dn, dd = width.denominator, width.numerator << r
        m = max(0, r + math.ceil(math.log2(width.numerator / width.denominator)) - 1)
        while m > 0 and (dn << m) >= dd:
            m -= 1
        while (dn << (m + 1)) < dd:
            m += 1

        scaled = tn << m
        base = _floor_div(scaled, td)
        bound = _times(_times(dn, td), 1 << m)
        found = []
        for j in (base, base + 1):
            if 0 <= j <= (1 << m) and _times(abs(scaled - _times(j, td)), dd) <= bound:
                found.append((format(j, f"0{m + 1}b"), m))
        return found


@dataclass(frozen=True)
class DyadicNet:
    """Finite net of a region: the level-m grid of a DyadicEnumeration."""

    enumeration: DyadicEnumeration
    level: int
    delta: Real

    @property
    def region(self) -> Region:
        return self.enumeration.region

    def __len__(self) -> int:
        return ((1 << self.level) + 1) ** self.region.dim

    def indices(self) -> List[Tuple[int, ...]]:
        side = range((1 << self.level) + 1)
        return list(itertools.product(side, repeat=self.region.dim))

    def codewords(self) -> List[str]:
        return [DyadicEnumeration.codeword(idx, self.level) for idx in self.indices()]

    def points(self, exact: bool = True) -> list:
        """Net points, as Fractions (exact) or floats."""
        top = 1 << self.level
        axes = []
        for lo, hi in zip(self.region.lows, self.region.highs):
            step = (hi - lo) / top
            if exact:
                axes.append([lo + step * j for j in range(top + 1)])
            else:
                axes.append(list(float(lo) + float(step) * np.arange(top + 1)))
        if self.region.dim == 1:
            return axes[0]
        return [tuple(p) for p in itertools.product(*axes)]


def dyadic_net(region: Region, delta: Real, cap: Optional[int] = None) -> DyadicNet:
    """Closed dyadic grid whose covering radius is at most delta."""
    cap = settings.NET_SIZE_CAP if cap is None else cap
    enumeration = DyadicEnumeration(region)
    level = enumeration.level_for(delta)
    size = ((1 << level) + 1) ** region.dim
    if size > cap:
        raise CapacityError(
            f"dyadic net at delta={float(delta):.3g} needs {size} points (cap {cap})", module="metric_core"
        )
    logger.debug(f"[MetricCore] Net for {region.describe()} at delta={float(delta):.3g}: level {level}, {size} points")
    return DyadicNet(enumeration=enumeration, level=level, delta=delta)


def _radius(region: Region, level: int) -> float:
    h = float(max(region.widths)) / (1 << level)
    return h * math.sqrt(region.dim) / 2


def _times(a: int, b: int) -> int:
    # multiplications by powers of two become shifts; profiles reach million-bit integers
    if b > 0 and b & (b - 1) == 0:
        return a << (b.bit_length() - 1)
    return a * b


def _floor_div(a: int, b: int) -> int:
    if b > 0 and b & (b - 1) == 0:
        return a >> (b.bit_length() - 1)
    return a // b


def _ratio(x) -> Tuple[int, int]:
    if isinstance(x, BinaryExpansion):
        return x.ratio()
    if isinstance(x, (int, Fraction)):
        f = Fraction(x)
        return f.numerator, f.denominator
    if isinstance(x, float):
        return x.as_integer_ratio()
    raise PreconditionError(f"unsupported point type {type(x).__name__}", module="metric_core")
