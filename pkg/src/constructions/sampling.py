import logging
from fractions import Fraction
from typing import List, Literal, Union

import numpy as np

from algodim.lz_coder import lz_complexity
from constructions.bit_source import BitSource
from core.errors import PreconditionError
from models.intervals import IntervalSet

logger = logging.getLogger(__name__)


def sample_points(intervals: IntervalSet, per_interval: int = 2,
                  mode: Literal["endpoints", "uniform"] = "endpoints", seed: int = 0) -> List[Fraction]:
    """
    Finite point set drawn from the intervals of one level.

    endpoints: max(2, per_interval) equally spaced points per interval, both
    endpoints included. uniform: per_interval points from numpy's default_rng(seed),
    mapped into each interval exactly so membership never depends on rounding.
    """
    if per_interval < 1:
        raise PreconditionError("per_interval must be at least 1", module="constructions")
    points: List[Fraction] = []
    if mode == "endpoints":
        k = max(2, per_interval)
        for lo, hi in intervals.fractions():
            step = (hi - lo) / (k - 1)
            points.extend(lo + j * step for j in range(k))
    elif mode == "uniform":
        rng = np.random.default_rng(seed)
        for lo, hi in intervals.fractions():
            for u in rng.random(per_interval):
                points.append(lo + Fraction(float(u)) * (hi - lo))
    else:
        raise PreconditionError(f"unknown sampling mode {mode!r}", module="constructions")
    return sorted(set(points))


def prefix_complexity_trace(bits: Union[BitSource, str], L: int) -> List[dict]:
    """
    LZ proxy cost of the bit prefix that decides each level 1..L.
    Level l is fixed by the first 2**(l+1) - 2 bits of the stream.
    """
    if L < 1:
        raise PreconditionError("trace depth must be at least 1", module="constructions")
    source = BitSource.from_bits(bits) if isinstance(bits, str) else bits
    stream = source.take_string(2 ** (L + 1) - 2)
    trace = []
    for level in range(1, L + 1):
        prefix = stream[: 2 ** (level + 1) - 2]
        cost = lz_complexity(prefix)
        trace.append({
            "level": level,
            "prefix_bits": len(prefix),
            "lz_bits": cost,
            "ratio": cost / len(prefix),
        })
    logger.info(f"[Constructions] Prefix trace of {source.descriptor} to level {L}: "
                f"final ratio {trace[-1]['ratio']:.3f}")
    return trace
