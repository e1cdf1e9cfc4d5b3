"""
Finite-scale surrogates for 'tends to 0' and the bisection over s built on them.

A window of the finest scales is split into a coarse half and a fine half.
For kind 'upper' (limsup) the maxima of the halves are compared, for 'lower'
(liminf) the minima: the sequence is taken to tend to 0 (in linear space,
i.e. to -inf in log space) when the fine statistic is negative and below the
coarse one. A statistic of -inf counts as vanished.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Literal, Optional, Sequence, Tuple

from config.settings import settings
from core.errors import NoBracketError, PreconditionError
from models.reports import TrendRecord

logger = logging.getLogger(__name__)

Kind = Literal["lower", "upper"]
Decision = Callable[[float], TrendRecord]


def window_size(n_scales: int, window: Optional[int] = None) -> int:
    size = window if window is not None else math.ceil(n_scales / 2)
    size = max(2, size)
    if size > n_scales:
        raise PreconditionError(f"trend window {size} exceeds the {n_scales} available scales", module="dimension")
    return size


def _stat(values: Sequence[float], kind: Kind) -> float:
    return max(values) if kind == "upper" else min(values)


def split_window(values: Sequence[float]) -> Tuple[List[float], List[float]]:
    half = len(values) // 2
    return list(values[:half]), list(values[half:])


def tends_to_zero(s: float, values: Sequence[float], kind: Kind) -> TrendRecord:
    """Classify log2 values v_i (coarse to fine) by the half-window rule."""
    coarse, fine = split_window(values)
    c, f = _stat(coarse, kind), _stat(fine, kind)
    accepted = f < 0 and (f < c or f == -math.inf)
    return TrendRecord(s=s, accepted=accepted, coarse_stat=c, fine_stat=f, values=list(values))


def diverges(s: float, values: Sequence[float]) -> TrendRecord:
    """Strict growth surrogate: every fine value lies above every coarse value."""
    coarse, fine = split_window(values)
    c, f = max(coarse), min(fine)
    return TrendRecord(s=s, accepted=not f > c, coarse_stat=c, fine_stat=f, values=list(values))


@dataclass
class Boundary:
    value: float
    bracket: Tuple[float, float]
    at_floor: bool
    iterations: int
    diagnostics: List[TrendRecord] = field(default_factory=list)


def bisect_boundary(decide: Decision, s_min: Optional[float] = None, s_max: Optional[float] = None,
                    tolerance: Optional[float] = None, max_iter: Optional[int] = None,
                    module: str = "dimension") -> Boundary:
    """
    inf{s : decide(s).accepted} by bisection, assuming acceptance is upward closed.

    An accepted floor returns s_min with bracket (0, s_min) and `at_floor`;
    a rejected ceiling raises NoBracketError with both endpoint records.
    """
    s_min = s_min if s_min is not None else settings.S_MIN
    s_max = s_max if s_max is not None else settings.S_MAX
    tolerance = settings.BISECTION_TOLERANCE if tolerance is None else tolerance
    max_iter = settings.BISECTION_MAX_ITER if max_iter is None else max_iter
    if not 0 < s_min < s_max:
        raise PreconditionError(f"need 0 < s_min < s_max, got ({s_min}, {s_max})", module=module)

    low = decide(s_min)
    diagnostics = [low]
    if low.accepted:
        return Boundary(value=s_min, bracket=(0.0, s_min), at_floor=True, iterations=0, diagnostics=diagnostics)
    high = decide(s_max)
    diagnostics.append(high)
    if not high.accepted:
        raise NoBracketError(
            f"s-range ({s_min:g}, {s_max:g}) does not bracket the boundary: s_max is rejected",
            module=module,
            diagnostics=[r.to_json_dict() for r in diagnostics],
        )

    lo, hi = s_min, s_max
    iterations = 0
    while hi - lo > tolerance and iterations < max_iter:
        mid = (lo + hi) / 2
        record = decide(mid)
        diagnostics.append(record)
        if record.accepted:
            hi = mid
        else:
            lo = mid
        iterations += 1
    logger.debug(f"[Bisection] Boundary in [{lo:.6g}, {hi:.6g}] after {iterations} steps")
    return Boundary(value=(lo + hi) / 2, bracket=(lo, hi), at_floor=False, iterations=iterations,
                    diagnostics=diagnostics)
