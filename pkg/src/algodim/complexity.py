import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence

from config.settings import settings
from core.errors import NetTooCoarseError, PreconditionError
from core.logspace import safe_exp2
from algodim.lz_coder import ProxyCoder, lz_complexity
from models.profiles import ComplexityEntry, ComplexityProfile
from spaces.dense_nets import DyadicEnumeration, dyadic_net
from spaces.metric_spaces import MetricSpace

logger = logging.getLogger(__name__)


def dyadic_schedule(depth: int, start: int = 1) -> List[float]:
    """log2 precisions -start, ..., -depth (delta = 2^-r)."""
    if depth < start or start < 1:
        raise PreconditionError(f"need 1 <= start <= depth, got ({start}, {depth})", module="algodim")
    return [float(-r) for r in range(start, depth + 1)]


def precision_doubling_schedule(depth: int) -> List[float]:
    """log2 precisions -2^i for i = 1..depth; codewords double in length per step."""
    if depth < 1:
        raise PreconditionError("schedule depth must be at least 1", module="algodim")
    return [float(-(2 ** i)) for i in range(1, depth + 1)]


def candidate_codewords(space: MetricSpace, enumeration: DyadicEnumeration, x, log2_delta: float) -> List[str]:
    """Codewords of the level-matched net points within delta of x."""
    if enumeration.region.dim == 1 and float(log2_delta).is_integer() and log2_delta <= 0:
        return [word for word, _ in enumeration.candidates_within(x, log2_delta)]
    delta = safe_exp2(log2_delta)
    if delta == 0:
        raise PreconditionError(f"precision 2^{log2_delta} needs an interval region", module="algodim")
    delta = Fraction(delta)
    x = space.check_point(x)
    net = dyadic_net(enumeration.region, delta)
    return [w for w, q in zip(net.codewords(), net.points()) if space.distance(q, x) <= delta]


def complexity_profile_of_point(space: MetricSpace, dense_enum: DyadicEnumeration, x, schedule: Sequence[float],
                                coder: Optional[ProxyCoder] = None, workers: Optional[int] = None,
                                descriptor: str = "") -> ComplexityProfile:
    """
    k(delta) = min proxy code length over the net points within delta of x.

    The schedule holds log2 precisions, strictly decreasing; the enumeration
    is fixed for the run and recorded in the descriptor.
    """
    logs = [float(L) for L in schedule]
    if not logs:
        raise PreconditionError("complexity schedule is empty", module="algodim")
    if any(b >= a for a, b in zip(logs, logs[1:])):
        raise PreconditionError("complexity schedule must be strictly decreasing", module="algodim")
    coder = coder or ProxyCoder()
    workers = settings.WORKERS if workers is None else workers

    def entry(log2_delta: float) -> ComplexityEntry:
        words = candidate_codewords(space, dense_enum, x, log2_delta)
        if not words:
            raise NetTooCoarseError(f"no net point within 2^{log2_delta:g} of the point", module="algodim")
        k = min(lz_complexity(w, coder) for w in words)
        logger.debug(f"[Algodim] 2^{log2_delta:g}: {len(words)} candidates, k={k}")
        return ComplexityEntry(log2_delta=log2_delta, k=k)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(entry, logs))
    else:
        entries = [entry(L) for L in logs]
    logger.info(f"[Algodim] Profiled point over {len(entries)} precisions with {coder.name} "
                f"on {dense_enum.descriptor}")
    return ComplexityProfile(entries=entries, provenance="proxy",
                             descriptor=descriptor or f"{coder.name}:{dense_enum.descriptor}")
