import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from core.errors import PreconditionError
from core.logspace import LogValue, log2_real, log2_sum
from covering.covering_numbers import packing_number
from covering.profiles import check_schedule
from dimension.trend import bisect_boundary, diverges, tends_to_zero
from gauges.families import GaugeFamily
from models.reports import DimensionEstimate
from spaces.metric_spaces import MetricSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaugeSum:
    """A sum of gauge values in log space; `empty` flags the empty cover."""

    total: LogValue
    terms: int
    empty: bool = False
    mode: Optional[str] = None

    @property
    def value(self) -> float:
        return self.total.value

    @property
    def log2(self) -> float:
        return self.total.log2


def cover_sum(diameters: Sequence, family: GaugeFamily, s: float) -> GaugeSum:
    """Sum of phi_s(diam U) over an explicit cover, with compensated summation."""
    if len(diameters) == 0:
        logger.warning("[Dimension] cover_sum of an empty cover is 0")
        return GaugeSum(total=LogValue(-math.inf), terms=0, empty=True)
    if any(not d > 0 for d in diameters):
        raise PreconditionError("cover diameters must be positive", module="dimension")
    logs = [family.log2_at(s, log2_real(d)) for d in diameters]
    return GaugeSum(total=LogValue(log2_sum(logs)), terms=len(diameters))


def packing_sum(space: MetricSpace, E: Sequence, delta, family: GaugeFamily, s: float,
                mode: str = "exact") -> GaugeSum:
    """
    N_p(E, delta) * phi_s(delta): the equal-diameter packing value, a lower
    bound for the delta-packing pre-measure.
    """
    n_pack = packing_number(space, E, delta, mode=mode)
    log2_value = log2_real(n_pack) + family.log2_at(s, log2_real(delta))
    return GaugeSum(total=LogValue(log2_value), terms=n_pack, mode=mode)


def hausdorff_upper_bound(covers: Sequence[Sequence], family: GaugeFamily,
                          s_min: Optional[float] = None, s_max: Optional[float] = None,
                          tolerance: Optional[float] = None) -> DimensionEstimate:
    """
    inf{s : cover sums of a refining family of explicit covers tend to 0};
    an upper bound for the gauged Hausdorff dimension of the covered set.
    Covers are ordered coarse to fine by their largest diameter.
    """
    if len(covers) < 4:
        raise PreconditionError("need at least 4 covers", module="dimension")
    meshes = [max(c) for c in covers]
    check_schedule(meshes, module="dimension")
    log_meshes = [log2_real(m) for m in meshes]

    def decide(s: float):
        return tends_to_zero(s, [cover_sum(c, family, s).log2 for c in covers], "upper")

    boundary = bisect_boundary(decide, s_min, s_max, tolerance)
    return DimensionEstimate(
        value=boundary.value,
        bracket=boundary.bracket,
        kind="upper",
        scale_window=(float(meshes[0]), float(meshes[-1])),
        log2_window=(log_meshes[0], log_meshes[-1]),
        method="cover-sum",
        family=family.descriptor,
        at_floor=boundary.at_floor,
        iterations=boundary.iterations,
        diagnostics=boundary.diagnostics,
    )


def packing_lower_bound(space: MetricSpace, E: Sequence, delta_schedule: Sequence, family: GaugeFamily,
                        s_min: Optional[float] = None, s_max: Optional[float] = None,
                        tolerance: Optional[float] = None, mode: str = "exact") -> DimensionEstimate:
    """
    sup{s : packing sums N_p(E, delta) phi_s(delta) grow without bound along
    the schedule}, using the strict-growth surrogate.
    """
    schedule = check_schedule(delta_schedule, module="dimension")
    if len(schedule) < 4:
        raise PreconditionError("need at least 4 scales", module="dimension")
    log_counts = [log2_real(packing_number(space, E, d, mode=mode)) for d in schedule]
    log_deltas = [log2_real(d) for d in schedule]

    def decide(s: float):
        return diverges(s, [c + family.log2_at(s, L) for c, L in zip(log_counts, log_deltas)])

    boundary = bisect_boundary(decide, s_min, s_max, tolerance)
    return DimensionEstimate(
        value=boundary.value,
        bracket=boundary.bracket,
        kind="lower",
        scale_window=(float(schedule[0]), float(schedule[-1])),
        log2_window=(log_deltas[0], log_deltas[-1]),
        method="packing-sum",
        family=family.descriptor,
        at_floor=boundary.at_floor,
        iterations=boundary.iterations,
        diagnostics=boundary.diagnostics,
        summary={"log2_packing_counts": log_counts},
    )
