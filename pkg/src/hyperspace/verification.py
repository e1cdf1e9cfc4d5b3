import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Literal, Optional, Sequence

from config.settings import settings
from core.logspace import log2_pow2_minus_one, log2_real
from covering.covering_numbers import covering_number, packing_number
from covering.profiles import check_schedule
from dimension.minkowski import minkowski_dimension
from gauges.families import GaugeFamily, jump
from hyperspace.hyperspace_covering import hyperspace_covering_number
from models.profiles import LogCountProfile
from models.reports import HyperspaceEntry, VerificationReport
from spaces.dense_nets import Region, dyadic_net
from spaces.metric_spaces import MetricSpace

logger = logging.getLogger(__name__)

NetGenerator = Callable[[object], Sequence]


def interval_net_generator(lo=0, hi=1, refinement: int = 4) -> NetGenerator:
    """delta -> dyadic grid of [lo, hi] with covering radius at most delta/refinement, as floats."""
    region = Region.interval(lo, hi)

    def generate(delta):
        return dyadic_net(region, delta / refinement).points(exact=False)

    generate.descriptor = f"interval[{lo},{hi}]/{refinement}"
    return generate


def fixed_set_generator(points: Sequence, descriptor: str = "fixed") -> NetGenerator:
    """The same finite set at every scale."""
    frozen = list(points)

    def generate(delta):
        return frozen

    generate.descriptor = descriptor
    return generate


def hyperspace_profile(space: MetricSpace, generator: NetGenerator, delta_schedule: Sequence,
                       include_exact: bool = False, workers: Optional[int] = None) -> List[HyperspaceEntry]:
    """Per-scale N(E, delta), M(E, 2 delta) and the log2 bounds on N(K(E), delta)."""
    schedule = check_schedule(delta_schedule, module="hyperspace")
    workers = settings.WORKERS if workers is None else workers

    def row(delta) -> HyperspaceEntry:
        points = generator(delta)
        if include_exact:
            count = hyperspace_covering_number(space, points, delta, mode="exact")
            n_cover, n_pack, exact = count.n_cover, count.n_pack_2delta, count.exact
        else:
            n_cover = covering_number(space, points, delta)
            n_pack = packing_number(space, points, 2 * delta)
            exact = None
        logger.info(f"[Hyperspace] delta={float(delta):.6g}: |net|={len(points)} N={n_cover} M(2d)={n_pack}")
        return HyperspaceEntry(
            delta=float(delta),
            n_cover=n_cover,
            n_pack_2delta=n_pack,
            log2_lower=log2_pow2_minus_one(n_pack),
            log2_upper=float(n_cover),
            exact=exact,
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(row, schedule))
    return [row(d) for d in schedule]


def verify_hyperspace_minkowski(space: MetricSpace, generator: NetGenerator, family: GaugeFamily,
                                delta_schedule: Sequence, kind: Literal["lower", "upper"] = "upper",
                                tolerance: Optional[float] = None, window: Optional[int] = None,
                                include_exact: bool = False) -> VerificationReport:
    """
    Desk check that the jump-gauged dimension of K(E) matches the gauged
    dimension of E. The hyperspace side is estimated twice, from the lower
    and the upper log-count bound; both must lie within `tolerance`.
    """
    tolerance = settings.HYPERSPACE_TOLERANCE if tolerance is None else tolerance
    profile = hyperspace_profile(space, generator, delta_schedule, include_exact)
    log_deltas = [log2_real(d) for d in check_schedule(delta_schedule, module="hyperspace")]

    set_counts = LogCountProfile(
        log2_deltas=log_deltas, log2_counts=[log2_real(e.n_cover) for e in profile], source="set",
    )
    lower_counts = LogCountProfile(
        log2_deltas=log_deltas, log2_counts=[e.log2_lower for e in profile], source="hyperspace:lower",
    )
    upper_counts = LogCountProfile(
        log2_deltas=log_deltas, log2_counts=[e.log2_upper for e in profile], source="hyperspace:upper",
    )

    jumped = jump(family)
    set_estimate = minkowski_dimension(set_counts, family, kind, window=window)
    hyper_lower = minkowski_dimension(lower_counts, jumped, kind, window=window)
    hyper_upper = minkowski_dimension(upper_counts, jumped, kind, window=window)
    difference = max(abs(hyper_lower.value - set_estimate.value), abs(hyper_upper.value - set_estimate.value))
    passed = difference <= tolerance

    log = logger.info if passed else logger.warning
    log(f"[Hyperspace] {family.descriptor} {kind}: dim E={set_estimate.value:.4f}, "
        f"dim K(E) in [{hyper_lower.value:.4f}, {hyper_upper.value:.4f}], difference {difference:.4f}")
    return VerificationReport(
        family=family.descriptor,
        kind=kind,
        set_estimate=set_estimate,
        hyperspace_lower_estimate=hyper_lower,
        hyperspace_upper_estimate=hyper_upper,
        difference=difference,
        tolerance=tolerance,
        passed=passed,
        profile=profile,
    )
