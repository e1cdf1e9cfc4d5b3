import logging
import math
from typing import List, Optional, Sequence, Tuple

from config.settings import settings
from core.errors import PreconditionError
from core.logspace import log2_real, safe_exp2
from gauges.families import GaugeFamily, jump
from gauges.precision import PrecisionFamily
from models.reports import InvariantCheck, ValidationReport

logger = logging.getLogger(__name__)


def _tail(seq: Sequence[float]) -> List[float]:
    width = max(2, math.ceil(len(seq) / 2))
    return list(seq[-width:])


def _eventually_decreasing(seq: Sequence[float]) -> bool:
    tail = [v for v in _tail(seq) if not math.isnan(v)]
    if len(tail) < 2:
        return False
    return all(b < a or b == -math.inf for a, b in zip(tail, tail[1:]))


def _vanishes(seq: Sequence[float], threshold: float) -> bool:
    """Surrogate for 'tends to 0' on log2 values: eventual strict decrease, last sample below threshold."""
    return _eventually_decreasing(seq) and seq[-1] < math.log2(threshold)


def _threshold(threshold: Optional[float]) -> float:
    threshold = settings.VANISH_THRESHOLD if threshold is None else threshold
    if not threshold > 0:
        raise PreconditionError(f"vanishing threshold must be positive, got {threshold}", module="gauge")
    return threshold


def _log_schedule(delta_schedule: Sequence) -> List[float]:
    if len(delta_schedule) < 2:
        raise PreconditionError("delta schedule needs at least two scales", module="gauge")
    if any(d <= 0 for d in delta_schedule):
        raise PreconditionError("delta schedule must be positive", module="gauge")
    if any(b >= a for a, b in zip(delta_schedule, delta_schedule[1:])):
        raise PreconditionError("delta schedule must be strictly decreasing", module="gauge")
    return [log2_real(d) for d in delta_schedule]


def ordering_check(family: GaugeFamily, s: float, t: float, delta_schedule: Sequence,
                   threshold: Optional[float] = None) -> InvariantCheck:
    """phi_s/phi_t eventually decreases toward 0 for s > t."""
    threshold = _threshold(threshold)
    logs = _log_schedule(delta_schedule)
    ratios = [family.log2_at(s, L) - family.log2_at(t, L) for L in logs]
    finite = [r for r in ratios if not math.isnan(r)]
    passed = len(finite) >= 2 and _vanishes(finite, threshold)
    return InvariantCheck(
        name="ordering", parameter=s, passed=passed,
        witness=None if passed else {"t": t, "log2_ratios": finite[-4:]},
    )


def doubling_check(family: GaugeFamily, s: float, t: float, delta_schedule: Sequence,
                   threshold: Optional[float] = None) -> InvariantCheck:
    """phi_t(2 delta)/phi_s(delta) -> 0 for t > s."""
    if not t > s:
        raise PreconditionError("doubling check needs t > s", module="gauge")
    threshold = _threshold(threshold)
    logs = _log_schedule(delta_schedule)
    seq = [family.log2_at(t, L + 1.0) - family.log2_at(s, L) for L in logs]
    passed = _vanishes(seq, threshold)
    return InvariantCheck(
        name="doubling", parameter=t, passed=passed,
        witness=None if passed else {"s": s, "log2_ratios": seq[-4:]},
    )


def jump_smallness(family: GaugeFamily, s: float, delta_schedule: Sequence,
                   threshold: Optional[float] = None) -> InvariantCheck:
    """phi~_s/phi_s eventually decreases toward 0."""
    threshold = _threshold(threshold)
    logs = _log_schedule(delta_schedule)
    jumped = jump(family)
    seq = [jumped.log2_at(s, L) - family.log2_at(s, L) for L in logs]
    passed = _vanishes(seq, threshold)
    return InvariantCheck(
        name="jump_smallness", parameter=s, passed=passed,
        witness=None if passed else {"log2_ratios": seq[-4:]},
    )


def _continuity(family: GaugeFamily, s: float, delta_schedule: Sequence, tolerance: float,
                steps: int) -> InvariantCheck:
    """|phi(delta +- h) - phi(delta)| at the offset h = delta * 2^-steps on each side."""
    failing = {}
    for delta in delta_schedule:
        d = float(delta)
        base = safe_exp2(family.log2_at(s, math.log2(d)))
        h = d * 2.0 ** (-steps)
        for side, sign in (("left", -1.0), ("right", 1.0)):
            moved = safe_exp2(family.log2_at(s, math.log2(d + sign * h)))
            difference = abs(moved - base)
            if difference > tolerance and side not in failing:
                failing[side] = {"delta": d, "difference": difference}
    left_ok = "left" not in failing
    right_ok = "right" not in failing
    one_sided = None
    if left_ok != right_ok:
        one_sided = "left" if left_ok else "right"
    return InvariantCheck(
        name="continuity", parameter=s, passed=left_ok and right_ok, one_sided=one_sided,
        witness=None if left_ok and right_ok else failing,
    )


def validate_gauge_family(family: GaugeFamily, s_grid: Sequence[float], delta_schedule: Sequence,
                          threshold: Optional[float] = None,
                          continuity_tolerance: Optional[float] = None,
                          continuity_steps: int = 40) -> ValidationReport:
    """
    Sampled check of the gauge-family axioms. Failures are data: every
    check is reported with a witness instead of raising.
    """
    if not s_grid:
        raise PreconditionError("s_grid must be nonempty", module="gauge")
    if any(b <= a for a, b in zip(s_grid, s_grid[1:])):
        raise PreconditionError("s_grid must be strictly ascending", module="gauge")
    if continuity_steps < 1:
        raise PreconditionError(f"continuity_steps must be positive, got {continuity_steps}", module="gauge")
    threshold = _threshold(threshold)
    continuity_tolerance = settings.CONTINUITY_TOLERANCE if continuity_tolerance is None else continuity_tolerance
    logs = _log_schedule(delta_schedule)
    logger.info(f"[GaugeValidator] Validating {family.descriptor} over s={list(s_grid)}, {len(logs)} scales")

    checks: List[InvariantCheck] = []
    for s in s_grid:
        values = [family.log2_at(s, L) for L in logs]

        nan_free = not any(math.isnan(v) for v in values)
        underflowed = sum(1 for v in values if v == -math.inf)
        positive = nan_free and (underflowed == 0 or family.positive_by_construction)
        checks.append(InvariantCheck(
            name="positivity", parameter=s, passed=positive,
            witness={"log2_underflows": underflowed} if underflowed else None,
        ))

        monotone = all(b <= a for a, b in zip(values, values[1:]))
        checks.append(InvariantCheck(
            name="nondecreasing", parameter=s, passed=monotone,
            witness=None if monotone else {"log2_values": values[:4]},
        ))

        vanishing = _vanishes(values, threshold)
        checks.append(InvariantCheck(
            name="vanishes_only_at_zero", parameter=s, passed=vanishing,
            witness=None if vanishing else {"last_log2": values[-1], "threshold": threshold},
        ))

        checks.append(_continuity(family, s, delta_schedule, continuity_tolerance, continuity_steps))
        checks.append(jump_smallness(family, s, delta_schedule, threshold))

    for t, s in zip(s_grid, s_grid[1:]):
        checks.append(ordering_check(family, s, t, delta_schedule, threshold))
        checks.append(doubling_check(family, t, s, delta_schedule, threshold))

    report = ValidationReport(
        subject=family.descriptor,
        checks=checks,
        summaries={"s_grid": list(s_grid), "log2_schedule": logs, "threshold": threshold},
    )
    logger.info(f"[GaugeValidator] {family.descriptor}: {len(report.failed())} of {len(checks)} checks failed")
    return report


def validate_precision_family(precision: PrecisionFamily, family: GaugeFamily,
                              pairs: Sequence[Tuple[float, float]], r_max: int,
                              threshold: Optional[float] = None,
                              cauchy_tolerance: Optional[float] = None,
                              ratio_cap: Optional[float] = None) -> ValidationReport:
    """
    Checks vanishing, the ratio bound and the cross-sum convergence of a
    precision family against a gauge family on the prefix r = 0..r_max.
    """
    if r_max < 8:
        raise PreconditionError(f"r_max must be at least 8, got {r_max}", module="gauge")
    if not pairs:
        raise PreconditionError("at least one (s, t) pair is required", module="gauge")
    if any(not s < t for s, t in pairs):
        raise PreconditionError("every pair needs s < t", module="gauge")
    threshold = _threshold(threshold)
    cauchy_tolerance = settings.CAUCHY_TOLERANCE if cauchy_tolerance is None else cauchy_tolerance
    ratio_cap = settings.RATIO_BOUND_CAP if ratio_cap is None else ratio_cap

    checks: List[InvariantCheck] = []
    summaries = {}
    params = sorted({p for pair in pairs for p in pair})
    for s in params:
        scales = [precision.alpha(s, r) for r in range(r_max + 1)]
        alpha_logs = [a.log2 for a in scales]

        decreasing = all(b < a for a, b in zip(alpha_logs, alpha_logs[1:]))
        decay = min(-alpha_logs[r] / r for r in range(1, r_max + 1))
        vanishing = decreasing and alpha_logs[-1] < math.log2(threshold)
        checks.append(InvariantCheck(
            name="vanishing", parameter=s, passed=vanishing,
            witness={"decay_exponent": decay, "last_log2": alpha_logs[-1]},
        ))

        gauge_logs = [family.log2_at(s, L) for L in alpha_logs]
        steps = [a - b for a, b in zip(gauge_logs, gauge_logs[1:])]
        constant = safe_exp2(max(steps)) if steps else math.inf
        bounded = math.isfinite(constant) and constant <= ratio_cap
        checks.append(InvariantCheck(
            name="ratio_bound", parameter=s, passed=bounded, witness={"constant": constant},
        ))
        summaries[f"s={s:g}"] = {
            "ratio_constant": constant,
            "decay_exponent": decay,
            "exact": all(a.exact for a in scales),
        }

    for s, t in pairs:
        alpha_logs = [precision.alpha(s, r).log2 for r in range(r_max + 1)]
        term_logs = [family.log2_at(t, L) - family.log2_at(s, L) for L in alpha_logs]
        terms = [safe_exp2(x) for x in term_logs]
        partial_sum = math.fsum(terms)
        last_increment = terms[-1]
        q = safe_exp2(term_logs[-1] - term_logs[-2])
        tail = last_increment * q / (1.0 - q) if q < 1.0 else math.inf
        cauchy = last_increment < cauchy_tolerance
        key = f"s={s:g},t={t:g}"
        summaries[key] = {
            "partial_sum": partial_sum,
            "last_increment": last_increment,
            "tail_estimate": tail,
            "cauchy": cauchy,
        }
        checks.append(InvariantCheck(
            name="cross_convergence", parameter=s, passed=cauchy,
            witness={"t": t, "last_increment": last_increment, "partial_sum": partial_sum},
        ))
        if not cauchy:
            logger.info(f"[GaugeValidator] {precision.descriptor}: cross sum for {key} is not Cauchy "
                        f"(increment {last_increment:.3g} >= {cauchy_tolerance:g})")

    return ValidationReport(
        subject=f"{precision.descriptor} vs {family.descriptor}",
        checks=checks,
        summaries=summaries,
    )
