"""
Gauged algorithmic dimension of complexity profiles.

For a candidate s the profile is turned into the log2 sequence
k(delta) + log2 phi_s(delta), i.e. 2^k * phi_s(delta), and classified by the
same finite-window trend rule as Minkowski estimates.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from core.errors import ConfigError, PreconditionError
from core.logspace import safe_exp2
from algodim.complexity import dyadic_schedule
from dimension.trend import Kind, bisect_boundary, tends_to_zero, window_size
from gauges.families import GaugeFamily, jump
from models.profiles import ComplexityEntry, ComplexityProfile
from models.reports import DimensionEstimate

logger = logging.getLogger(__name__)


def _window(profile: ComplexityProfile, window: Optional[int]) -> Tuple[List[float], List[float]]:
    n = len(profile)
    if n < 4:
        raise PreconditionError(f"profile has {n} scales, at least 4 are needed", module="algodim")
    size = window_size(n, window)
    entries = profile.entries[-size:]
    return [e.log2_delta for e in entries], [e.k for e in entries]


def _estimate(boundary, kind: Kind, family: GaugeFamily, log_deltas: List[float], profile: ComplexityProfile,
              method: str = "gauged-algo", summary: Optional[dict] = None) -> DimensionEstimate:
    return DimensionEstimate(
        value=boundary.value,
        bracket=boundary.bracket,
        kind=kind,
        scale_window=(safe_exp2(log_deltas[0]), safe_exp2(log_deltas[-1])),
        log2_window=(log_deltas[0], log_deltas[-1]),
        method=method,
        family=family.descriptor,
        at_floor=boundary.at_floor,
        iterations=boundary.iterations,
        diagnostics=boundary.diagnostics,
        summary={"provenance": profile.provenance, "descriptor": profile.descriptor, **(summary or {})},
    )


def gauged_dim_from_profile(profile: ComplexityProfile, family: GaugeFamily, kind: Kind = "lower",
                            s_min: Optional[float] = None, s_max: Optional[float] = None,
                            tolerance: Optional[float] = None, window: Optional[int] = None,
                            max_iter: Optional[int] = None) -> DimensionEstimate:
    """inf{s : lim-op 2^k(delta) phi_s(delta) = 0}; kind 'lower' is the liminf version."""
    log_deltas, ks = _window(profile, window)

    def decide(s: float):
        return tends_to_zero(s, [k + family.log2_at(s, L) for k, L in zip(ks, log_deltas)], kind)

    boundary = bisect_boundary(decide, s_min, s_max, tolerance, max_iter, module="algodim")
    logger.info(f"[Algodim] {kind} {family.descriptor} dimension {boundary.value:.4f} of {profile.descriptor}")
    return _estimate(boundary, kind, family, log_deltas, profile)


def direct_dim_from_profile(profile: ComplexityProfile, family: GaugeFamily, kind: Kind = "lower",
                            s_min: Optional[float] = None, s_max: Optional[float] = None,
                            tolerance: Optional[float] = None, window: Optional[int] = None,
                            max_iter: Optional[int] = None) -> DimensionEstimate:
    """inf{s : lim-op k(delta) phi_s(delta) = 0}; k = 0 contributes exact zeros."""
    log_deltas, ks = _window(profile, window)
    log_ks = [math.log2(k) if k > 0 else -math.inf for k in ks]

    def decide(s: float):
        return tends_to_zero(s, [k + family.log2_at(s, L) for k, L in zip(log_ks, log_deltas)], kind)

    boundary = bisect_boundary(decide, s_min, s_max, tolerance, max_iter, module="algodim")
    return _estimate(boundary, kind, family, log_deltas, profile, summary={"functional": "direct"})


def jump_characterization(profile: ComplexityProfile, family: GaugeFamily, kind: Kind = "upper",
                          **options) -> Tuple[float, float]:
    """
    (s_direct, s_jump): the direct functional under `family` next to the
    gauged dimension under jump(family). The two coincide up to bisection tolerance.
    """
    s_direct = direct_dim_from_profile(profile, family, kind, **options).value
    s_jump = gauged_dim_from_profile(profile, jump(family), kind, **options).value
    tolerance = options.get("tolerance")
    if tolerance is None:
        tolerance = settings.BISECTION_TOLERANCE
    if abs(s_direct - s_jump) > 2 * tolerance:
        logger.warning(f"[Algodim] Jump characterization gap {abs(s_direct - s_jump):.4g} "
                       f"on {profile.descriptor}")
    return s_direct, s_jump


def ratio_dimension_from_profile(profile: ComplexityProfile, kind: Kind = "lower",
                                 window: Optional[int] = None) -> DimensionEstimate:
    """Direct liminf/limsup surrogate: min/max of k(delta)/log2(1/delta) over the window."""
    log_deltas, ks = _window(profile, window)
    if any(L >= 0 for L in log_deltas):
        raise PreconditionError("ratio dimension needs precisions below 1", module="algodim")
    ratios = [k / -L for k, L in zip(ks, log_deltas)]
    value = min(ratios) if kind == "lower" else max(ratios)
    return DimensionEstimate(
        value=value,
        bracket=(min(ratios), max(ratios)),
        kind=kind,
        scale_window=(safe_exp2(log_deltas[0]), safe_exp2(log_deltas[-1])),
        log2_window=(log_deltas[0], log_deltas[-1]),
        method="ratio",
        family="theta",
        summary={"ratios": ratios, "descriptor": profile.descriptor},
    )


def synthetic_profile(expression: str, schedule: Optional[Sequence[float]] = None) -> ComplexityProfile:
    """
    Profile from a descriptor, with r = log2(1/delta):

    linear:a         k = a*r
    power:a,c        k = c*2^(a*r)
    alternating:a,b  k = a*r for even r, b*r for odd r
    constant:k       k
    """
    logs = [float(L) for L in (schedule if schedule is not None else dyadic_schedule(40))]
    name, _, args = expression.partition(":")
    try:
        params = [float(a) for a in args.split(",")] if args else []
    except ValueError:
        raise ConfigError(f"bad numbers in profile descriptor '{expression}'", module="algodim")
    arity = {"linear": 1, "power": 2, "alternating": 2, "constant": 1}
    if name not in arity or len(params) != arity[name]:
        raise ConfigError(
            f"unknown profile descriptor '{expression}'; expected one of "
            f"linear:a, power:a,c, alternating:a,b, constant:k",
            module="algodim",
        )

    def k_at(r: float) -> float:
        if name == "linear":
            return params[0] * r
        if name == "power":
            a, c = params
            return c * safe_exp2(a * r)
        if name == "alternating":
            return (params[0] if int(r) % 2 == 0 else params[1]) * r
        return params[0]

    entries = []
    for L in logs:
        k = k_at(-L)
        if not math.isfinite(k) or k < 0:
            raise PreconditionError(f"'{expression}' is not a finite nonnegative value at 2^{L:g}", module="algodim")
        entries.append(ComplexityEntry(log2_delta=L, k=k))
    return ComplexityProfile(entries=entries, provenance="synthetic", descriptor=expression)


def random_power_profiles(count: int, seed: int = 0, schedule: Optional[Sequence[float]] = None) -> List[ComplexityProfile]:
    """
    Power profiles k = c*2^(a*r) with c >= 1 whose exponent and constant
    switch once among the coarse scales, ahead of the trend window.
    """
    rng = np.random.default_rng(seed)
    logs = [float(L) for L in (schedule if schedule is not None else dyadic_schedule(40))]
    if len(logs) < 4:
        raise PreconditionError("random profiles need at least 4 precisions", module="algodim")
    profiles = []
    for i in range(count):
        a1, a2 = rng.uniform(0.05, 1.5, size=2)
        c1, c2 = rng.uniform(1.0, 4.0, size=2)
        cut = int(rng.integers(1, len(logs) // 2 + 1))
        entries = []
        for j, L in enumerate(logs):
            a, c = (a1, c1) if j < cut else (a2, c2)
            entries.append(ComplexityEntry(log2_delta=L, k=float(c * safe_exp2(-a * L))))
        descriptor = f"piecewise-power[{i}]:{a1:.3f},{c1:.3f}|{a2:.3f},{c2:.3f}@{cut}"
        profiles.append(ComplexityProfile(entries=entries, provenance="synthetic", descriptor=descriptor))
    return profiles
