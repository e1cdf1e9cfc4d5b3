import logging

from algodim.complexity import complexity_profile_of_point
from algodim.functionals import (
    gauged_dim_from_profile,
    jump_characterization,
    random_power_profiles,
    ratio_dimension_from_profile,
    synthetic_profile,
)
from constructions.bit_source import BitSource
from core.errors import ConfigError
from gauges.grammar import parse_gauge
from models.run_config import RunConfig
from spaces.dense_nets import BinaryExpansion, DyadicEnumeration, Region
from spaces.ingest import parse_number
from spaces.metric_spaces import EuclideanSpace
from tools.schedules import parse_log2_schedule

logger = logging.getLogger(__name__)


def point_from_config(config: RunConfig):
    """random | periodic:<bits> | zero | rational:p/q, as an exact point of [0, 1]."""
    name, _, arg = config.point.partition(":")
    if name == "random":
        return BinaryExpansion(BitSource.from_seed(config.seed).take_string(config.bits))
    if name == "periodic":
        if not arg or set(arg) - {"0", "1"}:
            raise ConfigError(f"periodic point needs a 0/1 pattern, got '{config.point}'", module="cli")
        return BinaryExpansion((arg * (config.bits // len(arg) + 1))[: config.bits])
    if name == "zero":
        return BinaryExpansion("0" * config.bits)
    if name == "rational":
        value = parse_number(arg)
        if not 0 <= value <= 1:
            raise ConfigError(f"rational point must lie in [0, 1], got {value}", module="cli")
        return value
    raise ConfigError(f"unknown point '{config.point}'", module="cli")


def run_algodim(config: RunConfig) -> dict:
    family = parse_gauge(config.gauge)
    if config.profile:
        profile = synthetic_profile(config.profile, parse_log2_schedule(config.schedule or "dyadic:40"))
    else:
        enumeration = DyadicEnumeration(Region.interval(0, 1))
        x = point_from_config(config)
        profile = complexity_profile_of_point(EuclideanSpace(1), enumeration, x,
                                              parse_log2_schedule(config.schedule or "doubling:20"),
                                              workers=config.workers, descriptor=f"lz78:{config.point}")
    options = dict(tolerance=config.tolerance, window=config.window)
    estimate = gauged_dim_from_profile(profile, family, config.kind, **options)
    ratio = ratio_dimension_from_profile(profile, config.kind, window=config.window)
    s_direct, s_jump = jump_characterization(profile, family, config.kind, **options)

    data = {
        "profile": profile.to_json_dict(),
        "estimate": estimate.to_json_dict(),
        "ratio": ratio.to_json_dict(),
        "jump_characterization": {"s_direct": s_direct, "s_jump": s_jump},
    }
    if config.characterize:
        gaps = []
        for synthetic in random_power_profiles(config.characterize, config.seed):
            a, b = jump_characterization(synthetic, family, config.kind, **options)
            gaps.append(abs(a - b))
        data["characterization"] = {"profiles": len(gaps), "max_discrepancy": max(gaps)}
        logger.info(f"[AlgodimRunner] Jump characterization over {len(gaps)} profiles: max gap {max(gaps):.3g}")
    return {
        "status": "success",
        "message": f"{config.kind} {family.descriptor} dimension {estimate.value:.4f} "
                   f"(ratio {ratio.value:.4f}) of {profile.descriptor}",
        "data": data,
    }
