import logging

from covering.covering_numbers import bounding_region
from covering.profiles import covering_profile
from dimension.minkowski import loglog_slope, minkowski_dimension, ratio_dimension
from gauges.grammar import parse_gauge
from models.run_config import RunConfig
from runners.inputs import load_space_and_points
from spaces.dense_nets import dyadic_net
from tools.schedules import parse_schedule

logger = logging.getLogger(__name__)


def run_dim_estimate(config: RunConfig) -> dict:
    space, points = load_space_and_points(config)
    schedule = parse_schedule(config.schedule or "geo:2,8")
    family = parse_gauge(config.gauge)
    net = None
    if config.centers == "from-net":
        net = dyadic_net(bounding_region(space, points), schedule[-1] / 2)
    logger.info(f"[DimensionRunner] {len(points)} points in {space.descriptor}, {len(schedule)} scales, "
                f"{config.mode} covering")

    profile = covering_profile(space, points, schedule, mode=config.mode, centers=config.centers, net=net,
                               include_pack=config.include_pack, include_dense=config.include_dense,
                               workers=config.workers)
    violations = profile.invariant_violations()

    estimates = {}
    if config.method in ("bisection", "all"):
        estimates["bisection"] = minkowski_dimension(profile, family, config.kind, tolerance=config.tolerance,
                                                     window=config.window)
    if config.method in ("loglog", "all"):
        estimates["loglog"] = loglog_slope(profile, window=config.window, kind=config.kind)
    if config.method in ("ratio", "all"):
        estimates["ratio"] = ratio_dimension(profile, config.kind, window=config.window)

    summary = ", ".join(f"{name} {e.value:.4f}" for name, e in estimates.items())
    return {
        "status": "success",
        "message": f"{config.kind} {family.descriptor} dimension: {summary}",
        "data": {
            "profile": profile.to_json_dict(),
            "estimates": {name: e.to_json_dict() for name, e in estimates.items()},
            "profile_violations": violations,
        },
    }
