import logging

from constructions.sampling import sample_points
from constructions.seven_adic import self_similar_e0
from core.errors import ConfigError
from gauges.grammar import parse_gauge
from hyperspace.verification import fixed_set_generator, interval_net_generator, verify_hyperspace_minkowski
from models.run_config import RunConfig
from runners.inputs import load_space_and_points
from spaces.metric_spaces import EuclideanSpace
from tools.schedules import parse_schedule

logger = logging.getLogger(__name__)


def run_hyper_verify(config: RunConfig) -> dict:
    family = parse_gauge(config.gauge)
    space = EuclideanSpace(1)
    if config.net_kind == "interval01":
        generator = interval_net_generator(0, 1, config.refinement)
        default_schedule = "geo:2,16"
    elif config.net_kind == "e0":
        generator = fixed_set_generator(sample_points(self_similar_e0(config.depth)), f"e0-endpoints[{config.depth}]")
        default_schedule = f"geo:7,{config.depth}"
    else:
        space, points = load_space_and_points(config)
        generator = fixed_set_generator(points, config.points or config.matrix)
        default_schedule = None
    descriptor = config.schedule or default_schedule
    if descriptor is None:
        raise ConfigError("hyper-verify on --points needs --schedule", module="cli")
    schedule = parse_schedule(descriptor)
    logger.info(f"[HyperspaceRunner] {generator.descriptor} under {family.descriptor}, {len(schedule)} scales")

    report = verify_hyperspace_minkowski(space, generator, family, schedule, config.kind,
                                         tolerance=config.tolerance, window=config.window,
                                         include_exact=config.include_exact)
    data = report.to_json_dict()
    data["generator"] = generator.descriptor
    return {
        "status": "success",
        "message": f"difference {report.difference:.4f} (tolerance {report.tolerance:g}): "
                   f"{'passed' if report.passed else 'failed'}",
        "data": data,
    }
