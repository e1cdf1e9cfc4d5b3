import logging

from constructions.bit_source import BitSource
from constructions.counterexamples import one_over_n_points
from constructions.sampling import prefix_complexity_trace, sample_points
from constructions.seven_adic import build_construction, level_violations
from models.run_config import RunConfig

logger = logging.getLogger(__name__)


def _bit_source(config: RunConfig) -> BitSource:
    return BitSource.from_file(config.bits_file) if config.bits_file else BitSource.from_seed(config.seed)


def run_construct(config: RunConfig) -> dict:
    if config.construction == "one-over-n":
        points = one_over_n_points(config.n_max)
        return {
            "status": "success",
            "message": f"{len(points)} points 1/n",
            "data": {"construction": "one-over-n", "points": [str(p) for p in points]},
        }

    data = {"construction": config.construction}
    if config.construction == "cantor7":
        bits = _bit_source(config)
        levels = build_construction(bits, config.depth)
        data.update(bit_source=bits.descriptor, bits_consumed=bits.cursor)
        if config.depth >= 1:
            data["prefix_trace"] = prefix_complexity_trace(_bit_source(config), config.depth)
    else:
        levels = build_construction(BitSource.constant(0), config.depth)
    stage = levels[-1]
    violations = level_violations(levels)
    for problem in violations:
        logger.warning(f"[ConstructionRunner] {problem}")

    data.update(
        intervals=stage.to_json_dict(),
        level_counts=[len(level) for level in levels],
        violations=violations,
    )
    if config.sample:
        data["points"] = [str(p) for p in sample_points(stage, config.per_interval, config.sample, config.seed)]
    return {
        "status": "success",
        "message": f"{config.construction} depth {config.depth}: {len(stage)} intervals, "
                   f"{len(violations)} invariant violations",
        "data": data,
    }
