import logging

from gauges.grammar import parse_gauge
from gauges.precision import canonical_precision, harmonic_precision
from gauges.validation import validate_gauge_family, validate_precision_family
from models.run_config import RunConfig
from tools.schedules import parse_schedule

logger = logging.getLogger(__name__)


def run_gauge_validate(config: RunConfig) -> dict:
    family = parse_gauge(config.gauge)
    schedule = parse_schedule(config.schedule or "geo:2,40")
    logger.info(f"[GaugeRunner] Validating {family.descriptor} on {len(schedule)} scales")

    report = validate_gauge_family(family, config.s_grid, schedule)
    precision = canonical_precision() if config.precision == "canonical" else harmonic_precision()
    precision_report = validate_precision_family(precision, family, config.pairs, config.r_max)

    failed = len(report.failed()) + len(precision_report.failed())
    return {
        "status": "success",
        "message": f"{family.descriptor}: {failed} failed checks "
                   f"({len(report.checks)} gauge, {len(precision_report.checks)} precision)",
        "data": {
            "gauge": report.to_json_dict(),
            "precision": precision_report.to_json_dict(),
            "passed": report.passed and precision_report.passed,
        },
    }
