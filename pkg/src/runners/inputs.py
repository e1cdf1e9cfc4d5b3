from pathlib import Path
from typing import Tuple

from core.errors import ConfigError
from models.run_config import RunConfig
from spaces.metric_spaces import EuclideanSpace, MetricSpace
from spaces.ingest import read_matrix_json, read_points_csv, read_points_json


def load_space_and_points(config: RunConfig) -> Tuple[MetricSpace, list]:
    """The metric space and finite point set named by --matrix or --points."""
    if config.matrix:
        space = read_matrix_json(config.matrix)
        return space, space.points
    if not config.points:
        raise ConfigError(f"{config.command} needs --points or --matrix", module="cli")
    path = Path(config.points)
    points = read_points_json(path) if path.suffix.lower() == ".json" else read_points_csv(path)
    dim = len(points[0]) if isinstance(points[0], tuple) else 1
    return EuclideanSpace(dim), points
