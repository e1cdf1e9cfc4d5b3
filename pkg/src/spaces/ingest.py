import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Union

import pandas as pd

from core.errors import ConfigError
from spaces.metric_spaces import MatrixSpace

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_number(cell) -> Fraction:
    """Exact parse of '0.25', '1/7', '3' or a JSON number; NaN and inf are rejected."""
    text = str(cell).strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not a finite number: {cell!r}", module="metric_core")
    return value


def _rows_to_points(rows: List[List]) -> list:
    if not rows:
        raise ConfigError("point file holds no points", module="metric_core")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ConfigError(f"rows differ in dimension: {sorted(widths)}", module="metric_core")
    points = [tuple(parse_number(c) for c in row) for row in rows]
    if widths == {1}:
        return [p[0] for p in points]
    return points


def read_points_csv(path: PathLike) -> list:
    """
    One point per row, d columns. A first row that does not parse as numbers
    is taken as a header. 1-column files yield scalars, wider ones tuples.
    """
    try:
        frame = pd.read_csv(path, header=None, dtype=str, comment="#", skip_blank_lines=True,
                            keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ConfigError(f"cannot read point CSV {path}: {e}", module="metric_core")
    rows = frame.values.tolist()
    if rows:
        try:
            [parse_number(c) for c in rows[0]]
        except ConfigError:
            rows = rows[1:]
    points = _rows_to_points(rows)
    logger.info(f"[Ingest] Read {len(points)} points from {path}")
    return points


def read_points_json(path: PathLike) -> list:
    """A JSON array of numbers, numeric strings, or equal-length arrays."""
    data = _load_json(path)
    if not isinstance(data, list):
        raise ConfigError(f"{path}: expected a JSON array of points", module="metric_core")
    rows = [row if isinstance(row, list) else [row] for row in data]
    return _rows_to_points(rows)


def read_matrix_json(path: PathLike) -> MatrixSpace:
    """A JSON square matrix of nonnegative distances."""
    data = _load_json(path)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ConfigError(f"{path}: expected a JSON array of rows", module="metric_core")
    n = len(data)
    if any(len(r) != n for r in data):
        raise ConfigError(f"{path}: matrix is not square", module="metric_core")
    values = [[float(parse_number(c)) for c in row] for row in data]
    if any(v < 0 for row in values for v in row):
        raise ConfigError(f"{path}: negative distance entry", module="metric_core")
    return MatrixSpace(values)


def _load_json(path: PathLike):
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read JSON {path}: {e}", module="metric_core")
