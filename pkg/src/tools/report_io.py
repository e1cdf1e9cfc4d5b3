import json
import logging
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Tuple, Union

import numpy as np
import pandas as pd

from core.errors import ConfigError
from models.base import SCHEMA_VERSION

logger = logging.getLogger(__name__)

__version__ = "1.0.0"

PathLike = Union[str, Path]

DIAGNOSTIC_COLUMNS = ["delta", "count_or_k", "gauge_value_log2", "candidate_s", "trend"]
HYPERSPACE_COLUMNS = ["delta", "n_cover", "n_pack_2delta", "log2_lower", "log2_upper", "exact"]


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def build_artifact(command: str, config: Dict[str, Any], data: Dict[str, Any], message: str = "") -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "version": __version__,
        "config": config,
        "message": message,
        "data": data,
        "metadata": {"created_at": datetime.now(timezone.utc).isoformat()},
    }


def dumps_artifact(artifact: dict) -> str:
    return json.dumps(artifact, sort_keys=True, indent=2, default=_default)


def write_artifact(path: PathLike, artifact: dict) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_artifact(artifact) + "\n")
    logger.info(f"[ReportIO] Wrote {artifact['command']} artifact to {path}")
    return path


def load_artifact(path: PathLike) -> dict:
    try:
        artifact = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read artifact {path}: {e}", module="cli")
    if artifact.get("schema") != SCHEMA_VERSION:
        raise ConfigError(f"{path}: unsupported schema {artifact.get('schema')!r}", module="cli")
    return artifact


def without_metadata(artifact: dict) -> dict:
    """The artifact minus its timestamps, for determinism comparisons."""
    return {k: v for k, v in artifact.items() if k != "metadata"}


def _estimate_rows(estimate: dict, profile_rows: List[Tuple[float, float]]) -> List[dict]:
    rows = []
    for record in estimate.get("diagnostics", []):
        values = record["values"]
        window = profile_rows[-len(values):] if values else []
        for (delta, count), value in zip(window, values):
            rows.append({
                "delta": delta,
                "count_or_k": count,
                "gauge_value_log2": value - _log2(count),
                "candidate_s": record["s"],
                "trend": "accept" if record["accepted"] else "reject",
            })
    return rows


def _log2(count: float) -> float:
    return float(np.log2(count)) if count > 0 else float("-inf")


def table_rows(artifact: dict) -> Tuple[List[str], List[dict]]:
    """Stable columns and rows for the artifact's plot-ready table."""
    command = artifact["command"]
    data = artifact.get("data", {})
    if command == "hyper-verify":
        return HYPERSPACE_COLUMNS, [{c: row.get(c) for c in HYPERSPACE_COLUMNS} for row in data.get("profile", [])]
    if command == "dim-estimate":
        profile = [(e["delta"], e["n_cover"]) for e in data.get("profile", {}).get("entries", [])]
        estimate = data.get("estimates", {}).get("bisection")
        return DIAGNOSTIC_COLUMNS, _estimate_rows(estimate, profile) if estimate else []
    if command == "algodim":
        profile = data.get("profile")
        if not profile:
            return ["log2_delta", "k", "provenance"], []
        rows = [{"log2_delta": e["log2_delta"], "k": e["k"], "provenance": profile["provenance"]}
                for e in profile["entries"]]
        return ["log2_delta", "k", "provenance"], rows
    if command == "construct":
        columns = ["level", "lo", "hi", "label"]
        stage = data.get("intervals")
        if not stage:
            return columns, []
        d = 7 ** stage["denominator_power"]
        rows = [{"level": stage["level"], "lo": f"{lo}/{d}", "hi": f"{hi}/{d}", "label": label}
                for (lo, hi), label in zip(stage["intervals"], stage["labels"])]
        return columns, rows
    if command == "gauge-validate":
        columns = ["report", "name", "parameter", "passed", "one_sided"]
        rows = []
        for report in ("gauge", "precision"):
            for check in data.get(report, {}).get("checks", []):
                rows.append({"report": report, **{c: check.get(c) for c in columns[1:]}})
        return columns, rows
    if command == "oracle-suite":
        columns = ["check", "instances", "mismatches", "passed"]
        return columns, [{"check": name, **{c: r.get(c) for c in columns[1:]}} for name, r in data.items()]
    raise ConfigError(f"no table layout for command '{command}'", module="cli")


def emit_table(artifact: dict, path: PathLike, format: Literal["csv", "json"] = "csv") -> Path:
    """Write the artifact's table; an empty diagnostic set yields a header-only CSV."""
    columns, rows = table_rows(artifact)
    frame = pd.DataFrame(rows, columns=columns)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if format == "csv":
        frame.to_csv(path, index=False)
    elif format == "json":
        frame.to_json(path, orient="records", indent=2)
    else:
        raise ConfigError(f"unknown table format '{format}'", module="cli")
    logger.info(f"[ReportIO] Wrote {len(frame)} table rows to {path}")
    return path
