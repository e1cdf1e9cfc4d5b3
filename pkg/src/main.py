import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from config.settings import settings
from core.errors import ConfigError, GaugeDimError
from models.run_config import RunConfig
from runners.dispatcher import EXIT_CONFIG, EXIT_OK, dispatcher
from tools.report_io import emit_table

logger = logging.getLogger(__name__)


def _floats(text: str) -> List[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaugedim", description="Gauged fractal dimension toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, argument_default=None)
        p.add_argument("--config", help="JSON config file; flags override its values")
        p.add_argument("--out", help="Path of the JSON artifact")
        p.add_argument("--table", help="Also write the plot-ready table to this path")
        p.add_argument("--table-format", choices=["csv", "json"], default="csv")
        p.add_argument("--seed", type=int)
        p.add_argument("--gauge", help="theta | pow(c) | jump(...)")
        p.add_argument("--schedule", help="geo:base,count[,start[,step]] | list:d1,d2,...")
        p.add_argument("--workers", type=int)
        return p

    p = command("gauge-validate", "Sampled gauge and precision family checks")
    p.add_argument("--s-grid", dest="s_grid", type=_floats)
    p.add_argument("--precision", choices=["canonical", "harmonic"])
    p.add_argument("--r-max", dest="r_max", type=int)

    p = command("dim-estimate", "Covering profile and gauged Minkowski estimates of a point set")
    p.add_argument("--points", help="CSV or JSON point file")
    p.add_argument("--matrix", help="JSON distance matrix")
    p.add_argument("--kind", choices=["lower", "upper"])
    p.add_argument("--mode", choices=["exact", "greedy"])
    p.add_argument("--centers", choices=["anywhere", "from-net"])
    p.add_argument("--method", choices=["bisection", "loglog", "ratio", "all"])
    p.add_argument("--window", type=int)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--no-pack", dest="include_pack", action="store_false", default=None)
    p.add_argument("--dense", dest="include_dense", action="store_true", default=None,
                   help="Add the dense-net cover count N^(E, delta) per scale")

    p = command("hyper-verify", "Hyperspace Minkowski dimension desk check")
    p.add_argument("--net-kind", dest="net_kind", choices=["interval01", "e0", "points"])
    p.add_argument("--points")
    p.add_argument("--depth", type=int)
    p.add_argument("--refinement", type=int)
    p.add_argument("--kind", choices=["lower", "upper"])
    p.add_argument("--window", type=int)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--include-exact", dest="include_exact", action="store_true", default=None)

    p = command("construct", "Seven-adic constructions and the 1/n set")
    p.add_argument("--kind", dest="construction", choices=["cantor7", "e0", "one-over-n"])
    p.add_argument("--depth", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--bits-file", dest="bits_file")
    p.add_argument("--sample", choices=["endpoints", "uniform"])
    p.add_argument("--per-interval", dest="per_interval", type=int)

    p = command("algodim", "Proxy complexity profiles and gauged algorithmic dimension")
    p.add_argument("--point", help="random | periodic:<bits> | zero | rational:p/q")
    p.add_argument("--bits", type=int)
    p.add_argument("--profile", help="Synthetic profile, e.g. linear:1 or power:0.5,1")
    p.add_argument("--kind", choices=["lower", "upper"])
    p.add_argument("--window", type=int)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--characterize", type=int)

    p = command("oracle-suite", "Exact searches against naive oracles")
    p.add_argument("--instances", type=int)
    p.add_argument("--max-points", dest="max_points", type=int)
    p.add_argument("--hyper-instances", dest="hyper_instances", type=int)
    p.add_argument("--hyper-max-points", dest="hyper_max_points", type=int)
    p.add_argument("--identity-samples", dest="identity_samples", type=int)
    return parser


_CLI_ONLY = {"config", "table", "table_format"}


def load_config(args: argparse.Namespace) -> RunConfig:
    values = {}
    if args.config:
        try:
            with open(args.config) as f:
                values = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {args.config}: {e}", module="cli")
        if not isinstance(values, dict):
            raise ConfigError(f"{args.config}: config must be a JSON object", module="cli")
    flags = {k: v for k, v in vars(args).items() if v is not None and k not in _CLI_ONLY}
    return RunConfig(**{**values, **flags})


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=settings.LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
    except (ConfigError, ValidationError) as e:
        message = str(e)
        logger.error(f"[Main] Invalid configuration: {message}")
        payload = e.to_dict() if isinstance(e, GaugeDimError) else {
            "status": "error", "message": message, "error_type": type(e).__name__, "module": "cli",
        }
        print(json.dumps(payload))
        return EXIT_CONFIG

    code, result = dispatcher.dispatch(config)
    if code == EXIT_OK and args.table:
        emit_table(dispatcher.last_artifact, args.table, args.table_format)
        result["table"] = args.table
    print(json.dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
