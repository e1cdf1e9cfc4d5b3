import logging
from typing import Callable, Dict, Optional, Tuple

from pydantic import ValidationError

from config.settings import settings
from core.errors import CapacityError, ConfigError, GaugeDimError
from models.run_config import RunConfig
from runners.algodim_runner import run_algodim
from runners.construction_runner import run_construct
from runners.dimension_runner import run_dim_estimate
from runners.gauge_runner import run_gauge_validate
from runners.hyperspace_runner import run_hyper_verify
from runners.oracle_runner import run_oracle_suite
from tools.report_io import build_artifact, write_artifact

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_CONFIG = 2


class CommandDispatcher:
    """
    Routes a RunConfig to its runner and owns the run's outcome:
    one artifact on success, none on error, and the exit status.
    """

    def __init__(self):
        self.runners: Dict[str, Callable[[RunConfig], dict]] = {
            "gauge-validate": run_gauge_validate,
            "dim-estimate": run_dim_estimate,
            "hyper-verify": run_hyper_verify,
            "construct": run_construct,
            "algodim": run_algodim,
            "oracle-suite": run_oracle_suite,
        }
        self.last_artifact: Optional[dict] = None

    def _error(self, error: Exception, code: int) -> Tuple[int, dict]:
        if isinstance(error, GaugeDimError):
            result = error.to_dict()
        else:
            result = {"status": "error", "message": str(error), "error_type": type(error).__name__, "module": "cli"}
        logger.error(f"[Dispatcher] {result['error_type']} in {result['module']}: {result['message']}")
        return code, result

    def dispatch(self, config: RunConfig) -> Tuple[int, dict]:
        self.last_artifact = None
        runner = self.runners.get(config.command)
        if runner is None:
            return self._error(ConfigError(f"unknown command '{config.command}'", module="cli"), EXIT_CONFIG)
        logger.info(f"[Dispatcher] Running {config.command} (seed {config.seed})")
        try:
            result = runner(config)
        except (ConfigError, ValidationError) as e:
            return self._error(e, EXIT_CONFIG)
        except GaugeDimError as e:
            return self._error(e, EXIT_COMPUTATION)
        except (MemoryError, OverflowError) as e:
            exhausted = CapacityError(f"{config.command} exhausted resources: {type(e).__name__}: {e}", module="cli")
            return self._error(exhausted, EXIT_COMPUTATION)

        artifact = build_artifact(config.command, config.resolved(), result["data"], result["message"])
        artifact["settings"] = settings.resolved()
        write_artifact(config.out, artifact)
        self.last_artifact = artifact
        logger.info(f"[Dispatcher] {config.command}: {result['message']}")
        return EXIT_OK, {"status": "success", "message": result["message"], "out": config.out}


dispatcher = CommandDispatcher()
