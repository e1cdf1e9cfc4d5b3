import dotenv
dotenv.load_dotenv()

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Exact covering search
    MAX_CANDIDATE_CENTERS: int = 24
    MAX_NODES: int = 2 ** 20
    NET_SIZE_CAP: int = 2 ** 22

    # Hyperspace
    HYPERSPACE_NET_CAP: int = 20
    HYPERSPACE_EXACT_CAP: int = 4095
    HYPERSPACE_TOLERANCE: float = 0.1

    # Bisection over the dimension parameter
    S_MIN: float = 1e-3
    S_MAX: float = 64.0
    BISECTION_TOLERANCE: float = 1e-3
    BISECTION_MAX_ITER: int = 60

    # Sampled gauge validation
    VANISH_THRESHOLD: float = 0.05
    CAUCHY_TOLERANCE: float = 1e-6
    CONTINUITY_TOLERANCE: float = 1e-9
    RATIO_BOUND_CAP: float = 1e6

    WORKERS: int = 1
    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="GAUGEDIM_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    @field_validator(
        "MAX_CANDIDATE_CENTERS", "MAX_NODES", "NET_SIZE_CAP", "HYPERSPACE_NET_CAP",
        "HYPERSPACE_EXACT_CAP", "BISECTION_MAX_ITER", "WORKERS",
    )
    @classmethod
    def positive_int(cls, v: int) -> int:
        if v < 1:
            raise ValueError("caps and counts must be positive")
        return v

    @field_validator(
        "HYPERSPACE_TOLERANCE", "S_MIN", "S_MAX", "BISECTION_TOLERANCE", "VANISH_THRESHOLD",
        "CAUCHY_TOLERANCE", "CONTINUITY_TOLERANCE", "RATIO_BOUND_CAP",
    )
    @classmethod
    def positive_float(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("tolerances and ranges must be positive")
        return v

    def resolved(self) -> dict:
        """Settings as plain values, echoed into artifacts."""
        return self.model_dump()


settings = Settings()
