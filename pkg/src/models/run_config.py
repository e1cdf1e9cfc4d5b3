from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.errors import GaugeDimError
from gauges.grammar import parse_gauge
from tools.schedules import parse_log2_schedule, parse_schedule

Command = Literal["gauge-validate", "dim-estimate", "hyper-verify", "construct", "algodim", "oracle-suite"]


class RunConfig(BaseModel):
    """One CLI invocation, merged from a JSON config file and command-line flags."""

    model_config = ConfigDict(extra="forbid")

    command: Command
    out: str = Field(description="Path of the JSON artifact")
    seed: int = 0
    gauge: str = "theta"
    kind: Literal["lower", "upper"] = "upper"
    schedule: Optional[str] = Field(default=None, description="geo:base,count[,start[,step]] or list:...")

    # inputs
    points: Optional[str] = None
    matrix: Optional[str] = None

    # covering and estimation
    mode: Literal["exact", "greedy"] = "exact"
    centers: Literal["anywhere", "from-net"] = "anywhere"
    method: Literal["bisection", "loglog", "ratio", "all"] = "all"
    include_pack: bool = True
    include_dense: bool = Field(default=False, description="Also count covers centered on a dyadic net of resolution delta/2")
    window: Optional[int] = Field(default=None, ge=2)
    tolerance: Optional[float] = Field(default=None, gt=0)
    workers: Optional[int] = Field(default=None, ge=1)

    # gauge-validate
    s_grid: List[float] = Field(default_factory=lambda: [0.25, 0.5, 1.0, 2.0])
    precision: Literal["canonical", "harmonic"] = "canonical"
    pairs: List[Tuple[float, float]] = Field(default_factory=lambda: [(1.0, 2.0)])
    r_max: int = Field(default=40, ge=8)

    # construct
    construction: Literal["cantor7", "e0", "one-over-n"] = "cantor7"
    depth: int = Field(default=6, ge=0)
    n_max: int = Field(default=10000, ge=1)
    bits_file: Optional[str] = None
    sample: Optional[Literal["endpoints", "uniform"]] = None
    per_interval: int = Field(default=2, ge=1)

    # hyper-verify
    net_kind: Literal["interval01", "e0", "points"] = "interval01"
    refinement: int = Field(default=4, ge=2)
    include_exact: bool = False

    # algodim
    point: str = Field(default="random", description="random | periodic:<bits> | zero | rational:p/q")
    bits: int = Field(default=2 ** 20, ge=1, description="Expansion length of seeded random points")
    profile: Optional[str] = Field(default=None, description="Synthetic profile descriptor, e.g. linear:1")
    characterize: int = Field(default=0, ge=0, description="Number of random profiles for the jump check")

    # oracle-suite
    instances: int = Field(default=500, ge=1)
    max_points: int = Field(default=8, ge=1)
    hyper_instances: int = Field(default=200, ge=0)
    hyper_max_points: int = Field(default=5, ge=1, le=10)
    identity_samples: int = Field(default=100000, ge=0)

    @field_validator("gauge")
    @classmethod
    def gauge_parses(cls, v: str) -> str:
        try:
            parse_gauge(v)
        except GaugeDimError as e:
            raise ValueError(str(e))
        return v

    @field_validator("s_grid")
    @classmethod
    def ascending_grid(cls, v: List[float]) -> List[float]:
        if not v or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("s_grid must be nonempty and strictly ascending")
        return v

    @model_validator(mode="after")
    def schedule_parses(self):
        if self.schedule is not None:
            try:
                if self.command == "algodim":
                    parse_log2_schedule(self.schedule)
                else:
                    parse_schedule(self.schedule)
            except GaugeDimError as e:
                raise ValueError(str(e))
        return self

    def resolved(self) -> dict:
        return self.model_dump(mode="json")
