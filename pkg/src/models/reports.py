from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import Field

from models.base import ArtifactModel


class InvariantCheck(ArtifactModel):
    name: str
    parameter: Optional[float] = None
    passed: bool
    one_sided: Optional[Literal["left", "right"]] = Field(
        default=None, description="Set when only one side of the continuity check passed"
    )
    witness: Optional[Dict[str, Any]] = None


class ValidationReport(ArtifactModel):
    subject: str
    checks: List[InvariantCheck]
    summaries: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> List[InvariantCheck]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str, parameter: Optional[float] = None) -> List[InvariantCheck]:
        return [c for c in self.checks if c.name == name and (parameter is None or c.parameter == parameter)]


class TrendRecord(ArtifactModel):
    s: float
    accepted: bool
    coarse_stat: float
    fine_stat: float
    values: List[float]


class DimensionEstimate(ArtifactModel):
    value: float
    bracket: Tuple[float, float]
    kind: Literal["lower", "upper"]
    scale_window: Tuple[float, float] = Field(description="(delta_max, delta_min) of the window used")
    log2_window: Tuple[float, float]
    method: Literal["bisection", "loglog", "ratio", "gauged-algo", "cover-sum", "packing-sum"]
    family: str
    at_floor: bool = False
    iterations: int = 0
    diagnostics: List[TrendRecord] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)


class HyperspaceCount(ArtifactModel):
    lower: int
    upper: int
    exact: Optional[int] = None
    greedy: Optional[int] = None
    n_cover: int
    n_pack_2delta: int
    log2_lower: float
    log2_upper: float


class HyperspaceEntry(ArtifactModel):
    delta: float
    n_cover: int
    n_pack_2delta: int
    log2_lower: float
    log2_upper: float
    exact: Optional[int] = None


class VerificationReport(ArtifactModel):
    family: str
    kind: Literal["lower", "upper"]
    set_estimate: DimensionEstimate
    hyperspace_lower_estimate: DimensionEstimate
    hyperspace_upper_estimate: DimensionEstimate
    difference: float
    tolerance: float
    passed: bool
    profile: List[HyperspaceEntry]
