import math
from typing import List, Literal, Optional

from pydantic import Field, model_validator

from core.logspace import log2_real, safe_exp2
from models.base import ArtifactModel


class CoveringEntry(ArtifactModel):
    delta: float = Field(description="Scale as a float")
    delta_exact: Optional[str] = Field(default=None, description="Exact rational scale, e.g. '1/343'")
    n_cover: int = Field(ge=1)
    n_cover_dense: Optional[int] = None
    n_pack: Optional[int] = None
    mode: Literal["greedy", "exact"]
    solver: str = Field(default="", description="sweep | branch_and_bound | greedy")

    @property
    def log2_delta(self) -> float:
        return math.log2(self.delta)


class LogCountProfile(ArtifactModel):
    """Scale-indexed log2 counts; the common input of every dimension estimator."""

    log2_deltas: List[float]
    log2_counts: List[float]
    source: str = "covering"

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.log2_deltas) != len(self.log2_counts):
            raise ValueError("log2_deltas and log2_counts differ in length")
        if any(b >= a for a, b in zip(self.log2_deltas, self.log2_deltas[1:])):
            raise ValueError("scales must be strictly decreasing")
        return self

    def __len__(self) -> int:
        return len(self.log2_deltas)


class CoveringProfile(ArtifactModel):
    entries: List[CoveringEntry]

    @model_validator(mode="after")
    def check_scales(self):
        deltas = [e.delta for e in self.entries]
        if any(b >= a for a, b in zip(deltas, deltas[1:])):
            raise ValueError("profile scales must be strictly decreasing")
        return self

    def invariant_violations(self) -> List[str]:
        """Soft invariants; exact profiles are expected to return an empty list."""
        problems = []
        exact = [e for e in self.entries if e.mode == "exact"]
        for a, b in zip(exact, exact[1:]):
            if b.n_cover < a.n_cover:
                problems.append(f"n_cover decreased from {a.n_cover} to {b.n_cover} at delta={b.delta}")
        by_delta = {e.delta: e for e in self.entries}
        for e in self.entries:
            coarse = by_delta.get(2 * e.delta)
            if coarse is not None and e.n_pack is not None and e.mode == coarse.mode == "exact":
                if coarse.n_cover > e.n_pack:
                    problems.append(f"N(2d)={coarse.n_cover} > N_p(d)={e.n_pack} at delta={e.delta}")
        return problems

    def log_counts(self, field: str = "n_cover") -> LogCountProfile:
        counts = [getattr(e, field) for e in self.entries]
        if any(c is None for c in counts):
            raise ValueError(f"profile has no '{field}' column at every scale")
        return LogCountProfile(
            log2_deltas=[e.log2_delta for e in self.entries],
            log2_counts=[log2_real(c) for c in counts],
            source=f"covering:{field}",
        )


class ComplexityEntry(ArtifactModel):
    log2_delta: float = Field(description="log2 of the precision; -r for delta = 2^-r")
    k: float = Field(ge=0)

    @property
    def delta(self) -> float:
        return safe_exp2(self.log2_delta)


class ComplexityProfile(ArtifactModel):
    entries: List[ComplexityEntry]
    provenance: Literal["proxy", "synthetic"]
    descriptor: str = ""

    @model_validator(mode="after")
    def check_entries(self):
        logs = [e.log2_delta for e in self.entries]
        if any(b >= a for a, b in zip(logs, logs[1:])):
            raise ValueError("profile scales must be strictly decreasing")
        if any(not math.isfinite(e.k) for e in self.entries):
            raise ValueError("complexity values must be finite")
        return self

    def __len__(self) -> int:
        return len(self.entries)
