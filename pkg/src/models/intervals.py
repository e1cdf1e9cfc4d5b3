from fractions import Fraction
from typing import List, Tuple

from pydantic import Field, model_validator

from models.base import ArtifactModel


class IntervalSet(ArtifactModel):
    """
    Level-l stage of a seven-adic construction.

    Interval i is [intervals[i][0], intervals[i][1]] / 7**denominator_power,
    labelled by labels[i] (a string over {0,1}); labels are in lexicographic order.
    """

    level: int = Field(ge=0)
    intervals: List[Tuple[int, int]]
    denominator_power: int = Field(ge=0)
    labels: List[str]

    @model_validator(mode="after")
    def check_consistency(self):
        if len(self.intervals) != len(self.labels):
            raise ValueError("one label per interval required")
        if any(lo >= hi for lo, hi in self.intervals):
            raise ValueError("degenerate interval")
        if self.labels != sorted(self.labels):
            raise ValueError("labels must be in lexicographic order")
        return self

    @property
    def denominator(self) -> int:
        return 7 ** self.denominator_power

    def fractions(self) -> List[Tuple[Fraction, Fraction]]:
        d = self.denominator
        return [(Fraction(lo, d), Fraction(hi, d)) for lo, hi in self.intervals]

    def widths(self) -> List[Fraction]:
        return [hi - lo for lo, hi in self.fractions()]

    def gaps(self) -> List[Fraction]:
        spans = sorted(self.fractions())
        return [b[0] - a[1] for a, b in zip(spans, spans[1:])]

    def contains(self, x: Fraction) -> bool:
        return any(lo <= x <= hi for lo, hi in self.fractions())

    def __len__(self) -> int:
        return len(self.intervals)
