import logging
import math
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Real as RealNumber
from typing import Any, List, Optional, Sequence

import numpy as np
from scipy.spatial.distance import cdist

from core.errors import PreconditionError
from models.reports import InvariantCheck, ValidationReport

logger = logging.getLogger(__name__)

Point = Any


class MetricSpace(ABC):
    """
    A metric space as a distance oracle.

    Ball membership always uses open balls: `within(A, B, delta)[i, j]` is
    rho(A[i], B[j]) < delta, evaluated exactly whenever the points allow it.
    """

    descriptor: str = "metric"

    @abstractmethod
    def distance(self, a: Point, b: Point):
        ...

    def check_point(self, p: Point) -> Point:
        return p

    def midpoint(self, a: Point, b: Point) -> Optional[Point]:
        """A point at distance rho(a,b)/2 from both, when the space has one."""
        return None

    @property
    def is_line(self) -> bool:
        return False

    def distance_matrix(self, A: Sequence[Point], B: Sequence[Point]) -> np.ndarray:
        return np.array([[float(self.distance(a, b)) for b in B] for a in A], dtype=float).reshape(len(A), len(B))

    def within(self, A: Sequence[Point], B: Sequence[Point], delta) -> np.ndarray:
        return np.array([[self.distance(a, b) < delta for b in B] for a in A], dtype=bool).reshape(len(A), len(B))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor})"


class EuclideanSpace(MetricSpace):
    """R^n; on the line, int/Fraction points keep distances exact."""

    def __init__(self, dim: int = 1):
        if dim < 1:
            raise PreconditionError("Euclidean dimension must be at least 1", module="metric_core")
        self.dim = dim
        self.descriptor = f"euclidean-{dim}"

    @property
    def is_line(self) -> bool:
        return self.dim == 1

    def check_point(self, p: Point) -> Point:
        if self.dim == 1:
            if isinstance(p, (tuple, list, np.ndarray)):
                if len(p) != 1:
                    raise PreconditionError(f"expected a 1-d point, got {p!r}", module="metric_core")
                p = p[0]
            if not isinstance(p, RealNumber) or not math.isfinite(float(p)):
                raise PreconditionError(f"invalid point {p!r}", module="metric_core")
            return p
        if not isinstance(p, (tuple, list, np.ndarray)) or len(p) != self.dim:
            raise PreconditionError(
                f"dimension mismatch: expected {self.dim} coordinates, got {p!r}", module="metric_core"
            )
        return tuple(p)

    def distance(self, a: Point, b: Point):
        a, b = self.check_point(a), self.check_point(b)
        if self.dim == 1:
            return abs(a - b)
        return math.dist([float(x) for x in a], [float(y) for y in b])

    def midpoint(self, a: Point, b: Point) -> Point:
        if self.dim == 1:
            if isinstance(a, float) or isinstance(b, float):
                return (a + b) / 2
            return Fraction(a + b, 2)
        return tuple(_half_sum(x, y) for x, y in zip(a, b))

    def as_array(self, A: Sequence[Point]) -> np.ndarray:
        return np.asarray([[float(c) for c in np.atleast_1d(p)] for p in A], dtype=float).reshape(len(A), self.dim)

    def distance_matrix(self, A: Sequence[Point], B: Sequence[Point]) -> np.ndarray:
        return cdist(self.as_array(A), self.as_array(B))

    def within(self, A: Sequence[Point], B: Sequence[Point], delta) -> np.ndarray:
        if self.dim == 1 and not _all_float(A, B, delta):
            return np.array([[abs(a - b) < delta for b in B] for a in A], dtype=bool).reshape(len(A), len(B))
        return self.distance_matrix(A, B) < float(delta)


class MatrixSpace(MetricSpace):
    """Explicit finite metric; points are the indices 0..n-1."""

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise PreconditionError("distance matrix must be square", module="metric_core")
        if np.isnan(m).any() or (m < 0).any():
            raise PreconditionError("distance matrix entries must be nonnegative numbers", module="metric_core")
        self.matrix = m
        self.descriptor = f"matrix-{m.shape[0]}"

    @property
    def points(self) -> List[int]:
        return list(range(self.matrix.shape[0]))

    def check_point(self, p: Point) -> Point:
        if not isinstance(p, (int, np.integer)) or not 0 <= p < self.matrix.shape[0]:
            raise PreconditionError(f"{p!r} is not an index of this space", module="metric_core")
        return int(p)

    def distance(self, a: Point, b: Point) -> float:
        return float(self.matrix[self.check_point(a), self.check_point(b)])

    def distance_matrix(self, A: Sequence[Point], B: Sequence[Point]) -> np.ndarray:
        return self.matrix[np.ix_([self.check_point(a) for a in A], [self.check_point(b) for b in B])]

    def within(self, A: Sequence[Point], B: Sequence[Point], delta) -> np.ndarray:
        return self.distance_matrix(A, B) < float(delta)


class SequenceSpace(MetricSpace):
    """Binary strings with rho(x, y) = 2^-(longest common prefix), 0 on equal strings."""

    descriptor = "sequence"

    def check_point(self, p: Point) -> Point:
        if not isinstance(p, str) or set(p) - {"0", "1"}:
            raise PreconditionError(f"{p!r} is not a binary string", module="metric_core")
        return p

    def distance(self, a: Point, b: Point) -> Fraction:
        a, b = self.check_point(a), self.check_point(b)
        if a == b:
            return Fraction(0)
        lcp = 0
        for x, y in zip(a, b):
            if x != y:
                break
            lcp += 1
        return Fraction(1, 2 ** lcp)


def diameter(space: MetricSpace, E: Sequence[Point]):
    """Largest pairwise distance; 0 for singletons."""
    if len(E) == 0:
        raise PreconditionError("diameter of an empty set", module="metric_core")
    points = [space.check_point(p) for p in E]
    if space.is_line:
        return max(points) - min(points)
    if len(points) == 1:
        return 0
    return max(space.distance(a, b) for i, a in enumerate(points) for b in points[i + 1:])


def check_metric_axioms(space: MetricSpace, points: Sequence[Point], samples: int = 10_000,
                        seed: int = 0, tolerance: float = 1e-12) -> ValidationReport:
    """Sampled symmetry, identity and triangle checks on random pairs and triples."""
    if len(points) < 2:
        raise PreconditionError("need at least two points to sample pairs", module="metric_core")
    rng = np.random.default_rng(seed)
    n = len(points)
    idx = rng.integers(0, n, size=(samples, 3))

    failures = {"symmetry": None, "identity": None, "triangle": None}
    for i, j, k in idx:
        a, b, c = points[i], points[j], points[k]
        ab, ba = space.distance(a, b), space.distance(b, a)
        if failures["symmetry"] is None and ab != ba:
            failures["symmetry"] = {"a": repr(a), "b": repr(b)}
        distinct = a != b
        if failures["identity"] is None and (space.distance(a, a) != 0 or (distinct and not ab > 0)):
            failures["identity"] = {"a": repr(a), "b": repr(b)}
        ac, bc = space.distance(a, c), space.distance(b, c)
        if failures["triangle"] is None and float(ac) > float(ab) + float(bc) + tolerance:
            failures["triangle"] = {"a": repr(a), "b": repr(b), "c": repr(c)}

    checks = [InvariantCheck(name=name, passed=w is None, witness=w) for name, w in failures.items()]
    logger.info(f"[MetricCore] Axiom sweep on {space.descriptor}: {samples} samples, "
                f"{sum(not c.passed for c in checks)} failing axioms")
    return ValidationReport(subject=space.descriptor, checks=checks, summaries={"samples": samples, "seed": seed})


def _half_sum(x, y):
    if isinstance(x, float) or isinstance(y, float):
        return (x + y) / 2
    return Fraction(x + y, 2)


def _all_float(A, B, delta) -> bool:
    return isinstance(delta, float) and all(isinstance(p, float) for p in A) and all(isinstance(p, float) for p in B)
