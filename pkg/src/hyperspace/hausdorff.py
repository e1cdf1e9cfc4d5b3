import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import PreconditionError
from spaces.metric_spaces import EuclideanSpace, MetricSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompactApprox:
    """A nonempty finite point set: a point of the hyperspace K(X) and a delta0-approximation of a compact set."""

    points: Tuple
    resolution: Optional[float] = None
    space: MetricSpace = field(default_factory=EuclideanSpace, compare=False, repr=False)

    @classmethod
    def of(cls, points: Sequence, space: Optional[MetricSpace] = None,
           resolution: Optional[float] = None) -> "CompactApprox":
        space = space or EuclideanSpace(1)
        if len(points) == 0:
            raise PreconditionError("a compact approximation needs at least one point", module="hyperspace")
        unique = list(dict.fromkeys(space.check_point(p) for p in points))
        try:
            unique.sort()
        except TypeError:
            pass
        return cls(points=tuple(unique), resolution=resolution, space=space)

    def __len__(self) -> int:
        return len(self.points)


Operand = Union[CompactApprox, Sequence]


def _points(X: Operand) -> list:
    pts = list(X.points) if isinstance(X, CompactApprox) else list(X)
    if not pts:
        raise PreconditionError("Hausdorff distance of an empty set", module="hyperspace")
    return pts


def hausdorff_distance(space: MetricSpace, E: Operand, F: Operand):
    """max(sup_{x in E} rho(x, F), sup_{y in F} rho(E, y)) by exact max-min over finite sets."""
    a, b = _points(E), _points(F)
    if _exact(space, a, b):
        forward = max(min(space.distance(x, y) for y in b) for x in a)
        backward = max(min(space.distance(x, y) for x in a) for y in b)
        return max(forward, backward)
    d = space.distance_matrix(a, b)
    return float(max(np.max(np.min(d, axis=1)), np.max(np.min(d, axis=0))))


def _directed_subset_table(d: np.ndarray) -> np.ndarray:
    """
    For a rows x cols distance matrix, table[A, B] = max_{a in A} min_{b in B} d[a, b]
    over all row subsets A and column subsets B, indexed by bitmask.
    Entries with an empty A or B are not meaningful.
    """
    n_rows, n_cols = d.shape
    nearest = np.full((n_rows, 1 << n_cols), np.inf)
    for j in range(n_cols):
        block = 1 << j
        nearest[:, block:2 * block] = np.minimum(nearest[:, :block], d[:, j:j + 1])
    table = np.full((1 << n_rows, 1 << n_cols), -np.inf)
    for i in range(n_rows):
        block = 1 << i
        table[block:2 * block, :] = np.maximum(table[:block, :], nearest[i:i + 1, :])
    return table


def subset_hausdorff(space: MetricSpace, X: Sequence, Y: Optional[Sequence] = None) -> np.ndarray:
    """
    Hausdorff distances between all nonempty subsets of X and of Y (default X),
    as a float matrix indexed by (mask - 1).
    """
    Y = X if Y is None else Y
    d = np.asarray(space.distance_matrix(list(X), list(Y)), dtype=float)
    forward = _directed_subset_table(d)
    backward = _directed_subset_table(d.T)
    h = np.maximum(forward, backward.T)
    return h[1:, 1:]


def mask_points(points: Sequence, mask: int) -> list:
    return [p for j, p in enumerate(points) if mask >> j & 1]


def _exact(space: MetricSpace, a: list, b: list) -> bool:
    return space.is_line and not any(isinstance(p, float) for p in a + b)
