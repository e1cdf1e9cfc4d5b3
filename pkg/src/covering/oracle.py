"""
Naive exhaustive oracles: full subset enumeration, no pruning. Used only to
cross-check the searches in set_cover on small instances.
"""

import itertools
from typing import Optional, Sequence

import numpy as np

from core.errors import PreconditionError
from covering.covering_numbers import CenterMode, candidate_centers
from spaces.metric_spaces import MetricSpace


def brute_force_cover(space: MetricSpace, E: Sequence, delta, centers: CenterMode = "anywhere",
                      net: Optional[Sequence] = None) -> int:
    if len(E) == 0:
        raise PreconditionError("point set E is empty", module="covering")
    points = list(dict.fromkeys(E))
    candidates = candidate_centers(space, points, centers, net)
    within = space.within(candidates, points, delta)
    for k in range(1, len(candidates) + 1):
        for combo in itertools.combinations(range(len(candidates)), k):
            if within[list(combo)].any(axis=0).all():
                return k
    raise PreconditionError("candidate centers cannot cover E", module="covering")


def brute_force_packing(space: MetricSpace, E: Sequence, delta) -> int:
    if len(E) == 0:
        raise PreconditionError("point set E is empty", module="covering")
    points = list(dict.fromkeys(E))
    close = space.within(points, points, delta)
    np.fill_diagonal(close, False)
    for k in range(len(points), 0, -1):
        for combo in itertools.combinations(range(len(points)), k):
            idx = list(combo)
            if not close[np.ix_(idx, idx)].any():
                return k
    return 1
