import itertools
import logging
from typing import List, Literal, Optional, Sequence

import numpy as np

from config.settings import settings
from core.errors import CapacityError, GaugeDimError, PreconditionError
from core.logspace import log2_pow2_minus_one
from covering.covering_numbers import cover, packing_number
from covering.set_cover import exact_cover, greedy_cover
from hyperspace.hausdorff import CompactApprox, mask_points, subset_hausdorff
from models.reports import HyperspaceCount
from spaces.metric_spaces import EuclideanSpace, MetricSpace

logger = logging.getLogger(__name__)

HyperMode = Literal["bounds", "greedy", "exact"]


def hyperspace_net(F: Sequence, include_empty: bool = False, space: Optional[MetricSpace] = None,
                   resolution: Optional[float] = None, cap: Optional[int] = None) -> List[CompactApprox]:
    """
    All 2^|F| - 1 nonempty subsets of a finite delta-net F of E. Every compact
    L inside E lies within Hausdorff distance delta of the subset of net
    points whose delta-balls meet L.
    """
    if include_empty:
        raise PreconditionError("the empty set is not a point of the hyperspace", module="hyperspace")
    if len(F) == 0:
        raise PreconditionError("net F is empty", module="hyperspace")
    cap = settings.HYPERSPACE_NET_CAP if cap is None else cap
    space = space or EuclideanSpace(1)
    points = list(dict.fromkeys(F))
    if len(points) > cap:
        raise CapacityError(f"hyperspace net over {len(points)} points exceeds cap {cap}", module="hyperspace")
    return [CompactApprox.of(mask_points(points, mask), space, resolution) for mask in range(1, 1 << len(points))]


def ball_table(space: MetricSpace, points: list, centers: Sequence, delta) -> np.ndarray:
    """
    close[i, k] is True when subset i of `points` lies in the open Hausdorff
    delta-ball around candidate k. Candidates are the nonempty subsets of
    `points`, followed by those of `centers` when it adds new points.
    """
    tables = [subset_hausdorff(space, points)]
    centers = list(dict.fromkeys(centers))
    if any(c not in points for c in centers):
        tables.append(subset_hausdorff(space, points, centers))
    return np.hstack(tables) < float(delta)


def _as_sets(close: np.ndarray):
    universe = (1 << close.shape[0]) - 1
    weights = [1 << i for i in range(close.shape[0])]
    sets = [sum(weights[i] for i in np.flatnonzero(close[:, k])) for k in range(close.shape[1])]
    return universe, sets


def hyperspace_covering_number(space: MetricSpace, E: Sequence, delta, mode: HyperMode = "bounds",
                               exact_cap: Optional[int] = None,
                               max_nodes: Optional[int] = None) -> HyperspaceCount:
    """
    Bounds on N(K(E), delta), and optionally a cover count.

    lower = 2^M(2 delta) - 1 from a 2 delta-separated subset of E; upper =
    2^N(E, delta) from the subsets of an optimal delta-cover's centers.
    Exact and greedy counts use Hausdorff balls centered at nonempty subsets
    of E or of those centers ("restricted-centers exact").
    """
    if len(E) == 0:
        raise PreconditionError("point set E is empty", module="hyperspace")
    points = list(dict.fromkeys(space.check_point(p) for p in E))
    best_cover = cover(space, points, delta)
    n_cover = best_cover.count
    n_pack = packing_number(space, points, 2 * delta)
    lower, upper = (1 << n_pack) - 1, 1 << n_cover
    exact = greedy = None

    if mode in ("exact", "greedy"):
        exact_cap = settings.HYPERSPACE_EXACT_CAP if exact_cap is None else exact_cap
        n_elements = (1 << len(points)) - 1
        if n_elements > exact_cap:
            raise CapacityError(f"K(E) has {n_elements} points, exact cap is {exact_cap}", module="hyperspace")
        universe, sets = _as_sets(ball_table(space, points, best_cover.centers, delta))
        if mode == "greedy":
            greedy = len(greedy_cover(universe, sets))
        else:
            exact = exact_cover(universe, sets, max_candidates=len(sets), max_nodes=max_nodes).size
            if not lower <= exact <= upper:
                raise GaugeDimError(
                    f"hyperspace sandwich violated: {lower} <= {exact} <= {upper} fails at delta={delta}",
                    module="hyperspace",
                )

    logger.info(f"[Hyperspace] delta={float(delta):.6g}: N={n_cover}, M(2d)={n_pack}, "
                f"bounds [{lower}, {upper}], exact={exact}")
    return HyperspaceCount(
        lower=lower,
        upper=upper,
        exact=exact,
        greedy=greedy,
        n_cover=n_cover,
        n_pack_2delta=n_pack,
        log2_lower=log2_pow2_minus_one(n_pack),
        log2_upper=float(n_cover),
    )


def brute_force_hyperspace_cover(space: MetricSpace, E: Sequence, delta, centers: Sequence = ()) -> int:
    """
    Naive minimum cover of K(E) by Hausdorff balls centered at nonempty
    subsets of E or of `centers`; full enumeration, no pruning.
    """
    points = list(dict.fromkeys(E))
    if not points:
        raise PreconditionError("point set E is empty", module="hyperspace")
    close = ball_table(space, points, centers, delta)
    n_candidates = close.shape[1]
    for k in range(1, n_candidates + 1):
        for combo in itertools.combinations(range(n_candidates), k):
            if close[:, list(combo)].any(axis=1).all():
                return k
    raise PreconditionError("candidate subsets cannot cover K(E)", module="hyperspace")
