import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import NetTooCoarseError, PreconditionError
from covering.set_cover import exact_cover, greedy_cover, greedy_independent_set, max_independent_set
from spaces.dense_nets import DyadicNet, Region, dyadic_net
from spaces.metric_spaces import MetricSpace

logger = logging.getLogger(__name__)

CenterMode = Literal["anywhere", "from-net"]
Mode = Literal["greedy", "exact"]
Solver = Literal["auto", "sweep", "branch_and_bound"]
Net = Union[DyadicNet, Sequence]


@dataclass
class CoverResult:
    """A cover witness: its size, centers, and how it was obtained."""

    count: int
    centers: list
    mode: str
    solver: str
    # exact counts restrict centers to the candidate set
    restricted_centers: bool = True


def _prepare(space: MetricSpace, E: Sequence, delta):
    if len(E) == 0:
        raise PreconditionError("point set E is empty", module="covering")
    if not delta > 0:
        raise PreconditionError(f"delta must be positive, got {delta}", module="covering")
    points = []
    seen = set()
    for p in E:
        p = space.check_point(p)
        if p not in seen:
            seen.add(p)
            points.append(p)
    # float clouds are compared in float arithmetic throughout
    if isinstance(delta, Fraction) and all(isinstance(p, float) for p in points):
        delta = float(delta)
    return points, delta


def _net_points(net: Optional[Net]) -> list:
    if net is None:
        raise PreconditionError("centers='from-net' needs a net", module="covering")
    if isinstance(net, DyadicNet):
        return net.points(exact=True)
    return list(net)


def candidate_centers(space: MetricSpace, E: Sequence, centers: CenterMode = "anywhere",
                      net: Optional[Net] = None) -> list:
    """E plus pairwise midpoints where the space has them, or the points of a net."""
    if centers == "from-net":
        return [space.check_point(p) for p in _net_points(net)]
    points = list(E)
    out = list(points)
    seen = set(points)
    for i, a in enumerate(points):
        for b in points[i + 1:]:
            mid = space.midpoint(a, b)
            if mid is not None and mid not in seen:
                seen.add(mid)
                out.append(mid)
    return out


def _masks(space: MetricSpace, centers: list, points: list, delta) -> List[int]:
    within = space.within(centers, points, delta)
    weights = [1 << j for j in range(len(points))]
    return [sum(weights[j] for j in np.flatnonzero(row)) for row in within]


def _sweep_cover(points: list, delta) -> CoverResult:
    xs = sorted(points)
    centers = []
    i = 0
    while i < len(xs):
        p = xs[i]
        j = bisect.bisect_left(xs, p + 2 * delta)
        q = xs[j - 1]
        centers.append(p if q == p else _mid(p, q))
        i = j
    return CoverResult(count=len(centers), centers=centers, mode="exact", solver="sweep")


def _sweep_cover_from_net(points: list, net: list, delta) -> CoverResult:
    xs = sorted(points)
    cs = sorted(net)
    centers = []
    i = 0
    while i < len(xs):
        p = xs[i]
        k = bisect.bisect_left(cs, p + delta) - 1
        if k < 0 or not cs[k] > p - delta:
            raise NetTooCoarseError(f"no net center within {delta} of {p}", module="covering")
        c = cs[k]
        centers.append(c)
        i = bisect.bisect_left(xs, c + delta)
    return CoverResult(count=len(centers), centers=centers, mode="exact", solver="sweep")


def _anchored_sweep(points: list, delta) -> CoverResult:
    # balls centered at the leftmost uncovered point: a valid but suboptimal cover
    xs = sorted(points)
    centers = []
    i = 0
    while i < len(xs):
        centers.append(xs[i])
        i = bisect.bisect_left(xs, xs[i] + delta)
    return CoverResult(count=len(centers), centers=centers, mode="greedy", solver="greedy")


def cover(space: MetricSpace, E: Sequence, delta, centers: CenterMode = "anywhere", mode: Mode = "exact",
          net: Optional[Net] = None, solver: Solver = "auto", max_candidates: Optional[int] = None,
          max_nodes: Optional[int] = None) -> CoverResult:
    """Open-ball cover of E at radius delta, with its centers."""
    points, delta = _prepare(space, E, delta)
    line = space.is_line and solver != "branch_and_bound"
    if solver == "sweep" and not space.is_line:
        raise PreconditionError("the sweep solver needs a line space", module="covering")

    if line and mode == "exact":
        if centers == "from-net":
            return _sweep_cover_from_net(points, [space.check_point(c) for c in _net_points(net)], delta)
        return _sweep_cover(points, delta)
    if line and centers == "anywhere":
        return _anchored_sweep(points, delta)

    candidates = candidate_centers(space, points, centers, net)
    sets = _masks(space, candidates, points, delta)
    universe = (1 << len(points)) - 1
    reach = 0
    for s in sets:
        reach |= s
    if reach != universe:
        raise NetTooCoarseError(
            f"{len(points) - bin(reach).count('1')} points lie outside every candidate ball of radius {delta}",
            module="covering",
        )
    if mode == "greedy":
        chosen = greedy_cover(universe, sets)
        return CoverResult(count=len(chosen), centers=[candidates[i] for i in chosen], mode="greedy",
                           solver="greedy")
    result = exact_cover(universe, sets, max_candidates, max_nodes)
    return CoverResult(count=result.size, centers=[candidates[i] for i in result.chosen], mode="exact",
                       solver=result.solver)


def covering_number(space: MetricSpace, E: Sequence, delta, centers: CenterMode = "anywhere",
                    mode: Mode = "exact", net: Optional[Net] = None, solver: Solver = "auto",
                    max_candidates: Optional[int] = None, max_nodes: Optional[int] = None) -> int:
    """
    N(E, delta): fewest open balls of radius delta covering E.

    Exact values are "restricted-centers exact": centers range over E and its
    pairwise midpoints (or the given net). On the line this equals the
    continuum optimum. Greedy mode returns an upper bound.
    """
    return cover(space, E, delta, centers, mode, net, solver, max_candidates, max_nodes).count


def conflict_graph(space: MetricSpace, points: list, delta) -> List[int]:
    """Adjacency bitmasks of 'closer than delta' among distinct points."""
    close = space.within(points, points, delta)
    np.fill_diagonal(close, False)
    weights = [1 << j for j in range(len(points))]
    return [sum(weights[j] for j in np.flatnonzero(row)) for row in close]


def packing(space: MetricSpace, E: Sequence, delta, mode: Mode = "exact", solver: Solver = "auto",
            max_nodes: Optional[int] = None) -> Tuple[int, list]:
    """Largest delta-separated subset of E (pairwise distance >= delta) and its points."""
    points, delta = _prepare(space, E, delta)
    if space.is_line and solver != "branch_and_bound":
        xs = sorted(points)
        chosen = [xs[0]]
        i = bisect.bisect_left(xs, xs[0] + delta)
        while i < len(xs):
            chosen.append(xs[i])
            i = bisect.bisect_left(xs, xs[i] + delta)
        return len(chosen), chosen
    adjacency = conflict_graph(space, points, delta)
    if mode == "greedy":
        picked = greedy_independent_set(adjacency)
    else:
        picked = max_independent_set(adjacency, max_nodes).chosen
    return len(picked), [points[i] for i in picked]


def packing_number(space: MetricSpace, E: Sequence, delta, mode: Mode = "exact", solver: Solver = "auto",
                   max_nodes: Optional[int] = None) -> int:
    """
    N_p(E, delta): most points of E pairwise at distance >= delta, i.e. the
    most disjoint open balls of diameter delta centered in E. Greedy mode
    returns a lower bound.
    """
    return packing(space, E, delta, mode, solver, max_nodes)[0]


def bounding_region(space: MetricSpace, E: Sequence) -> Region:
    points = [space.check_point(p) for p in E]
    if space.is_line:
        lo, hi = Fraction(min(points)), Fraction(max(points))
        return Region.interval(lo, hi if hi > lo else lo + 1)
    dim = len(points[0])
    bounds = []
    for axis in range(dim):
        coords = [Fraction(p[axis]) for p in points]
        lo, hi = min(coords), max(coords)
        bounds.append((lo, hi if hi > lo else lo + 1))
    return Region.box(bounds)


def dense_center_bridge(space: MetricSpace, E: Sequence, delta, delta_hat,
                        max_candidates: Optional[int] = None) -> Tuple[int, int]:
    """
    (N^(E, delta_hat), N(E, delta)) for delta < delta_hat, where N^ takes
    centers from a dyadic net strictly finer than delta_hat - delta.
    """
    if not 0 < delta < delta_hat:
        raise PreconditionError("dense-center bridge needs 0 < delta < delta_hat", module="covering")
    gap = Fraction(delta_hat) - Fraction(delta) if not isinstance(delta_hat, float) else delta_hat - delta
    net = dyadic_net(bounding_region(space, E), gap / 2)
    n_hat = covering_number(space, E, delta_hat, centers="from-net", net=net, max_candidates=max_candidates)
    n = covering_number(space, E, delta, max_candidates=max_candidates)
    logger.info(f"[Covering] Dense-center bridge: N^(E,{float(delta_hat):g})={n_hat} <= N(E,{float(delta):g})={n}")
    return n_hat, n


def _mid(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return (a + b) / 2
    return Fraction(a + b, 2)
