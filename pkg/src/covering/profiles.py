import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from config.settings import settings
from core.errors import GaugeDimError, PreconditionError
from covering.covering_numbers import (
    CenterMode,
    Mode,
    Solver,
    bounding_region,
    cover,
    covering_number,
    packing_number,
)
from models.profiles import CoveringEntry, CoveringProfile
from spaces.dense_nets import dyadic_net
from spaces.metric_spaces import MetricSpace

logger = logging.getLogger(__name__)


def check_schedule(delta_schedule: Sequence, module: str = "covering") -> list:
    if len(delta_schedule) == 0:
        raise PreconditionError("delta schedule is empty", module=module)
    if any(not d > 0 for d in delta_schedule):
        raise PreconditionError("delta schedule must be positive", module=module)
    if any(b >= a for a, b in zip(delta_schedule, delta_schedule[1:])):
        raise PreconditionError("delta schedule must be strictly decreasing", module=module)
    return list(delta_schedule)


def _exact_text(delta) -> Optional[str]:
    if isinstance(delta, (int, Fraction)):
        return str(Fraction(delta))
    return None


def covering_profile(space: MetricSpace, E: Sequence, delta_schedule: Sequence, mode: Mode = "exact",
                     centers: CenterMode = "anywhere", net=None, solver: Solver = "auto",
                     include_pack: bool = True, include_dense: bool = False,
                     workers: Optional[int] = None) -> CoveringProfile:
    """
    Covering and packing counts at every scale of a schedule.

    Scales are independent and may run on a thread pool; rows are merged in
    schedule order. `include_dense` adds N^(E, delta) with centers from a
    dyadic net of resolution delta/2 over the bounding box of E.
    """
    schedule = check_schedule(delta_schedule)
    if len(E) == 0:
        raise PreconditionError("point set E is empty", module="covering")
    workers = settings.WORKERS if workers is None else workers

    def row(delta) -> CoveringEntry:
        try:
            result = cover(space, E, delta, centers=centers, mode=mode, net=net, solver=solver)
            n_pack = packing_number(space, E, delta, mode=mode, solver=solver) if include_pack else None
            n_dense = None
            if include_dense:
                fine = dyadic_net(bounding_region(space, E), delta / 2)
                n_dense = covering_number(space, E, delta, centers="from-net", net=fine, mode=mode)
        except GaugeDimError as e:
            logger.error(f"[Covering] Profile failed at delta={float(delta):.6g}: {e}")
            raise type(e)(f"at delta={float(delta):.6g}: {e}", module=e.module)
        logger.info(f"[Covering] delta={float(delta):.6g} N={result.count} N_p={n_pack} ({result.solver})")
        return CoveringEntry(
            delta=float(delta),
            delta_exact=_exact_text(delta),
            n_cover=result.count,
            n_cover_dense=n_dense,
            n_pack=n_pack,
            mode=result.mode,
            solver=result.solver,
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(row, schedule))
    else:
        entries = [row(d) for d in schedule]

    profile = CoveringProfile(entries=entries)
    problems = profile.invariant_violations()
    if problems:
        logger.warning(f"[Covering] Profile invariants violated: {problems}")
    return profile
