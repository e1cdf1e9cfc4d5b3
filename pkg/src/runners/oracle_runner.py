"""Cross-checks of the exact searches against naive enumeration, and the jump identity sweep."""

import logging
from fractions import Fraction

import numpy as np

from core.errors import GaugeDimError
from covering.covering_numbers import cover, covering_number, packing_number
from covering.oracle import brute_force_cover, brute_force_packing
from gauges.families import jump_log_identity_holds
from hyperspace.hyperspace_covering import brute_force_hyperspace_cover, hyperspace_covering_number
from models.run_config import RunConfig
from spaces.metric_spaces import EuclideanSpace

logger = logging.getLogger(__name__)

# line covers with n points have n + n(n-1)/2 candidate centers; 4 points keep that at most 12
MAX_COVER_POINTS = 4
MAX_HYPER_ORACLE_POINTS = 3


def _dyadic_points(rng: np.random.Generator, n: int, dim: int) -> list:
    grid = rng.integers(0, 1025, size=(n, dim))
    if dim == 1:
        return [Fraction(int(v), 1024) for v in grid[:, 0]]
    return [tuple(Fraction(int(v), 1024) for v in row) for row in grid]


def _result(instances: int, mismatches: int, examples: list) -> dict:
    return {"instances": instances, "mismatches": mismatches, "passed": mismatches == 0, "examples": examples[:5]}


def covering_oracle_check(instances: int, max_points: int, seed: int) -> dict:
    """Exact covering and packing numbers against full subset enumeration."""
    rng = np.random.default_rng(seed)
    mismatches, examples = 0, []
    for i in range(instances):
        dim = 1 if i % 2 == 0 else 2
        space = EuclideanSpace(dim)
        n_cover = int(rng.integers(1, min(max_points, MAX_COVER_POINTS) + 1))
        n_pack = int(rng.integers(1, max_points + 1))
        delta = Fraction(int(rng.integers(1, 513)), 1024)
        E = _dyadic_points(rng, n_cover, dim)
        F = _dyadic_points(rng, n_pack, dim)
        solver = "branch_and_bound" if i % 4 == 0 else "auto"
        got = covering_number(space, E, delta, solver=solver), packing_number(space, F, delta, solver=solver)
        want = brute_force_cover(space, E, delta), brute_force_packing(space, F, delta)
        if got != want:
            mismatches += 1
            examples.append({"dim": dim, "delta": str(delta), "cover": [got[0], want[0]], "pack": [got[1], want[1]]})
    return _result(instances, mismatches, examples)


def hyperspace_sandwich_check(instances: int, max_points: int, seed: int) -> dict:
    """2^M(2 delta) - 1 <= N(K(E), delta) <= 2^N(E, delta) on random finite E in [0, 1], three scales each."""
    rng = np.random.default_rng(seed + 1)
    space = EuclideanSpace(1)
    mismatches, examples, checked = 0, [], 0
    for _ in range(instances):
        E = _dyadic_points(rng, int(rng.integers(1, max_points + 1)), 1)
        for delta in sorted({Fraction(int(k), 1024) for k in rng.integers(8, 513, size=3)}):
            checked += 1
            try:
                count = hyperspace_covering_number(space, E, delta, mode="exact")
                if len(set(E)) <= MAX_HYPER_ORACLE_POINTS:
                    centers = cover(space, E, delta).centers
                    naive = brute_force_hyperspace_cover(space, E, delta, centers)
                    if naive != count.exact:
                        raise GaugeDimError(f"search {count.exact} != enumeration {naive}", module="hyperspace")
            except GaugeDimError as e:
                mismatches += 1
                examples.append({"points": [str(p) for p in E], "delta": str(delta), "error": str(e)})
    return _result(checked, mismatches, examples)


def jump_identity_check(samples: int, seed: int) -> dict:
    """log2(2^K * jump(phi)) against (K*phi - 1)/phi on random (K, s, delta) with phi = delta^s."""
    rng = np.random.default_rng(seed + 2)
    ks = rng.uniform(0.0, 1e6, size=samples)
    ss = rng.uniform(0.01, 4.0, size=samples)
    deltas = rng.uniform(1e-6, 1.0, size=samples)
    mismatches, examples = 0, []
    for k, s, d in zip(ks, ss, deltas):
        phi = float(d) ** float(s)
        if phi > 0 and not jump_log_identity_holds(float(k), phi):
            mismatches += 1
            examples.append({"k": float(k), "s": float(s), "delta": float(d)})
    return _result(samples, mismatches, examples)


def run_oracle_suite(config: RunConfig) -> dict:
    data = {
        "covering_oracle": covering_oracle_check(config.instances, config.max_points, config.seed),
        "hyperspace_sandwich": hyperspace_sandwich_check(config.hyper_instances, config.hyper_max_points, config.seed),
        "jump_identity": jump_identity_check(config.identity_samples, config.seed),
    }
    for name, result in data.items():
        log = logger.info if result["passed"] else logger.error
        log(f"[OracleRunner] {name}: {result['mismatches']} mismatches in {result['instances']} instances")
    failed = [name for name, result in data.items() if not result["passed"]]
    return {
        "status": "success",
        "message": "all oracle checks passed" if not failed else f"failed: {', '.join(failed)}",
        "data": data,
    }
