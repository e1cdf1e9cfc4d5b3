from fractions import Fraction

import pytest

from conftest import dyadic_points
from core.errors import CapacityError, NetTooCoarseError, PreconditionError
from covering.covering_numbers import cover, covering_number, dense_center_bridge, packing, packing_number
from covering.oracle import brute_force_cover, brute_force_packing
from covering.profiles import covering_profile
from covering.set_cover import exact_cover, greedy_cover, max_independent_set, reduce_dominated
from runners.oracle_runner import covering_oracle_check
from spaces.metric_spaces import EuclideanSpace

QUARTERS = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)]


class TestLineCovers:
    def test_sweep_is_optimal(self, line):
        result = cover(line, QUARTERS, Fraction(1, 4))
        assert result.count == 3
        assert result.solver == "sweep"
        assert brute_force_cover(line, QUARTERS, Fraction(1, 4)) == 3

    def test_open_balls(self, line):
        # 0 and 1/2 are exactly 2*delta apart, so no open ball holds both
        assert covering_number(line, [0, Fraction(1, 2)], Fraction(1, 4)) == 2
        assert covering_number(line, [0, Fraction(1, 2)], Fraction(1, 4) + Fraction(1, 1024)) == 1

    def test_greedy_is_an_upper_bound(self, line):
        exact = covering_number(line, QUARTERS, Fraction(1, 4))
        assert covering_number(line, QUARTERS, Fraction(1, 4), mode="greedy") >= exact

    def test_packing(self, line):
        count, chosen = packing(line, QUARTERS, Fraction(1, 4))
        assert count == 4
        assert chosen == QUARTERS
        assert packing_number(line, QUARTERS, Fraction(1, 2)) == 3

    def test_from_net_too_coarse(self, line):
        with pytest.raises(NetTooCoarseError):
            covering_number(line, [Fraction(1, 3)], Fraction(1, 100), centers="from-net", net=[0, 1])

    @pytest.mark.parametrize("E, delta", [([], Fraction(1, 2)), ([0], 0)])
    def test_preconditions(self, line, E, delta):
        with pytest.raises(PreconditionError):
            covering_number(line, E, delta)


class TestPlaneCovers:
    CORNERS = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def test_center_of_square(self):
        plane = EuclideanSpace(2)
        assert covering_number(plane, self.CORNERS, Fraction(3, 4)) == 1
        assert covering_number(plane, self.CORNERS, Fraction(1, 2)) == 4

    def test_matches_enumeration(self, rng):
        plane = EuclideanSpace(2)
        for _ in range(20):
            E = [tuple(Fraction(int(v), 16) for v in row) for row in rng.integers(0, 17, size=(4, 2))]
            delta = Fraction(int(rng.integers(1, 9)), 16)
            assert covering_number(plane, E, delta) == brute_force_cover(plane, E, delta)
            assert packing_number(plane, E, delta) == brute_force_packing(plane, E, delta)


class TestSetCover:
    def test_exact_cover(self):
        result = exact_cover(0b111, [0b011, 0b110, 0b100, 0b001])
        assert result.size == 2
        assert result.exact

    def test_candidate_cap(self):
        with pytest.raises(CapacityError):
            exact_cover(0b111, [0b001, 0b010, 0b100], max_candidates=2)

    def test_reduce_dominated(self):
        assert reduce_dominated([0b011, 0b001, 0b011, 0b110]) == [0, 3]

    def test_greedy_cover(self):
        assert greedy_cover(0b1111, [0b0011, 0b1100, 0b0110]) == [0, 1]

    def test_max_independent_set_on_a_path(self):
        result = max_independent_set([0b010, 0b101, 0b010])
        assert result.size == 2
        assert result.chosen == [0, 2]


def test_oracle_agreement_on_random_sets():
    result = covering_oracle_check(instances=60, max_points=6, seed=3)
    assert result["passed"], result["examples"]


def test_branch_and_bound_on_the_line(rng, line):
    for _ in range(20):
        E = dyadic_points(rng, 4)
        delta = Fraction(int(rng.integers(1, 257)), 1024)
        assert covering_number(line, E, delta, solver="branch_and_bound") == covering_number(line, E, delta)


class TestProfiles:
    def test_profile_invariants(self, line):
        E = [Fraction(k, 16) for k in range(17)]
        profile = covering_profile(line, E, [Fraction(1, 2 ** r) for r in range(1, 5)])
        counts = [e.n_cover for e in profile.entries]
        assert counts == sorted(counts)
        assert profile.invariant_violations() == []
        assert profile.entries[0].delta_exact == "1/2"

    def test_profile_with_workers(self, line):
        E = [Fraction(k, 16) for k in range(17)]
        schedule = [Fraction(1, 2 ** r) for r in range(1, 5)]
        serial = covering_profile(line, E, schedule)
        threaded = covering_profile(line, E, schedule, workers=3)
        assert serial == threaded

    def test_schedule_must_decrease(self, line):
        with pytest.raises(PreconditionError):
            covering_profile(line, [0], [Fraction(1, 4), Fraction(1, 2)])

    def test_dense_center_bridge(self, line):
        E = [0, Fraction(1, 3), Fraction(2, 3), 1]
        n_hat, n = dense_center_bridge(line, E, Fraction(1, 4), Fraction(1, 2))
        assert n_hat <= n

    def test_dense_column_is_sandwiched(self, line, rng):
        E = dyadic_points(rng, 12, 256)
        schedule = [Fraction(1, 2 ** r) for r in range(2, 6)]
        profile = covering_profile(line, E, schedule, include_dense=True)
        for e in profile.entries:
            finer = covering_number(line, E, Fraction(e.delta_exact) / 2)
            assert e.n_cover <= e.n_cover_dense <= finer

    def test_dense_column_is_off_by_default(self, line):
        profile = covering_profile(line, QUARTERS, [Fraction(1, 2), Fraction(1, 4)])
        assert all(e.n_cover_dense is None for e in profile.entries)
