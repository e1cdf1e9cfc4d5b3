import math
from fractions import Fraction

import numpy as np
import pytest

from core.errors import CapacityError, PreconditionError
from gauges.families import canonical
from hyperspace.hausdorff import CompactApprox, hausdorff_distance, mask_points, subset_hausdorff
from hyperspace.hyperspace_covering import (
    brute_force_hyperspace_cover,
    hyperspace_covering_number,
    hyperspace_net,
)
from hyperspace.verification import (
    fixed_set_generator,
    hyperspace_profile,
    interval_net_generator,
    verify_hyperspace_minkowski,
)
from runners.oracle_runner import hyperspace_sandwich_check
from spaces.metric_spaces import EuclideanSpace, MatrixSpace, check_metric_axioms
from tools.schedules import parse_schedule

THIRDS = [0, Fraction(1, 2), 1]


class TestHausdorff:
    def test_exact_distances(self, line):
        assert hausdorff_distance(line, [0, 1], [0]) == 1
        assert hausdorff_distance(line, [0, Fraction(1, 2)], [Fraction(1, 4)]) == Fraction(1, 4)

    def test_compact_approx_operands(self, line):
        E = CompactApprox.of([1, 0, 1])
        assert E.points == (0, 1)
        assert hausdorff_distance(line, E, CompactApprox.of([Fraction(1, 2)])) == Fraction(1, 2)

    def test_empty_operand(self, line):
        with pytest.raises(PreconditionError):
            hausdorff_distance(line, [], [0])

    def test_subset_table_matches_pairwise(self, line, rng):
        points = sorted({Fraction(int(k), 64) for k in rng.integers(0, 65, size=5)})
        table = subset_hausdorff(line, points)
        n = len(points)
        for a in range(1, 1 << n):
            for b in range(1, 1 << n):
                expected = hausdorff_distance(line, mask_points(points, a), mask_points(points, b))
                assert table[a - 1, b - 1] == pytest.approx(float(expected))

    def test_subset_table_is_a_metric(self, rng):
        points = [tuple(p) for p in rng.uniform(-1, 1, size=(8, 2))]
        table = MatrixSpace(subset_hausdorff(EuclideanSpace(2), points))
        report = check_metric_axioms(table, table.points, samples=10_000, seed=3)
        assert report.passed, [c.witness for c in report.checks if not c.passed]
        assert report.summaries["samples"] == 10_000


class TestHyperspaceNet:
    def test_all_nonempty_subsets(self):
        net = hyperspace_net(THIRDS)
        assert len(net) == 7
        assert {len(K) for K in net} == {1, 2, 3}

    def test_empty_set_is_excluded(self):
        with pytest.raises(PreconditionError):
            hyperspace_net(THIRDS, include_empty=True)

    def test_cap(self):
        with pytest.raises(CapacityError):
            hyperspace_net(THIRDS, cap=2)


class TestHyperspaceCounts:
    def test_sandwich_and_exact_count(self, line):
        count = hyperspace_covering_number(line, THIRDS, Fraction(1, 4), mode="exact")
        assert (count.lower, count.upper) == (7, 8)
        assert count.exact == 7
        assert brute_force_hyperspace_cover(line, THIRDS, Fraction(1, 4)) == 7

    def test_bounds_in_log_space(self, line):
        count = hyperspace_covering_number(line, THIRDS, Fraction(1, 4))
        assert count.exact is None
        assert count.log2_lower == pytest.approx(math.log2(7))
        assert count.log2_upper == 3.0

    def test_greedy_is_an_upper_bound(self, line):
        E = [0, Fraction(1, 8), Fraction(1, 2), Fraction(3, 4)]
        exact = hyperspace_covering_number(line, E, Fraction(1, 8), mode="exact").exact
        greedy = hyperspace_covering_number(line, E, Fraction(1, 8), mode="greedy").greedy
        assert greedy >= exact

    def test_exact_cap(self, line):
        with pytest.raises(CapacityError):
            hyperspace_covering_number(line, THIRDS, Fraction(1, 4), mode="exact", exact_cap=3)

    @pytest.mark.slow
    def test_random_sandwich(self):
        result = hyperspace_sandwich_check(instances=200, max_points=10, seed=0)
        assert result["mismatches"] == 0, result["examples"]
        assert result["instances"] >= 200


class TestVerification:
    def test_profile_rows(self, line):
        rows = hyperspace_profile(line, fixed_set_generator(THIRDS), [Fraction(1, 4), Fraction(1, 8)])
        assert [(r.n_cover, r.n_pack_2delta) for r in rows] == [(3, 3), (3, 3)]

    def test_self_similar_set(self, line, e0_points, seven_schedule):
        report = verify_hyperspace_minkowski(line, fixed_set_generator(e0_points), canonical(), seven_schedule)
        expected = math.log(2) / math.log(7)
        assert [r.n_cover for r in report.profile] == [2 ** k for k in range(1, 7)]
        assert [r.n_pack_2delta for r in report.profile] == [2 ** k for k in range(1, 7)]
        assert report.set_estimate.value == pytest.approx(expected, abs=0.01)
        assert report.hyperspace_upper_estimate.value == pytest.approx(expected, abs=0.01)
        assert report.passed

    def test_unit_interval(self, line):
        report = verify_hyperspace_minkowski(line, interval_net_generator(0, 1, 4), canonical(),
                                             parse_schedule("geo:2,16"))
        assert report.set_estimate.value == pytest.approx(1.0, abs=0.01)
        assert report.difference <= 0.1
        assert report.passed

    def test_interval_generator_resolution(self):
        generate = interval_net_generator(0, 1, 4)
        points = generate(Fraction(1, 4))
        assert np.allclose(points, np.linspace(0, 1, 9))
