import math
from fractions import Fraction

import pytest

from constructions.counterexamples import one_over_n_points
from core.errors import NoBracketError, PreconditionError
from covering.profiles import covering_profile
from dimension.minkowski import full_dimension_point, loglog_slope, minkowski_dimension, ratio_dimension
from dimension.sums import cover_sum, hausdorff_upper_bound, packing_lower_bound, packing_sum
from dimension.trend import bisect_boundary, diverges, tends_to_zero, window_size
from gauges.families import canonical, jump
from models.profiles import LogCountProfile
from models.reports import TrendRecord
from tools.schedules import parse_schedule

GRID = [Fraction(k, 1024) for k in range(1025)]
DYADIC_8 = [Fraction(1, 2 ** r) for r in range(1, 9)]


def power_law(d, scales=20):
    return LogCountProfile(
        log2_deltas=[-float(r) for r in range(1, scales + 1)],
        log2_counts=[d * r for r in range(1, scales + 1)],
    )


class TestTrend:
    def test_decreasing_is_accepted(self):
        assert tends_to_zero(1.0, [-1, -2, -3, -4], "upper").accepted

    def test_increasing_is_rejected(self):
        record = tends_to_zero(1.0, [1, 2, 3, 4], "upper")
        assert not record.accepted
        assert (record.coarse_stat, record.fine_stat) == (2, 4)

    def test_flat_negative_is_rejected(self):
        assert not tends_to_zero(1.0, [-1, -1, -1, -1], "lower").accepted

    def test_underflow_counts_as_vanished(self):
        assert tends_to_zero(1.0, [0, 0, -math.inf, -math.inf], "upper").accepted

    def test_kind_selects_the_statistic(self):
        values = [-1, -5, -2, -6]
        assert tends_to_zero(1.0, values, "lower").fine_stat == -6
        assert tends_to_zero(1.0, values, "upper").fine_stat == -2

    def test_diverges(self):
        assert not diverges(1.0, [0, 1, 2, 3]).accepted
        assert diverges(1.0, [3, 2, 1, 0]).accepted

    def test_window_size(self):
        assert window_size(8) == 4
        assert window_size(3) == 2
        with pytest.raises(PreconditionError):
            window_size(4, 5)


def _threshold(at):
    def decide(s):
        return TrendRecord(s=s, accepted=s >= at, coarse_stat=0, fine_stat=0, values=[])
    return decide


class TestBisection:
    def test_finds_the_boundary(self):
        boundary = bisect_boundary(_threshold(1.5), tolerance=1e-4)
        assert boundary.value == pytest.approx(1.5, abs=1e-4)
        assert boundary.bracket[0] < 1.5 <= boundary.bracket[1]

    def test_accepted_floor(self):
        boundary = bisect_boundary(_threshold(0.0), s_min=0.01)
        assert boundary.at_floor
        assert boundary.bracket == (0.0, 0.01)

    def test_rejected_ceiling(self):
        with pytest.raises(NoBracketError) as info:
            bisect_boundary(_threshold(100.0), s_max=10.0)
        assert len(info.value.diagnostics) == 2


class TestMinkowski:
    @pytest.mark.parametrize("d", [0.25, 0.75, 1.5])
    def test_power_law_profiles(self, d):
        estimate = minkowski_dimension(power_law(d), canonical(), "upper", tolerance=1e-4)
        assert estimate.value == pytest.approx(d, abs=1e-3)
        assert estimate.method == "bisection"

    def test_jump_gauge_on_exponential_counts(self):
        profile = LogCountProfile(
            log2_deltas=[-float(r) for r in range(1, 21)],
            log2_counts=[2.0 ** (0.5 * r) for r in range(1, 21)],
        )
        estimate = minkowski_dimension(profile, jump(canonical()), "upper")
        assert estimate.value == pytest.approx(0.5, abs=0.01)

    def test_unit_interval(self, line):
        profile = covering_profile(line, GRID, DYADIC_8)
        assert minkowski_dimension(profile, canonical()).value == pytest.approx(1.0, abs=0.02)
        assert loglog_slope(profile, window=4).value == pytest.approx(1.0, abs=0.02)
        assert ratio_dimension(profile, "lower").value <= ratio_dimension(profile, "upper").value

    def test_self_similar_set(self, line, e0_points, seven_schedule):
        profile = covering_profile(line, e0_points, seven_schedule)
        assert [e.n_cover for e in profile.entries] == [2 ** k for k in range(1, 7)]
        assert loglog_slope(profile).value == pytest.approx(math.log(2) / math.log(7), abs=1e-3)

    @pytest.mark.parametrize("kind", ["lower", "upper"])
    def test_self_similar_set_by_bisection(self, line, e0_points, seven_schedule, kind):
        profile = covering_profile(line, e0_points, seven_schedule)
        estimate = minkowski_dimension(profile, canonical(), kind)
        assert estimate.value == pytest.approx(math.log(2) / math.log(7), abs=0.01)
        assert not estimate.at_floor

    def test_jump_gauge_never_raises_the_estimate(self, rng):
        for _ in range(25):
            d, c = rng.uniform(0.25, 2.0), rng.uniform(0.0, 3.0)
            profile = LogCountProfile(
                log2_deltas=[-float(r) for r in range(1, 21)],
                log2_counts=[c + d * r for r in range(1, 21)],
            )
            direct = minkowski_dimension(profile, canonical(), "upper")
            jumped = minkowski_dimension(profile, jump(canonical()), "upper")
            assert direct.value >= d - 2e-3
            assert jumped.value <= direct.value + 2e-3, (d, c)

    def test_one_over_n(self, line):
        profile = covering_profile(line, one_over_n_points(10_000), parse_schedule("geo:10,9,2,1/4"),
                                   include_pack=False)
        assert loglog_slope(profile).value == pytest.approx(0.5, abs=0.05)

    def test_needs_four_scales(self):
        with pytest.raises(PreconditionError):
            minkowski_dimension(power_law(1.0, scales=3), canonical())

    def test_full_dimension_point(self, line):
        E = [Fraction(k, 32) for k in range(33)] + [Fraction(5)]
        schedule = [Fraction(1, 2 ** r) for r in range(1, 6)]
        best = full_dimension_point(line, E, Fraction(1, 2), schedule, canonical())
        assert best.point != 5
        assert best.local.value == pytest.approx(1.0, abs=0.02)


class TestSums:
    def test_cover_sum(self):
        total = cover_sum([Fraction(1, 2), Fraction(1, 2)], canonical(), 1.0)
        assert total.log2 == pytest.approx(0.0)
        assert total.terms == 2

    def test_empty_cover(self):
        total = cover_sum([], canonical(), 1.0)
        assert total.empty
        assert total.value == 0.0

    def test_packing_sum(self, line):
        total = packing_sum(line, [0, Fraction(1, 2), 1], Fraction(1, 2), canonical(), 1.0)
        assert total.terms == 3
        assert total.value == pytest.approx(1.5)

    def test_hausdorff_upper_bound_on_dyadic_covers(self):
        covers = [[Fraction(1, 2 ** k)] * 2 ** k for k in range(1, 9)]
        estimate = hausdorff_upper_bound(covers, canonical(), tolerance=1e-4)
        assert estimate.value == pytest.approx(1.0, abs=1e-3)
        assert estimate.method == "cover-sum"

    def test_packing_lower_bound(self, line):
        E = [Fraction(k, 256) for k in range(257)]
        estimate = packing_lower_bound(line, E, [Fraction(1, 2 ** r) for r in range(1, 7)], canonical())
        assert 0.5 <= estimate.value <= 1.0
