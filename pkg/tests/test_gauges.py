import math
from fractions import Fraction

import pytest

from core.errors import GaugeSyntaxError, PreconditionError
from core.logspace import LogValue, log2_pow2_minus_one, log2_real, log2_sum, safe_exp2
from gauges.families import FunctionFamily, PowerFamily, canonical, jump, jump_log_identity_holds
from gauges.grammar import parse_gauge
from gauges.precision import canonical_precision, geometric_closed_form, harmonic_precision
from gauges.validation import (
    doubling_check,
    jump_smallness,
    ordering_check,
    validate_gauge_family,
    validate_precision_family,
)

DYADIC = [Fraction(1, 2 ** k) for k in range(1, 41)]


class TestFamilies:
    def test_theta_is_exact_on_rationals(self):
        assert canonical().value(2, Fraction(1, 4)) == Fraction(1, 16)

    def test_pow_family_scales_the_exponent(self):
        assert PowerFamily(0.5).log2_at(2.0, -8.0) == pytest.approx(-8.0)

    def test_jump_of_theta(self):
        # 2^(-1/delta) at delta = 1/2
        assert jump(canonical()).value(1, Fraction(1, 2)) == pytest.approx(0.25)

    def test_jump_below_float_range_stays_in_log_space(self):
        assert canonical().log2_at(0.5, -2.0 ** 20) == -2.0 ** 19
        assert jump(canonical()).log2_at(1.0, -2.0 ** 20) == -math.inf
        assert jump(canonical()).evaluate(1.0, Fraction(1, 2 ** 12)).underflow

    def test_member_rejects_nonpositive_parameter(self):
        with pytest.raises(PreconditionError):
            canonical().member(0)

    def test_evaluation_needs_positive_scale(self):
        with pytest.raises(PreconditionError):
            canonical().evaluate(1, 0)


def test_jump_identity_on_random_triples(rng):
    ks = rng.uniform(0, 1e6, size=100_000)
    ss = rng.uniform(0.01, 4, size=100_000)
    ds = rng.uniform(1e-6, 1, size=100_000)
    failures = [
        (k, s, d) for k, s, d in zip(ks, ss, ds)
        if not jump_log_identity_holds(float(k), float(d) ** float(s))
    ]
    assert failures == []


class TestLogSpace:
    def test_sum_of_equal_terms(self):
        assert log2_sum([0.0, 0.0]) == pytest.approx(1.0)

    def test_sum_skips_zeros(self):
        assert log2_sum([-math.inf, 3.0]) == pytest.approx(3.0)
        assert log2_sum([]) == -math.inf

    def test_pow2_minus_one(self):
        assert log2_pow2_minus_one(1) == 0.0
        assert log2_pow2_minus_one(2) == pytest.approx(math.log2(3))
        assert log2_pow2_minus_one(500) == pytest.approx(500.0)

    def test_huge_rationals(self):
        assert log2_real(Fraction(1, 2 ** 5000)) == -5000.0

    def test_safe_exp2_clamps(self):
        assert safe_exp2(5000) == math.inf
        assert safe_exp2(-5000) == 0.0

    def test_log_value_flags(self):
        assert LogValue.from_value(0).is_zero
        assert LogValue(-1100.0).underflow
        assert (LogValue(1.0) * LogValue(2.0)).log2 == 3.0


class TestValidation:
    def test_theta_passes_every_check(self):
        report = validate_gauge_family(canonical(), [0.5, 1.0, 2.0], DYADIC)
        assert report.passed, report.failed()

    def test_constant_family_does_not_vanish(self):
        report = validate_gauge_family(FunctionFamily(lambda s, d: 1.0, "one"), [1.0], DYADIC)
        assert not report.check("vanishes_only_at_zero")[0].passed

    def test_doubling_and_jump_smallness(self):
        assert doubling_check(canonical(), 1.0, 2.0, DYADIC).passed
        assert jump_smallness(canonical(), 1.0, DYADIC).passed

    def test_grid_must_ascend(self):
        with pytest.raises(PreconditionError):
            validate_gauge_family(canonical(), [2.0, 1.0], DYADIC)

    def test_explicit_zero_tolerance_is_kept(self):
        default = validate_gauge_family(canonical(), [1.0], DYADIC[:8])
        strict = validate_gauge_family(canonical(), [1.0], DYADIC[:8], continuity_tolerance=0.0)
        assert default.check("continuity")[0].passed
        assert not strict.check("continuity")[0].passed

    def test_explicit_threshold_is_kept(self):
        assert ordering_check(canonical(), 2.0, 1.0, DYADIC).passed
        assert not ordering_check(canonical(), 2.0, 1.0, DYADIC, threshold=1e-300).passed
        with pytest.raises(PreconditionError):
            jump_smallness(canonical(), 1.0, DYADIC, threshold=0.0)

    def test_continuity_offset_follows_steps(self):
        report = validate_gauge_family(canonical(), [1.0], DYADIC[:8], continuity_steps=1)
        check = report.check("continuity")[0]
        assert not check.passed
        assert check.one_sided is None
        # delta = 1/2, h = 1/4 on either side
        assert check.witness["left"]["difference"] == pytest.approx(0.25)
        assert check.witness["right"]["difference"] == pytest.approx(0.25)
        with pytest.raises(PreconditionError):
            validate_gauge_family(canonical(), [1.0], DYADIC, continuity_steps=0)


class TestPrecision:
    def test_canonical_cross_sum_matches_closed_form(self):
        report = validate_precision_family(canonical_precision(), canonical(), [(1.0, 2.0)], r_max=40)
        summary = report.summaries["s=1,t=2"]
        assert geometric_closed_form(1.0, 2.0) == pytest.approx(2.0)
        assert summary["partial_sum"] == pytest.approx(2.0, abs=1e-9)
        assert report.passed

    def test_harmonic_cross_sum_is_flagged(self):
        report = validate_precision_family(harmonic_precision(), canonical(), [(1.0, 2.0)], r_max=40)
        failed = {c.name for c in report.failed()}
        assert "cross_convergence" in failed

    def test_exact_scales(self):
        assert canonical_precision().alpha(1, 10).value == Fraction(1, 1024)
        assert canonical_precision().alpha(0.5, 3).exact is False


class TestGrammar:
    @pytest.mark.parametrize("text, descriptor", [
        ("theta", "theta"),
        ("pow(0.5)", "pow(0.5)"),
        ("jump(theta)", "jump(theta)"),
        (" jump(jump(pow(2))) ", "jump(jump(pow(2)))"),
    ])
    def test_descriptors(self, text, descriptor):
        assert parse_gauge(text).descriptor == descriptor

    @pytest.mark.parametrize("text", ["jump(theta", "pow(-1)", "sigma", "", "jump()"])
    def test_malformed(self, text):
        with pytest.raises(GaugeSyntaxError):
            parse_gauge(text)
