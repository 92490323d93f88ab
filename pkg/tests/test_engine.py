from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from somos import (
    INTEGER,
    RATIONAL,
    IndexOutOfRangeError,
    InvalidSpecError,
    NonIntegralEvent,
    NonIntegralTermError,
    SequenceBuffer,
    SequenceSpec,
    ZeroDenominatorError,
    as_integer,
    digit_count,
    first_recurrence_violation,
    generate,
    is_positive_nondecreasing,
    new_state,
    next_term,
    somos5_spec,
    somos_k_spec,
)

from helpers import SOMOS_SUMMANDS, first_fractional_index, fraction_terms

# OEIS A006721 prefix
FIRST_TWELVE = [1, 1, 1, 1, 1, 2, 3, 5, 11, 37, 83, 274]


class TestSpecValidation:
    def test_somos5_initial_buffer(self):
        buffer = new_state(somos5_spec())
        assert buffer.values() == [1, 1, 1, 1, 1]
        assert buffer.start_index == 0
        assert buffer.next_index == 5

    def test_order4_initial_buffer(self):
        spec = SequenceSpec(order=4, summands=((1, 3), (2, 2)), initials=(1, 1, 1, 1))
        assert new_state(spec).values() == [1, 1, 1, 1]

    def test_summand_not_weight_homogeneous(self):
        spec = SequenceSpec(order=5, summands=((1, 3),), initials=(1,) * 5)
        with pytest.raises(InvalidSpecError):
            new_state(spec)

    def test_duplicate_summand(self):
        spec = SequenceSpec(order=5, summands=((1, 4), (1, 4)), initials=(1,) * 5)
        with pytest.raises(InvalidSpecError):
            spec.validate()

    def test_wrong_initials_length(self):
        spec = SequenceSpec(order=5, summands=((1, 4),), initials=(1, 1, 1))
        with pytest.raises(InvalidSpecError):
            spec.validate()

    def test_empty_summands(self):
        spec = SequenceSpec(order=5, summands=(), initials=(1,) * 5)
        with pytest.raises(InvalidSpecError):
            spec.validate()

    def test_summand_order_flipped(self):
        spec = SequenceSpec(order=5, summands=((4, 1),), initials=(1,) * 5)
        with pytest.raises(InvalidSpecError):
            spec.validate()

    def test_specs_accept_lists(self):
        spec = SequenceSpec(order=5, summands=[[1, 4], [2, 3]], initials=[1] * 5)
        spec.validate()
        assert spec == SequenceSpec(order=5, summands=((1, 4), (2, 3)), initials=(1,) * 5)


class TestNextTerm:
    def test_first_computed_term(self):
        buffer = new_state(somos5_spec())
        assert next_term(buffer, somos5_spec()) == 2
        assert buffer.next_index == 6

    def test_single_step_at_index_12(self):
        # (274*11 + 83*37) / 5 = 6085 / 5
        buffer = SequenceBuffer(FIRST_TWELVE)
        assert next_term(buffer, somos5_spec()) == 1217

    def test_rational_mode_returns_fraction(self):
        buffer = new_state(somos5_spec())
        value = next_term(buffer, somos5_spec(), RATIONAL)
        assert value == Fraction(2)
        assert isinstance(value, Fraction)

    def test_non_integral_leaves_buffer_unchanged(self):
        spec = somos_k_spec(8)
        oracle = fraction_terms(8, SOMOS_SUMMANDS[8], 40)
        failing = first_fractional_index(oracle)
        buffer = new_state(spec)
        while buffer.next_index < failing:
            assert isinstance(next_term(buffer, spec), int)
        before = buffer.values()
        event = next_term(buffer, spec)
        assert isinstance(event, NonIntegralEvent)
        assert event.index == failing
        assert 0 < event.remainder < abs(event.denominator)
        assert buffer.values() == before

    def test_zero_denominator(self):
        spec = SequenceSpec(order=5, summands=((1, 4), (2, 3)), initials=(0, 1, 1, 1, 1))
        buffer = new_state(spec)
        with pytest.raises(ZeroDenominatorError) as excinfo:
            next_term(buffer, spec)
        assert excinfo.value.index == 5

    def test_short_buffer_rejected(self):
        buffer = SequenceBuffer([1, 1, 1])
        with pytest.raises(IndexOutOfRangeError):
            next_term(buffer, somos5_spec())

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            next_term(new_state(somos5_spec()), somos5_spec(), "float")


class TestGenerate:
    def test_first_twelve_terms(self):
        assert generate(somos5_spec(), 12).values() == FIRST_TWELVE

    def test_initials_only(self):
        assert generate(somos5_spec(), 5).values() == [1] * 5

    def test_fourteen_terms_end_at_6161(self):
        buffer = generate(somos5_spec(), 14)
        assert buffer.term(13) == 6161
        oracle = fraction_terms(5, SOMOS_SUMMANDS[5], 14)
        assert [Fraction(v) for v in buffer.values()] == oracle

    def test_count_below_order_rejected(self):
        with pytest.raises(ValueError):
            generate(somos5_spec(), 3)

    def test_integer_mode_aborts_with_witness(self):
        spec = somos_k_spec(8)
        oracle_failing = first_fractional_index(fraction_terms(8, SOMOS_SUMMANDS[8], 40))
        with pytest.raises(NonIntegralTermError) as excinfo:
            generate(spec, 40)
        assert excinfo.value.event.index == oracle_failing
        assert excinfo.value.buffer.next_index == oracle_failing

    def test_determinism(self):
        first = generate(somos5_spec(), 60).values()
        second = generate(somos5_spec(), 60).values()
        assert first == second

    def test_mode_agreement_where_integer_succeeds(self):
        for k in (4, 5, 6, 7):
            spec = somos_k_spec(k)
            integral = generate(spec, 60, INTEGER).values()
            rational = generate(spec, 60, RATIONAL).values()
            assert all(v.denominator == 1 for v in rational[k:])
            assert [Fraction(v) for v in integral] == rational

    def test_mode_boundary_at_somos8_breakdown(self):
        # rational denominators are 1 exactly where integer mode succeeds
        spec = somos_k_spec(8)
        oracle = fraction_terms(8, SOMOS_SUMMANDS[8], 25)
        failing = first_fractional_index(oracle)
        rational = generate(spec, 25, RATIONAL).values()
        assert all(v.denominator == 1 for v in rational[:failing])
        assert rational[failing].denominator != 1
        with pytest.raises(NonIntegralTermError) as excinfo:
            generate(spec, 25, INTEGER)
        assert excinfo.value.event.index == failing

    def test_positive_and_nondecreasing_prefix(self, somos5_buffer):
        assert is_positive_nondecreasing(somos5_buffer(300))


class TestBufferRetention:
    def test_windowed_retention_drops_old_terms(self):
        buffer = generate(somos5_spec(), 60, retention=20)
        assert len(buffer) == 20
        assert buffer.start_index == 40
        assert buffer.next_index == 60
        with pytest.raises(IndexOutOfRangeError):
            buffer.term(39)

    def test_windowed_tail_matches_full(self, somos5_values):
        buffer = generate(somos5_spec(), 80, retention=25)
        assert buffer.values() == list(somos5_values[55:80])

    def test_window_below_twice_order_rejected(self):
        with pytest.raises(ValueError):
            new_state(somos5_spec(), retention=9)

    def test_tiny_window_rejected(self):
        with pytest.raises(ValueError):
            SequenceBuffer([1, 1], retention=1)

    def test_has_range(self):
        buffer = SequenceBuffer([1, 2, 3], start_index=7)
        assert buffer.has_range(7, 9)
        assert not buffer.has_range(6, 9)
        assert not buffer.has_range(7, 10)


class TestRecurrenceRecheck:
    def test_clean_buffer_has_no_violation(self, somos5_buffer):
        assert first_recurrence_violation(somos5_buffer(200), somos5_spec()) is None

    def test_perturbed_term_detected(self, somos5_values):
        values = list(somos5_values[:50])
        values[20] += 1
        index = first_recurrence_violation(SequenceBuffer(values), somos5_spec())
        assert index is not None
        # a_20 first appears on the right-hand side of the identity at n = 21
        assert 20 <= index <= 25

    def test_partial_buffer_checked_from_first_covered_index(self, somos5_values):
        buffer = SequenceBuffer(list(somos5_values[3:40]), start_index=3)
        assert first_recurrence_violation(buffer, somos5_spec()) is None


class TestDigitCount:
    @pytest.mark.parametrize(
        "value,expected",
        [(274, 3), (1, 1), (0, 1), (-6161, 4), (9, 1), (10, 2), (999, 3), (1000, 4)],
    )
    def test_examples(self, value, expected):
        assert digit_count(value) == expected

    def test_power_of_ten_boundaries(self):
        for exponent in (5, 50, 500):
            assert digit_count(10**exponent - 1) == exponent
            assert digit_count(10**exponent) == exponent + 1

    @given(st.integers(min_value=-(10**60), max_value=10**60))
    def test_matches_string_length(self, value):
        assert digit_count(value) == len(str(abs(value)))

    def test_monotone_along_somos5(self, somos5_values):
        counts = [digit_count(v) for v in somos5_values[:101]]
        assert counts[100] >= counts[99]
        assert counts == sorted(counts)

    def test_fraction_terms(self):
        assert digit_count(Fraction(274)) == 3
        with pytest.raises(ValueError):
            digit_count(Fraction(1, 2))


class TestRecurrenceIdentityProperty:
    @settings(deadline=None, max_examples=30)
    @given(
        k=st.integers(min_value=4, max_value=7),
        count=st.integers(min_value=10, max_value=40),
    )
    def test_exact_identity_over_generated_prefix(self, k, count):
        spec = somos_k_spec(k)
        buffer = generate(spec, count, RATIONAL)
        for n in range(k, buffer.next_index):
            lhs = buffer.term(n) * buffer.term(n - k)
            rhs = sum(buffer.term(n - i) * buffer.term(n - j) for i, j in spec.summands)
            assert lhs - rhs == 0


def test_as_integer():
    assert as_integer(7) == 7
    assert as_integer(Fraction(7)) == 7
    with pytest.raises(ValueError):
        as_integer(Fraction(7, 2))
