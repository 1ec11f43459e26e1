"""
Unit tests for subdivisor counts and the projective-space decomposition.

Core claims:
    - The dynamic program agrees with exhaustive enumeration of exponent tuples
    - Counts are symmetric under the complement D -> (p-1)K~_X - D
    - The published counts are reproduced, capped and stable
    - The state limit comes from the environment and fails loudly
    - The lower bound is refused outside type A
    - The projective-space multiplicities add up to p^m and dominate S on X_PSL2
"""

import itertools
import logging
from collections import Counter

import pytest

from wonderful.errors import ConjecturalForType, InvalidPrime, StateLimitExceeded
from wonderful.frobenius import subdivisor_count
from wonderful.frobenius.config import PUBLISHED_SUBDIVISOR_COUNTS
from wonderful.frobenius.subdivisor_count import (
    BoundaryDivisor,
    complement,
    count_subdivisors,
    enumerate_subdivisors,
    full_divisor,
    multiplicity_lower_bound,
    picard_class,
    stable_subdivisor_count,
    subdivisor_report,
    thomsen_decomposition,
    thomsen_multiplicity,
)
from wonderful.frobenius.summand_conditions import split_target
from wonderful.lie.root_system import Weight


# -- Helpers -----------------------------------------------------------------

def _brute_counts(rs, p):
    """Picard class of every exponent tuple in [0, p-1]^{3l}."""
    counts = Counter()
    for exponents in itertools.product(range(p), repeat=3 * rs.rank):
        r = rs.rank
        divisor = BoundaryDivisor(exponents[:r], exponents[r:2 * r], exponents[2 * r:])
        counts[picard_class(rs, divisor)] += 1
    return counts


# == 1. Picard classes ========================================================

class TestPicardClass:
    def test_single_root_divisor(self, a2):
        assert picard_class(a2, BoundaryDivisor((0, 0), (0, 0), (1, 0))) == Weight.of(2, -1)
        assert picard_class(a2, BoundaryDivisor((0, 0), (0, 0), (0, 0))) == Weight.of(0, 0)

    def test_full_divisor(self, all_types):
        for rs in all_types:
            for p in (2, 5):
                assert picard_class(rs, full_divisor(rs, p)) == split_target(rs, p)

    def test_complement(self, b2):
        divisor = BoundaryDivisor((1, 0), (4, 2), (0, 3))
        other = complement(b2, divisor, 5)
        assert other == BoundaryDivisor((3, 4), (0, 2), (4, 1))
        assert picard_class(b2, divisor) + picard_class(b2, other) == split_target(b2, 5)
        assert other.is_subdivisor(5)
        assert not BoundaryDivisor((5, 0), (0, 0), (0, 0)).is_subdivisor(5)


# == 2. Counting ==============================================================

class TestCounting:
    @pytest.mark.parametrize("fixture, p", [("a1", 5), ("a2", 3), ("a2", 5), ("b2", 3), ("g2", 3)])
    def test_matches_exhaustive_enumeration(self, request, fixture, p):
        rs = request.getfixturevalue(fixture)
        brute = _brute_counts(rs, p)
        for lam, expected in brute.items():
            assert count_subdivisors(rs, lam, p) == expected, str(lam)
        assert sum(brute.values()) == p ** (3 * rs.rank)

    def test_unreachable_classes(self, a2, g2):
        assert count_subdivisors(a2, Weight.of(-1, 0), 5) == 0
        assert count_subdivisors(a2, Weight.of(20, 20), 3) == 0
        assert count_subdivisors(g2, Weight.of(0, -1), 5) == 0

    def test_complement_symmetry(self, a2, b2):
        for rs, p in ((a2, 5), (b2, 3)):
            top = split_target(rs, p)
            for coords in itertools.product(range(-2, 9), repeat=2):
                lam = Weight(coords)
                assert count_subdivisors(rs, lam, p) == count_subdivisors(rs, top - lam, p)

    def test_listing_matches_count(self, a2, g2):
        for rs, lam, p in ((a2, Weight.of(3, 3), 5), (g2, Weight.of(2, 2), 3)):
            listed = list(enumerate_subdivisors(rs, lam, p))
            assert len(listed) == count_subdivisors(rs, lam, p)
            assert len(set(listed)) == len(listed)
            for divisor in listed:
                assert divisor.is_subdivisor(p)
                assert picard_class(rs, divisor) == lam

    def test_small_values(self, a2):
        assert count_subdivisors(a2, Weight.of(0, 0), 7) == 1
        assert count_subdivisors(a2, Weight.of(2, -1), 5) == 1
        # X1 + X2 or any split of ω1 + ω2 between D and D~
        assert count_subdivisors(a2, Weight.of(1, 1), 5) == 5

    def test_rejects_small_p(self, a2):
        with pytest.raises(ValueError):
            count_subdivisors(a2, Weight.of(0, 0), 1)


# == 3. Published counts ======================================================

class TestPublishedCounts:
    def test_psl3_small_class(self, a2):
        published = PUBLISHED_SUBDIVISOR_COUNTS[("A2", (6, 6))]
        assert count_subdivisors(a2, Weight.of(6, 6), 11) == published
        assert count_subdivisors(a2, Weight.of(6, 6), 13) == published
        assert stable_subdivisor_count(a2, Weight.of(6, 6)) == published

    def test_caps_bind_at_seven(self, a2):
        report = subdivisor_report(a2, Weight.of(6, 6), 7)
        assert report.count == 396
        assert report.stable_count == 460
        assert report.caps_bind
        assert report.to_dict() == {"count": "396", "stable_count": "460", "caps_bind": True}

    def test_psl3_large_class(self, a2):
        published = PUBLISHED_SUBDIVISOR_COUNTS[("A2", (20, 22))]
        assert count_subdivisors(a2, Weight.of(20, 22), 37) == published
        assert stable_subdivisor_count(a2, Weight.of(20, 22)) == published
        report = subdivisor_report(a2, Weight.of(20, 22), 23)
        assert report.caps_bind
        assert report.count < published

    def test_psl4_class(self, a3):
        published = PUBLISHED_SUBDIVISOR_COUNTS[("A3", (20, 21, 22))]
        assert stable_subdivisor_count(a3, Weight.of(20, 21, 22)) == published

    def test_psl4_class_at_finite_prime(self, a3):
        published = PUBLISHED_SUBDIVISOR_COUNTS[("A3", (20, 21, 22))]
        report = subdivisor_report(a3, Weight.of(20, 21, 22), 23)
        assert report.caps_bind
        assert report.count == 10930738
        assert report.stable_count == published


# == 4. Limits and lower bounds ===============================================

class TestLimits:
    def test_state_limit(self, a2, monkeypatch):
        monkeypatch.setenv("WF_DP_STATE_LIMIT", "1")
        with pytest.raises(StateLimitExceeded) as exc:
            count_subdivisors(a2, Weight.of(6, 6), 7)
        assert "states after folding" in exc.value.detail

    def test_fold_memory_only_sampled_for_debug(self, a2, monkeypatch, caplog):
        def _no_process():
            raise AssertionError("resident memory sampled with DEBUG off")

        monkeypatch.setattr(subdivisor_count.psutil, "Process", _no_process)
        caplog.set_level(logging.INFO, logger=subdivisor_count.__name__)
        assert count_subdivisors(a2, Weight.of(6, 6), 11) == 460

    def test_lower_bound(self, a2):
        mu = Weight.of(1, -1)
        assert multiplicity_lower_bound(a2, mu * 5, mu, 5) == 1
        assert multiplicity_lower_bound(a2, mu * 5 + Weight.of(2, -1), mu, 5) == 1
        assert multiplicity_lower_bound(a2, mu * 7 + Weight.of(6, 6), mu, 7) == 396

    def test_lower_bound_needs_type_a(self, b2, g2):
        for rs in (b2, g2):
            with pytest.raises(ConjecturalForType):
                multiplicity_lower_bound(rs, Weight.of(0, 0), Weight.of(0, 0), 5)

    def test_lower_bound_bad_prime(self, a2):
        with pytest.raises(InvalidPrime):
            multiplicity_lower_bound(a2, Weight.of(0, 0), Weight.of(0, 0), 3)


# == 5. Projective space ======================================================

class TestProjectiveSpace:
    def test_p1_at_three(self):
        assert thomsen_multiplicity(1, 0, 0, 3) == 1
        assert thomsen_multiplicity(1, 0, -1, 3) == 2
        assert thomsen_decomposition(1, 0, 3) == {0: 1, -1: 2}

    def test_trivial_summand_of_p3(self):
        assert thomsen_multiplicity(3, 0, 0, 2) == 1

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_total_rank(self, m, p):
        for d in range(-p, 3 * p):
            assert sum(thomsen_decomposition(m, d, p).values()) == p ** m

    def test_dominates_psl2_count(self, a1):
        # X_PSL2 is P^3 with ω the hyperplane class
        for p in (2, 3, 5):
            for n in range(4 * p):
                for k in range(-4, n // p + 1):
                    assert count_subdivisors(a1, Weight.of(n - p * k), p) <= thomsen_multiplicity(3, n, k, p)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            thomsen_multiplicity(0, 0, 0, 3)
