"""
Unit tests for graded rings, Chern characters and fixed-point K-classes.

Core claims:
    - The Chow ring of P^m multiplies, inverts and exponentiates exactly
    - Todd classes of P^1 and P^2 match their closed forms
    - ch(Fr_* O(d)) agrees with the line-bundle decomposition on P^m
    - The pushforward satisfies the projection formula for Frobenius pullbacks
    - Tangent characters and base characters move with the W × W action
    - Fixed-point classes expand to p^{dim G} characters that match brute-force enumeration
    - Factored and expanded classes evaluate to the same rational number
"""

import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from wonderful.errors import ExpansionTooLarge, NotInvertible, WeightParseError, WonderfulError
from wonderful.frobenius.subdivisor_count import thomsen_decomposition
from wonderful.ktheory.graded_ring import (
    GradedElement,
    adams,
    adams_inverse,
    chern_pushforward,
    denominator_bound,
    exp_nilpotent,
    hyperplane,
    inverse,
    line_bundle_character,
    parse_ring,
    power,
    projective_space,
    pushforward_on_projective_space,
    thomsen_chern_character,
    todd_projective,
)
from wonderful.ktheory.ktheory import (
    CharacterAssignment,
    CharacterPair,
    evaluate_class,
    evaluate_expansion,
    expand_class,
    fixed_points,
    localized_class,
    parse_point,
    tangent_weights_at,
    truncated_geometric,
)
from wonderful.lie.root_system import Weight, compose, weyl_apply


# -- Helpers -----------------------------------------------------------------

def _make_element(m, values):
    return GradedElement.from_list(projective_space(m), values)


def _make_assignment(rng, rank):
    def value():
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    return CharacterAssignment(tuple(value() for _ in range(rank)), tuple(value() for _ in range(rank)))


def _brute_expansion(fpc):
    terms = Counter()
    for exponents in itertools.product(range(fpc.p), repeat=len(fpc.tangent)):
        pair = fpc.base
        for chi, a in zip(fpc.tangent, exponents):
            pair = pair + chi * a
        terms[pair] += 1
    return terms


# == 1. Graded ring arithmetic ================================================

class TestGradedRing:
    def test_projective_space(self):
        ring = projective_space(3)
        assert ring.labels == ("1", "h", "h^2", "h^3")
        assert ring.top_degree == 3
        assert parse_ring("Pm:3") is ring
        assert parse_ring("P3") is ring

    def test_bad_ring(self):
        with pytest.raises(WonderfulError):
            parse_ring("Gr(2,4)")
        with pytest.raises(ValueError):
            projective_space(0)

    def test_truncation(self):
        h = hyperplane(projective_space(2))
        assert power(h, 2).to_list() == ["0", "0", "1"]
        assert power(h, 3) == GradedElement.zero(projective_space(2))

    def test_inverse(self):
        x = _make_element(3, [2, 1, 0, 5])
        assert x * inverse(x) == GradedElement.one(x.ring)

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            inverse(_make_element(2, [0, 1, 1]))

    def test_exp(self):
        ring = projective_space(3)
        e = exp_nilpotent(hyperplane(ring) * 2)
        assert e.to_list() == ["1", "2", "2", "4/3"]
        assert line_bundle_character(ring, 2) * line_bundle_character(ring, -2) == GradedElement.one(ring)

    def test_adams(self):
        x = _make_element(2, [1, 1, 1])
        assert adams(3, x).to_list() == ["1", "3", "9"]
        assert adams_inverse(3, adams(3, x)) == x
        # ψ^k e^{dh} = e^{kdh}
        ring = projective_space(2)
        assert adams(3, line_bundle_character(ring, 1)) == line_bundle_character(ring, 3)

    def test_mixed_rings(self):
        with pytest.raises(ValueError):
            hyperplane(projective_space(1)) + hyperplane(projective_space(2))


# == 2. Chern characters ======================================================

class TestChernCharacter:
    def test_todd_p1(self):
        assert todd_projective(1).to_list() == ["1", "1"]

    def test_todd_p2(self):
        assert todd_projective(2).to_list() == ["1", "3/2", "1"]

    def test_p1_at_two(self):
        # Fr_* O on P^1 at p = 2 is O ⊕ O(-1)
        assert pushforward_on_projective_space(1, 0, 2).to_list() == ["2", "-1"]
        assert thomsen_decomposition(1, 0, 2) == {0: 1, -1: 1}

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_matches_line_bundle_sum(self, m, p):
        for d in range(2 * p + 1):
            assert pushforward_on_projective_space(m, d, p) == thomsen_chern_character(m, d, p)

    def test_negative_degree(self):
        for d in (-1, -4, -7):
            assert pushforward_on_projective_space(2, d, 3) == thomsen_chern_character(2, d, 3)

    def test_rank_and_denominators(self):
        for m, p, d in ((2, 3, 4), (3, 5, 1)):
            ch = pushforward_on_projective_space(m, d, p)
            assert ch.constant == p ** m
            bound = denominator_bound(m, p)
            assert all(bound % c.denominator == 0 for c in ch.coefficients)

    @pytest.mark.parametrize("m", [1, 2])
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_projection_formula(self, m, p):
        # twisting by Fr^* O(ν) = O(pν) before pushing forward is twisting by O(ν) after
        ring = projective_space(m)
        td = todd_projective(m)
        for d in range(-3, 4):
            ch_l = line_bundle_character(ring, d)
            pushed = chern_pushforward(ring, ch_l, td, p, m)
            for nu in range(-2, 3):
                twisted = chern_pushforward(ring, ch_l * line_bundle_character(ring, p * nu), td, p, m)
                assert twisted == pushed * line_bundle_character(ring, nu)

    def test_ring_mismatch(self):
        ring = projective_space(2)
        with pytest.raises(ValueError):
            chern_pushforward(ring, line_bundle_character(ring, 1), todd_projective(3), 3, 2)


# == 3. Fixed-point classes ===================================================

class TestFixedPointClasses:
    def test_fixed_points(self, a1, a2):
        assert len(fixed_points(a1)) == 4
        assert len(fixed_points(a2)) == 36
        assert fixed_points(a1)[0] == (0, 0)

    def test_tangent_weights(self, a2):
        for y, w in [(0, 0), (3, 5)]:
            tangent = tangent_weights_at(a2, y, w)
            assert len(tangent) == a2.group_dim
            assert tangent[-1] == CharacterPair(
                weyl_apply(a2, y, a2.simple_roots[1]), -weyl_apply(a2, w, a2.simple_roots[1])
            )

    def test_tangent_weights_are_equivariant(self, a1, a2):
        for rs in (a1, a2):
            order = len(rs.weyl_elements)
            for (y, w), u, v in itertools.product(fixed_points(rs), range(order), range(order)):
                moved = tangent_weights_at(rs, compose(rs, u, y), compose(rs, v, w))
                expected = tuple(
                    CharacterPair(weyl_apply(rs, u, chi.left), weyl_apply(rs, v, chi.right))
                    for chi in tangent_weights_at(rs, y, w)
                )
                assert Counter(moved) == Counter(expected)

    def test_base_character_is_equivariant(self, a2):
        lam = Weight.of(2, 1)
        order = len(a2.weyl_elements)
        for u, v in itertools.product(range(order), repeat=2):
            base = localized_class(a2, lam, 3, 0, 0).base
            moved = localized_class(a2, lam, 3, u, v).base
            assert moved == CharacterPair(weyl_apply(a2, u, base.left), weyl_apply(a2, v, base.right))

    def test_base_character(self, a1):
        fpc = localized_class(a1, Weight.of(3), 2, 0, 0)
        assert fpc.base == CharacterPair(Weight.of(-3), Weight.of(-3))
        assert fpc.term_count == 8

    @pytest.mark.parametrize("p", [2, 3])
    def test_expansion_matches_brute_force(self, a1, p):
        for y, w in fixed_points(a1):
            for n in (0, 1, 3):
                fpc = localized_class(a1, Weight.of(n), p, y, w)
                terms = expand_class(fpc, limit=p ** a1.group_dim)
                assert sum(terms.values()) == p ** a1.group_dim
                assert terms == _brute_expansion(fpc)

    @pytest.mark.parametrize("p", [2, 3])
    def test_factored_matches_expanded(self, a1, p):
        rng = random.Random(p)
        for y, w in fixed_points(a1):
            fpc = localized_class(a1, Weight.of(1), p, y, w)
            terms = expand_class(fpc)
            for _ in range(20):
                assignment = _make_assignment(rng, a1.rank)
                assert evaluate_class(fpc, assignment) == evaluate_expansion(terms, assignment)

    def test_trivial_assignment_counts_terms(self, a2):
        fpc = localized_class(a2, Weight.of(1, 0), 2, 1, 2)
        assert evaluate_class(fpc, CharacterAssignment.trivial(2)) == 2 ** 8

    def test_expansion_limit(self, a2):
        fpc = localized_class(a2, Weight.of(0, 0), 3, 0, 0)
        with pytest.raises(ExpansionTooLarge):
            expand_class(fpc, limit=1000)

    def test_expansion_limit_from_environment(self, a1, monkeypatch):
        monkeypatch.setenv("WF_EXPAND_LIMIT", "7")
        with pytest.raises(ExpansionTooLarge):
            expand_class(localized_class(a1, Weight.of(0), 2, 0, 0))

    def test_truncated_geometric(self):
        assert truncated_geometric(Fraction(1), 5) == 5
        assert truncated_geometric(Fraction(2), 3) == 7
        assert truncated_geometric(Fraction(-1, 2), 2) == Fraction(1, 2)

    def test_zero_character_value(self):
        with pytest.raises(ValueError):
            CharacterAssignment((Fraction(0),), (Fraction(1),))

    def test_parse_point(self, a2):
        assert parse_point("2,5", a2) == (2, 5)
        for text in ("2", "a,b", "0,6", "-1,0"):
            with pytest.raises(WeightParseError):
                parse_point(text, a2)
