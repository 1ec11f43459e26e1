"""
Torus-equivariant K-classes of Fr^* Fr_* O_X(λ) at the fixed points of X.

The fixed points of the T×T action on X are the pairs (y, w) ∈ W × W. At each
of them the class is a base character times one truncated geometric series
1 + χ + ... + χ^{p-1} per tangent character χ, so it has p^{dim G} terms.
Classes stay factored; expansion is gated by a term limit.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ..config import WonderfulConfig
from ..errors import ExpansionTooLarge, WeightParseError
from ..lie.root_system import RootSystemData, Weight, weyl_apply

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CharacterPair:
    """The one-dimensional T×T-module of weight (left, right)."""
    left: Weight
    right: Weight

    def __add__(self, other: CharacterPair) -> CharacterPair:
        return CharacterPair(self.left + other.left, self.right + other.right)

    def __mul__(self, k: int) -> CharacterPair:
        return CharacterPair(self.left * k, self.right * k)

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {"left": str(self.left), "right": str(self.right)}


@dataclass(frozen=True)
class FixedPointClass:
    base: CharacterPair
    tangent: tuple[CharacterPair, ...]
    p: int

    @property
    def term_count(self) -> int:
        return self.p ** len(self.tangent)

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "tangent": [chi.to_dict() for chi in self.tangent],
            "p": self.p,
            "terms": str(self.term_count),
        }


@dataclass(frozen=True)
class CharacterAssignment:
    """Values t_i of ω_i on the left torus and s_i on the right torus."""
    t: tuple[Fraction, ...]
    s: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not x for x in self.t + self.s):
            raise ValueError("Character values must be nonzero")

    @classmethod
    def trivial(cls, rank: int) -> CharacterAssignment:
        return cls((Fraction(1),) * rank, (Fraction(1),) * rank)

    def value(self, chi: CharacterPair) -> Fraction:
        result = Fraction(1)
        for x, e in zip(self.t, chi.left.coords):
            result *= x ** e
        for x, e in zip(self.s, chi.right.coords):
            result *= x ** e
        return result


def fixed_points(rs: RootSystemData) -> list[tuple[int, int]]:
    """All (y, w) ∈ W × W as pairs of Weyl indices, lexicographically."""
    order = len(rs.require_weyl())
    return list(itertools.product(range(order), repeat=2))


def tangent_weights_at(rs: RootSystemData, y: int, w: int) -> tuple[CharacterPair, ...]:
    """(yγ, 0) for γ ∈ Φ⁺, then (0, -wγ) for γ ∈ Φ⁺, then (yα_i, -wα_i) for α_i ∈ Δ."""
    zero = Weight.zero(rs.rank)
    left = [CharacterPair(weyl_apply(rs, y, gamma), zero) for gamma in rs.positive_roots]
    right = [CharacterPair(zero, -weyl_apply(rs, w, gamma)) for gamma in rs.positive_roots]
    diagonal = [
        CharacterPair(weyl_apply(rs, y, alpha), -weyl_apply(rs, w, alpha)) for alpha in rs.simple_roots
    ]
    return tuple(left + right + diagonal)


def localized_class(rs: RootSystemData, lam: Weight, p: int, y: int, w: int) -> FixedPointClass:
    base = CharacterPair(-weyl_apply(rs, y, lam), weyl_apply(rs, w, weyl_apply(rs, rs.w0, lam)))
    return FixedPointClass(base=base, tangent=tangent_weights_at(rs, y, w), p=p)


def expand_class(fpc: FixedPointClass, limit: int | None = None) -> Counter[CharacterPair]:
    """All p^{dim G} characters with multiplicity."""
    if limit is None:
        limit = WonderfulConfig.from_env().expand_limit
    if fpc.term_count > limit:
        raise ExpansionTooLarge(
            f"Class has {fpc.term_count} terms, over the limit of {limit}",
            detail=f"p={fpc.p}, {len(fpc.tangent)} tangent characters",
        )
    terms: Counter[CharacterPair] = Counter({fpc.base: 1})
    for chi in fpc.tangent:
        shifted: Counter[CharacterPair] = Counter()
        for pair, count in terms.items():
            for a in range(fpc.p):
                shifted[pair + chi * a] += count
        terms = shifted
    logger.debug(f"Expanded class: {fpc.term_count} terms, {len(terms)} distinct characters")
    return terms


def truncated_geometric(x: Fraction, p: int) -> Fraction:
    """1 + x + ... + x^{p-1}."""
    if x == 1:
        return Fraction(p)
    return (x ** p - 1) / (x - 1)


def evaluate_class(fpc: FixedPointClass, assignment: CharacterAssignment) -> Fraction:
    value = assignment.value(fpc.base)
    for chi in fpc.tangent:
        value *= truncated_geometric(assignment.value(chi), fpc.p)
    return value


def evaluate_expansion(terms: Counter[CharacterPair], assignment: CharacterAssignment) -> Fraction:
    return sum((count * assignment.value(chi) for chi, count in terms.items()), Fraction(0))


def parse_point(text: str, rs: RootSystemData) -> tuple[int, int]:
    """``"y,w"`` as Weyl indices."""
    parts = text.split(",")
    if len(parts) != 2:
        raise WeightParseError(f"Fixed point must be 'y,w', got {text!r}")
    try:
        y, w = (int(part) for part in parts)
    except ValueError:
        raise WeightParseError(f"Fixed point {text!r} must list two integers")
    order = len(rs.require_weyl())
    if not (0 <= y < order and 0 <= w < order):
        raise WeightParseError(f"Weyl indices must lie in [0, {order}), got {text!r}")
    return y, w
