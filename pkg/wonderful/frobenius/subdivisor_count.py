"""
Effective subdivisors of (p-1)K~_X, where K~_X = sum (X_i + D_i + D~_i).

A subdivisor is an exponent vector (c, c~, b) in [0, p-1]^{3l}; its Picard
class is sum (c_i + c~_i) ω_i + sum b_i α_i. S(λ) counts subdivisors in class
λ and bounds the multiplicity of O_X(μ) in Fr_* O_X(λ) from below by
S(λ - pμ) in type A.

The count is a dynamic program over Picard classes. D_i and D~_i have the same
class ω_i and are folded together as one generator whose exponent k can be
reached in min(k, 2(p-1)-k) + 1 ways. Every generator has nonnegative
α-coordinates, so a partial sum is discarded as soon as λ minus it leaves the
α-coordinate hull of the generators still to come.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

import humanize
import psutil

from ..config import WonderfulConfig
from ..errors import ConjecturalForType, StateLimitExceeded
from ..lie.root_system import RootSystemData, Weight, from_root_coords, require_good_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundaryDivisor:
    """Exponents of D_i (c), D~_i (c_tilde) and X_i (b)."""
    c: tuple[int, ...]
    c_tilde: tuple[int, ...]
    b: tuple[int, ...]

    def is_subdivisor(self, p: int) -> bool:
        return all(0 <= x <= p - 1 for x in self.c + self.c_tilde + self.b)

    def to_dict(self) -> dict:
        return {"c": list(self.c), "c_tilde": list(self.c_tilde), "b": list(self.b)}


@dataclass(frozen=True)
class SubdivisorCount:
    count: int
    stable_count: int
    caps_bind: bool

    def to_dict(self) -> dict:
        return {
            "count": str(self.count),
            "stable_count": str(self.stable_count),
            "caps_bind": self.caps_bind,
        }


@dataclass(frozen=True)
class _Generator:
    label: str
    vector: tuple[int, ...]  # omega-coordinates
    alpha: tuple[int, ...]  # scaled alpha-coordinates, all >= 0
    profile: tuple[int, ...]  # profile[k] = ways to take k copies


def picard_class(rs: RootSystemData, divisor: BoundaryDivisor) -> Weight:
    fundamental = Weight(tuple(c + ct for c, ct in zip(divisor.c, divisor.c_tilde)))
    return fundamental + from_root_coords(rs, divisor.b)


def full_divisor(rs: RootSystemData, p: int) -> BoundaryDivisor:
    """(p-1)K~_X itself."""
    top = (p - 1,) * rs.rank
    return BoundaryDivisor(top, top, top)


def complement(rs: RootSystemData, divisor: BoundaryDivisor, p: int) -> BoundaryDivisor:
    """D -> (p-1)K~_X - D."""
    q = p - 1
    return BoundaryDivisor(
        tuple(q - x for x in divisor.c),
        tuple(q - x for x in divisor.c_tilde),
        tuple(q - x for x in divisor.b),
    )


# ─── Dynamic program ────────────────────────────────────────────────────────

def _alpha_scale(rs: RootSystemData) -> tuple[int, tuple[tuple[int, ...], ...]]:
    scale = math.lcm(*(x.denominator for row in rs.cartan_inverse for x in row))
    matrix = tuple(tuple(int(x * scale) for x in row) for row in rs.cartan_inverse)
    return scale, matrix


def _scaled_alpha(matrix, v) -> tuple[int, ...]:
    return tuple(sum(m * x for m, x in zip(row, v)) for row in matrix)


def _generators(rs: RootSystemData, target_alpha: tuple[int, ...], cap: int | None) -> list[_Generator]:
    """X_1..X_l followed by the merged (D_i, D~_i) pairs.

    With ``cap=None`` exponents are limited only by what the target class admits.
    """
    scale, matrix = _alpha_scale(rs)
    gens = []
    for i in range(rs.rank):
        alpha = tuple(scale if j == i else 0 for j in range(rs.rank))
        top = target_alpha[i] // scale if cap is None else cap
        column = tuple(rs.cartan[r][i] for r in range(rs.rank))
        gens.append(_Generator(f"X{i + 1}", column, alpha, (1,) * (max(top, 0) + 1)))
    for i in range(rs.rank):
        unit = tuple(1 if j == i else 0 for j in range(rs.rank))
        alpha = _scaled_alpha(matrix, unit)
        if cap is None:
            top = min(t // a for t, a in zip(target_alpha, alpha) if a > 0)
            profile = tuple(k + 1 for k in range(max(top, 0) + 1))
        else:
            profile = tuple(min(k, 2 * cap - k) + 1 for k in range(2 * cap + 1))
        gens.append(_Generator(f"D{i + 1}", unit, alpha, profile))
    return gens


def _suffix_hulls(gens: list[_Generator], rank: int):
    """For each step, the coordinate-wise hull of what the remaining generators can add."""
    hulls = []
    for idx in range(len(gens)):
        w_lo = [0] * rank
        w_hi = [0] * rank
        a_hi = [0] * rank
        for g in gens[idx + 1:]:
            kmax = len(g.profile) - 1
            for j in range(rank):
                w_lo[j] += min(0, g.vector[j] * kmax)
                w_hi[j] += max(0, g.vector[j] * kmax)
                a_hi[j] += g.alpha[j] * kmax
        hulls.append((w_lo, w_hi, [0] * rank, a_hi))
    return hulls


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _exponent_range(residual, vector, lo, hi, k_lo: int, k_hi: int) -> tuple[int, int]:
    """Exponents k keeping residual - k*vector inside [lo, hi] coordinate-wise."""
    for r, g, low, high in zip(residual, vector, lo, hi):
        if g > 0:
            k_lo = max(k_lo, _ceil_div(r - high, g))
            k_hi = min(k_hi, (r - low) // g)
        elif g < 0:
            k_lo = max(k_lo, _ceil_div(r - low, g))
            k_hi = min(k_hi, (r - high) // g)
        elif not low <= r <= high:
            return 1, 0
    return k_lo, k_hi


def _count(rs: RootSystemData, lam: Weight, cap: int | None) -> int:
    scale, matrix = _alpha_scale(rs)
    target_alpha = _scaled_alpha(matrix, lam.coords)
    if any(t < 0 for t in target_alpha):
        return 0

    limit = WonderfulConfig.from_env().dp_state_limit
    gens = _generators(rs, target_alpha, cap)
    hulls = _suffix_hulls(gens, rs.rank)
    target = lam.coords
    states: dict[tuple[int, ...], int] = {(0,) * rs.rank: 1}

    for g, (w_lo, w_hi, a_lo, a_hi) in zip(gens, hulls):
        folded: dict[tuple[int, ...], int] = defaultdict(int)
        for state, count in states.items():
            residual = tuple(t - s for t, s in zip(target, state))
            residual_alpha = _scaled_alpha(matrix, residual)
            k_lo, k_hi = _exponent_range(residual, g.vector, w_lo, w_hi, 0, len(g.profile) - 1)
            k_lo, k_hi = _exponent_range(residual_alpha, g.alpha, a_lo, a_hi, k_lo, k_hi)
            for k in range(k_lo, k_hi + 1):
                ways = g.profile[k]
                if ways:
                    key = tuple(s + k * x for s, x in zip(state, g.vector))
                    folded[key] += count * ways
        states = folded
        if len(states) > limit:
            rss = humanize.naturalsize(psutil.Process().memory_info().rss)
            raise StateLimitExceeded(
                f"Subdivisor DP for {lam} in {rs.type_tag} exceeded {limit} states",
                detail=f"{len(states)} states after folding {g.label}; resident memory {rss}",
            )
        if logger.isEnabledFor(logging.DEBUG):
            rss = humanize.naturalsize(psutil.Process().memory_info().rss)
            logger.debug(f"Folded {g.label}: {len(states)} states, rss={rss}")
    return states.get(target, 0)


def count_subdivisors(rs: RootSystemData, lam: Weight, p: int) -> int:
    """Number of effective subdivisors of (p-1)K~_X in class λ."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    total = _count(rs, lam, p - 1)
    logger.info(f"S({lam}) in {rs.type_tag} at p={p}: {total}")
    return total


def stable_subdivisor_count(rs: RootSystemData, lam: Weight) -> int:
    """The count once p is large enough that no exponent cap binds."""
    return _count(rs, lam, None)


def subdivisor_report(rs: RootSystemData, lam: Weight, p: int) -> SubdivisorCount:
    count = count_subdivisors(rs, lam, p)
    stable = stable_subdivisor_count(rs, lam)
    if count != stable:
        logger.warning(f"Exponent caps bind for {lam} in {rs.type_tag} at p={p}: {count} < {stable}")
    return SubdivisorCount(count=count, stable_count=stable, caps_bind=count != stable)


def enumerate_subdivisors(rs: RootSystemData, lam: Weight, p: int) -> Iterator[BoundaryDivisor]:
    """Explicit listing, intended for small classes."""
    q = p - 1
    for b in itertools.product(range(p), repeat=rs.rank):
        a = lam - from_root_coords(rs, b)
        if any(x < 0 or x > 2 * q for x in a):
            continue
        splits = [range(max(0, x - q), min(q, x) + 1) for x in a]
        for c in itertools.product(*splits):
            yield BoundaryDivisor(tuple(c), tuple(x - y for x, y in zip(a, c)), tuple(b))


def multiplicity_lower_bound(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> int:
    """m(μ, λ) >= S(λ - pμ), proven for PSL_n."""
    if rs.family != "A":
        raise ConjecturalForType(
            f"The subdivisor lower bound is conjectural for {rs.type_tag}; it is proven in type A only"
        )
    require_good_prime(rs, p)
    return count_subdivisors(rs, lam - mu * p, p)


# ─── Projective space ───────────────────────────────────────────────────────

def _binomial(a: int, b: int) -> int:
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def thomsen_multiplicity(m: int, d: int, e: int, p: int) -> int:
    """Multiplicity of O(e) in Fr_* O(d) on P^m."""
    if m < 1 or p < 2:
        raise ValueError(f"Need m >= 1 and p >= 2, got m={m}, p={p}")
    return sum(
        (-1) ** i * math.comb(m + 1, i) * _binomial(d - p * e + m - i * p, m)
        for i in range(m + 2)
    )


def thomsen_decomposition(m: int, d: int, p: int) -> dict[int, int]:
    """All e with m(e) > 0; e runs over ceil((d - (m+1)(p-1))/p) <= e <= floor(d/p)."""
    low = _ceil_div(d - (m + 1) * (p - 1), p)
    high = d // p
    decomposition = {}
    for e in range(low, high + 1):
        value = thomsen_multiplicity(m, d, e, p)
        if value:
            decomposition[e] = value
    return decomposition
