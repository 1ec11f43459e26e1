"""
Direct-summand conditions for line bundles inside Fr_* O_X(λ).

O_X(μ) can only split off when both Hom spaces are nonzero, which happens
exactly when (1-p)K_X ⪰ λ - pμ ⪰ 0. It does split off when λ - pμ is a sum
of fundamental weights with coefficients in [0, 2(p-1)] and simple roots with
coefficients in [0, p-1].
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

from ..lie.feasibility import find_box_solution
from ..lie.rep_dims import filtration_dimension
from ..lie.root_system import (
    RootSystemData,
    Weight,
    from_root_coords,
    phi,
    require_good_prime,
    root_coords,
)
from ..lie.weight_order import canonical_class, is_succeq_zero
from .config import PSL3_BOX_SCALE, ExactCase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SummandVerdict:
    necessary: bool
    sufficient: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def to_dict(self) -> dict:
        data = {"necessary": self.necessary, "sufficient": self.sufficient}
        if self.witness is not None:
            a, b = self.witness
            data["witness"] = {"a": list(a), "b": list(b)}
        return data


def split_target(rs: RootSystemData, p: int) -> Weight:
    """(1-p)K_X, the class of the splitting divisor."""
    return canonical_class(rs) * (1 - p)


def hom_into_nonzero(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> bool:
    """Hom(O_X(μ), Fr_* O_X(λ)) != 0."""
    require_good_prime(rs, p)
    return is_succeq_zero(rs, lam - mu * p)


def hom_from_nonzero(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> bool:
    """Hom(Fr_* O_X(λ), O_X(μ)) != 0."""
    require_good_prime(rs, p)
    return is_succeq_zero(rs, split_target(rs, p) - (lam - mu * p))


def lattice_point_witness(rs: RootSystemData, v: Weight, p: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """(a, b) with v = sum a_i ω_i + sum b_i α_i, 0 <= a_i <= 2(p-1), 0 <= b_i <= p-1."""
    coefficients = root_coords(rs, v)
    if any(c < 0 for c in coefficients):
        return None
    q = p - 1
    b = find_box_solution(
        rs.cartan,
        v.coords,
        lower=[0] * rs.rank,
        upper=[2 * q] * rs.rank,
        b_lo=[0] * rs.rank,
        b_hi=[min(q, math.floor(c)) for c in coefficients],
        budget=math.floor(phi(rs, v)),
    )
    if b is None:
        return None
    a = v - from_root_coords(rs, b)
    return a.coords, b


def check_summand(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> SummandVerdict:
    require_good_prime(rs, p)
    necessary = hom_into_nonzero(rs, lam, mu, p) and hom_from_nonzero(rs, lam, mu, p)
    witness = lattice_point_witness(rs, lam - mu * p, p) if necessary else None
    return SummandVerdict(necessary=necessary, sufficient=witness is not None, witness=witness)


def candidate_mu_box(rs: RootSystemData, lam: Weight, p: int) -> list[range]:
    """Per-coordinate μ ranges covering every v = λ - pμ with α-coordinates in [0, α((1-p)K_X)]."""
    top = root_coords(rs, split_target(rs, p))
    ranges = []
    for i in range(rs.rank):
        v_min = sum(min(0, rs.cartan[i][j] * top[j]) for j in range(rs.rank))
        v_max = sum(max(0, rs.cartan[i][j] * top[j]) for j in range(rs.rank))
        low = math.ceil((lam[i] - v_max) / p)
        high = math.floor((lam[i] - v_min) / p)
        ranges.append(range(low, high + 1))
    return ranges


def enumerate_candidate_mu(rs: RootSystemData, lam: Weight, p: int) -> list[Weight]:
    """Every μ passing the necessary condition, sorted lexicographically."""
    require_good_prime(rs, p)
    top = root_coords(rs, split_target(rs, p))
    found = []
    for coords in itertools.product(*candidate_mu_box(rs, lam, p)):
        mu = Weight(coords)
        v = lam - mu * p
        alpha = root_coords(rs, v)
        if any(c < 0 or c > t for c, t in zip(alpha, top)):
            continue
        if hom_into_nonzero(rs, lam, mu, p) and hom_from_nonzero(rs, lam, mu, p):
            found.append(mu)
    logger.debug(f"{rs.type_tag} p={p} lambda={lam}: {len(found)} candidate mu")
    return sorted(found)


def enumerate_guaranteed_mu(rs: RootSystemData, lam: Weight, p: int) -> list[Weight]:
    return [
        mu for mu in enumerate_candidate_mu(rs, lam, p)
        if lattice_point_witness(rs, lam - mu * p, p) is not None
    ]


def candidate_mu_range_a1(n: int, p: int) -> list[int]:
    """Closed form for PSL2: ceil((4+n)/p - 4) <= k <= floor(n/p)."""
    low = -((4 * p - 4 - n) // p)
    high = n // p
    return list(range(low, high + 1))


# ─── PSL3 region ────────────────────────────────────────────────────────────

def psl3_region_points(p: int) -> list[tuple[int, int]]:
    """Integer points of the closed region cut out by
    x2 <= -x1/2 + 9(p-1)/2, x2 <= -2(x1 - 9(p-1)/2), x2 >= -x1/2, x2 >= -2 x1.
    """
    q = p - 1
    span = PSL3_BOX_SCALE * q
    points = []
    for x1 in range(-span, 2 * span + 1):
        for x2 in range(-span, 2 * span + 1):
            if (2 * x2 <= -x1 + 9 * q and x2 <= -2 * x1 + 9 * q
                    and 2 * x2 >= -x1 and x2 >= -2 * x1):
                points.append((x1, x2))
    return points


def psl3_lattice_point_count(p: int) -> int:
    return len(psl3_region_points(p))


def psl3_pick_formula(p: int) -> int:
    q = p - 1
    return 27 * q * q + 1 + 6 * q


def psl3_count_extremes(p: int) -> list[Weight]:
    """Restricted λ congruent to the acute corners (-3(p-1), 6(p-1)) and (6(p-1), -3(p-1))."""
    q = p - 1
    corners = [(-3 * q, 6 * q), (6 * q, -3 * q)]
    return [Weight((x1 % p, x2 % p)) for x1, x2 in corners]


# ─── Multiplicity bounds ────────────────────────────────────────────────────

def upper_bound_terms(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> tuple[int | None, int, int]:
    """(floor(dim F_λ / dim F_μ) or None when dim F_μ = 0, dim F_{λ-pμ}, dim F_{(1-p)K-(λ-pμ)})."""
    require_good_prime(rs, p)
    v = lam - mu * p
    dim_mu = filtration_dimension(rs, mu)
    ratio = filtration_dimension(rs, lam) // dim_mu if dim_mu else None
    return ratio, filtration_dimension(rs, v), filtration_dimension(rs, split_target(rs, p) - v)


def multiplicity_upper_bound(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> int:
    ratio, into, out = upper_bound_terms(rs, lam, mu, p)
    terms = [into, out] if ratio is None else [ratio, into, out]
    return min(terms)


def exact_multiplicity_case(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> str | None:
    """Name the case in which O_X(μ) occurs exactly once in Fr_* O_X(λ), if any."""
    require_good_prime(rs, p)
    v = lam - mu * p
    if v.is_zero():
        return ExactCase.FROBENIUS_POWER
    if v == split_target(rs, p):
        return ExactCase.CANONICAL_SHIFT
    if rs.rank > 1 and v in rs.simple_roots:
        return ExactCase.SIMPLE_ROOT_SHIFT
    return None
