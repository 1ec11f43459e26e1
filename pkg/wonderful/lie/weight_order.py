"""
The two orders on the weight lattice and the canonical class.

``lambda >= mu`` (root order) when lambda - mu is a nonnegative integer
combination of simple roots. ``lambda ⪰ mu`` when lambda - mu lies in
Λ⁺ + R⁺, i.e. it is a nonnegative integer combination of fundamental weights
and positive roots.
"""
from __future__ import annotations

import logging
import math
from functools import lru_cache

from .feasibility import find_box_solution
from .root_system import RootSystemData, Weight, from_root_coords, phi, root_coords

logger = logging.getLogger(__name__)


def root_order_geq(rs: RootSystemData, lam: Weight, mu: Weight) -> bool:
    coefficients = root_coords(rs, lam - mu)
    return all(c.denominator == 1 and c >= 0 for c in coefficients)


@lru_cache(maxsize=1 << 16)
def succeq_witness(rs: RootSystemData, v: Weight) -> tuple[int, ...] | None:
    """Return b >= 0 with v - sum b_i alpha_i dominant, or None if v is not ⪰ 0.

    Any such b satisfies b_i <= (alpha-coordinate i of v) and sum(b) <= phi(v),
    which bounds the search box.
    """
    coefficients = root_coords(rs, v)
    if any(c < 0 for c in coefficients):
        return None
    b_hi = [math.floor(c) for c in coefficients]
    budget = math.floor(phi(rs, v))
    return find_box_solution(
        rs.cartan,
        v.coords,
        lower=[0] * rs.rank,
        upper=None,
        b_lo=[0] * rs.rank,
        b_hi=b_hi,
        budget=budget,
    )


def is_succeq_zero(rs: RootSystemData, v: Weight) -> bool:
    return succeq_witness(rs, v) is not None


def succeq(rs: RootSystemData, lam: Weight, mu: Weight) -> bool:
    return is_succeq_zero(rs, lam - mu)


def succeq_decomposition(rs: RootSystemData, v: Weight) -> tuple[Weight, tuple[int, ...]] | None:
    """Split v into (dominant part, simple-root exponents) when v ⪰ 0."""
    b = succeq_witness(rs, v)
    if b is None:
        return None
    return v - from_root_coords(rs, b), b


def canonical_class(rs: RootSystemData) -> Weight:
    """K_X = -2 rho - sum of simple roots."""
    total = rs.rho * -2
    for alpha in rs.simple_roots:
        total = total - alpha
    return total
