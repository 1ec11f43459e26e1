"""
Weyl dimensions, the Steinberg dimension and filtration dimensions dim F_{<=λ}.
"""
from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache

from ..errors import NotDominant
from .root_system import RootSystemData, Weight, pairing, root_coords

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def weyl_dimension(rs: RootSystemData, lam: Weight) -> int:
    """prod over positive roots of <λ+ρ, α∨> / <ρ, α∨>."""
    if not lam.is_dominant():
        raise NotDominant(f"Weyl dimension needs a dominant weight, got {lam}")
    shifted = lam + rs.rho
    value = Fraction(1)
    for k in range(rs.num_pos_roots):
        value *= Fraction(pairing(rs, shifted, k), pairing(rs, rs.rho, k))
    if value.denominator != 1:
        raise NotDominant(f"Weyl product for {lam} is not integral: {value}")
    return int(value)


def steinberg_dimension(rs: RootSystemData, p: int) -> int:
    return p ** rs.num_pos_roots


def dominant_weights_below(rs: RootSystemData, lam: Weight) -> list[Weight]:
    """Dominant μ with λ - μ in R⁺, found by descending through simple-root subtractions.

    Every intermediate weight keeps nonnegative α-coordinates, since a dominant
    weight has nonnegative α-coordinates and only simple roots are removed.
    """
    if any(c < 0 for c in root_coords(rs, lam)):
        return []
    found = []
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        if mu.is_dominant():
            found.append(mu)
        for alpha in rs.simple_roots:
            nu = mu - alpha
            if nu in seen:
                continue
            if any(c < 0 for c in root_coords(rs, nu)):
                continue
            seen.add(nu)
            queue.append(nu)
    return sorted(found)


def filtration_dimension(rs: RootSystemData, lam: Weight) -> int:
    """dim F_{<=λ} = sum of dim(μ)^2 over dominant μ <= λ; 0 when none exists."""
    below = dominant_weights_below(rs, lam)
    total = sum(weyl_dimension(rs, mu) ** 2 for mu in below)
    logger.debug(f"dim F_<= {lam} in {rs.type_tag}: {len(below)} dominant weights, total {total}")
    return total
