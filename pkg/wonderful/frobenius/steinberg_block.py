"""
The line bundle carried by the Steinberg block of Fr_* O_X(λ).

The (p-1)ρ block of Fr_* O_X(λ) is St ⊗ St ⊗ O_X(μ), where μ is the
⪰-maximum of the weights with λ - pμ >= (p-1)ρ in the root order.
"""
from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction

from ..config import WonderfulConfig
from ..errors import InvalidPrime, TheoremViolation
from ..lie.root_system import RootSystemData, Weight, require_good_prime, root_coords
from ..lie.weight_order import root_order_geq, succeq

logger = logging.getLogger(__name__)


def _lattice_exponent(rs: RootSystemData) -> int:
    """Exponent of the weight lattice modulo the root lattice."""
    return math.lcm(*(x.denominator for row in rs.cartan_inverse for x in row))


def _corner(rs: RootSystemData, lam: Weight, p: int) -> tuple[Fraction, ...]:
    """α-coordinates of the candidate lying above every other candidate."""
    u = lam - rs.rho * (p - 1)
    exponent = _lattice_exponent(rs)
    if math.gcd(p, exponent) != 1:
        raise InvalidPrime(
            f"p = {p} shares a factor with |Λ/R| = {exponent}; pμ ≡ λ - (p-1)ρ has no solution"
        )
    inverse = pow(p, -1, exponent) if exponent > 1 else 0
    base = root_coords(rs, u * inverse)
    ceiling = [c / p for c in root_coords(rs, u)]
    return tuple(b + math.floor(t - b) for b, t in zip(base, ceiling))


def _weight_from_alpha(rs: RootSystemData, alpha) -> Weight:
    coords = []
    for i in range(rs.rank):
        value = sum((rs.cartan[i][j] * alpha[j] for j in range(rs.rank)), Fraction(0))
        if value.denominator != 1:
            raise TheoremViolation(f"α-coordinates {alpha} do not define an integral weight")
        coords.append(int(value))
    return Weight(tuple(coords))


def steinberg_candidates(rs: RootSystemData, lam: Weight, p: int, window: int | None = None) -> list[Weight]:
    """Candidates μ whose α-coordinates sit at most ``window`` below the corner."""
    require_good_prime(rs, p)
    if window is None:
        window = WonderfulConfig.from_env().candidate_window
    corner = _corner(rs, lam, p)
    floor = rs.rho * (p - 1)
    found = []
    for depth in itertools.product(range(window + 1), repeat=rs.rank):
        mu = _weight_from_alpha(rs, tuple(c - d for c, d in zip(corner, depth)))
        if root_order_geq(rs, lam - mu * p, floor):
            found.append(mu)
    return sorted(found)


def steinberg_block_weight(rs: RootSystemData, lam: Weight, p: int) -> Weight:
    candidates = steinberg_candidates(rs, lam, p)
    if not candidates:
        raise TheoremViolation(f"No μ with λ - pμ >= (p-1)ρ for λ = {lam}, p = {p}")
    maxima = [mu for mu in candidates if all(succeq(rs, mu, nu) for nu in candidates)]
    if len(maxima) != 1:
        raise TheoremViolation(
            f"Expected a unique ⪰-maximum among {len(candidates)} candidates for λ = {lam}, "
            f"found {len(maxima)}"
        )
    logger.debug(f"Steinberg block of Fr_* O({lam}) in {rs.type_tag} at p={p}: O({maxima[0]})")
    return maxima[0]
