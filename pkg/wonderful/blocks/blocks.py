"""
Linkage classes, alcoves and the ranks of the subbundles of Fr_* L.

Fr_* L splits along the blocks of the restricted enveloping algebra. The block
of λ ∈ Λ_p is indexed by its dot-orbit in Λ/pΛ, has a_λ = |orbit| simple
modules, and contributes subbundles of rank a_λ · d_λ · d_μ for μ ~ λ, where
d_λ depends only on the alcove of λ.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from ..errors import InvalidPrime, NotRestricted, UnsupportedRootSystem
from ..lie.root_system import (
    RootSystemData,
    Weight,
    coroot_height,
    dot_action,
    pairing,
    require_prime,
)
from .config import ALCOVE_COUNTS, D_TABLES, PUBLISHED_RANK_SETS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlcoveSignature:
    """m[k] is the integer with (m-1)p < <λ+ρ, β_k∨> <= m p."""
    m: tuple[int, ...]

    @property
    def separation(self) -> int:
        return separation_count(self)

    def to_dict(self) -> dict:
        return {"m": list(self.m), "separation": self.separation}


@dataclass(frozen=True)
class LinkageClass:
    representative: Weight
    orbit: frozenset[Weight]

    @property
    def a_lambda(self) -> int:
        return len(self.orbit)

    def to_dict(self) -> dict:
        return {
            "rep": str(self.representative),
            "a": self.a_lambda,
            "orbit": [str(w) for w in sorted(self.orbit)],
        }


@dataclass(frozen=True)
class RankSetReport:
    type_tag: str
    p: int
    computed: frozenset[int]
    bound: frozenset[int]
    published: frozenset[int] | None
    alcoves_found: int
    alcoves_expected: int | None

    @property
    def missing(self) -> list[int]:
        """Published ranks not realised at this p."""
        return sorted(self.published - self.computed) if self.published is not None else []

    @property
    def unexpected(self) -> list[int]:
        return sorted(self.computed - self.published) if self.published is not None else []

    def to_dict(self) -> dict:
        return {
            "type": self.type_tag,
            "p": self.p,
            "rank_set": sorted(self.computed),
            "bound_set": sorted(self.bound),
            "published": sorted(self.published) if self.published is not None else None,
            "missing": self.missing,
            "unexpected": self.unexpected,
            "alcoves": {"found": self.alcoves_found, "expected": self.alcoves_expected},
        }


# ─── Restricted weights and linkage ─────────────────────────────────────────

def restricted_weights(rs: RootSystemData, p: int) -> Iterator[Weight]:
    """Λ_p: all λ with 0 <= <λ, α_i∨> < p."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    for coords in itertools.product(range(p), repeat=rs.rank):
        yield Weight(coords)


def reduce_mod_p(weight: Weight, p: int) -> Weight:
    return Weight(tuple(c % p for c in weight.coords))


def require_restricted(weight: Weight, p: int) -> Weight:
    if any(c < 0 or c >= p for c in weight.coords):
        raise NotRestricted(f"{weight} is not in Λ_{p}")
    return weight


@lru_cache(maxsize=8192)
def linkage_class(rs: RootSystemData, lam: Weight, p: int) -> LinkageClass:
    """Dot-orbit of λ in Λ/pΛ, each element taken back to its Λ_p representative."""
    lam = reduce_mod_p(lam, p)
    orbit = frozenset(
        reduce_mod_p(dot_action(rs, w, lam), p) for w in range(len(rs.require_weyl()))
    )
    return LinkageClass(representative=min(orbit), orbit=orbit)


def a_lambda(rs: RootSystemData, lam: Weight, p: int) -> int:
    return linkage_class(rs, lam, p).a_lambda


def linkage_classes(rs: RootSystemData, p: int) -> list[LinkageClass]:
    """Partition of Λ_p into linkage classes, ordered by representative."""
    seen: set[Weight] = set()
    classes = []
    for lam in restricted_weights(rs, p):
        if lam in seen:
            continue
        cls = linkage_class(rs, lam, p)
        seen.update(cls.orbit)
        classes.append(cls)
    logger.info(f"{rs.type_tag} at p={p}: {len(classes)} linkage classes over {p ** rs.rank} weights")
    return sorted(classes, key=lambda c: c.representative)


# ─── PSL_n by type ──────────────────────────────────────────────────────────

def psln_entries(n: int, lam: Weight, p: int) -> tuple[int, ...]:
    """ε-coordinates of λ+ρ mod p for PSL_n: (Σ_{j>=k} c_j + n - k) for k = 1..n."""
    if len(lam) != n - 1:
        raise ValueError(f"PSL_{n} weights have {n - 1} entries, got {lam}")
    c = lam.coords
    return tuple((sum(c[k:]) + (n - 1 - k)) % p for k in range(n))


def psln_type(n: int, lam: Weight, p: int) -> tuple[int, ...]:
    """Multiplicities of the distinct entries, largest first."""
    if n % p == 0:
        raise InvalidPrime(f"p = {p} divides n = {n}; the type formula needs p ∤ n")
    counts = Counter(psln_entries(n, lam, p))
    return tuple(sorted(counts.values(), reverse=True))


def a_from_type(type_vector: tuple[int, ...]) -> int:
    """n! / (n_1! ... n_k!)."""
    value = math.factorial(sum(type_vector))
    for part in type_vector:
        value //= math.factorial(part)
    return value


def block_dimension(rs: RootSystemData, lam: Weight, p: int) -> int:
    """a_λ · p^{2|Φ⁺|}."""
    return a_lambda(rs, lam, p) * p ** (2 * rs.num_pos_roots)


# ─── Alcoves and decomposition numbers ──────────────────────────────────────

def alcove_signature(rs: RootSystemData, lam: Weight, p: int) -> AlcoveSignature:
    """Walls <λ+ρ, α∨> = mp belong to the lower alcove."""
    shifted = lam + rs.rho
    return AlcoveSignature(tuple(
        -((-pairing(rs, shifted, k)) // p) for k in range(rs.num_pos_roots)
    ))


def separation_count(signature: AlcoveSignature) -> int:
    return sum(m - 1 for m in signature.m)


def alcove_census(rs: RootSystemData, p: int) -> list[dict]:
    """Distinct signatures over Λ_p with their separations and populations."""
    census = Counter(alcove_signature(rs, lam, p) for lam in restricted_weights(rs, p))
    rows = [
        {"m": list(sig.m), "separation": sig.separation, "population": count}
        for sig, count in census.items()
    ]
    return sorted(rows, key=lambda row: (row["separation"], row["m"]))


def max_separation(rs: RootSystemData) -> int:
    return sum(coroot_height(rs, k) - 1 for k in range(rs.num_pos_roots))


def require_table_prime(rs: RootSystemData, p: int) -> int:
    """The alcove tables are used for p >= h-1 with p ∤ h."""
    require_prime(p)
    h = rs.coxeter_number
    if p < h - 1 or h % p == 0:
        raise InvalidPrime(f"d_λ tables for {rs.type_tag} need p >= {h - 1} and p ∤ {h}, got p = {p}")
    return p


def d_lambda(rs: RootSystemData, lam: Weight, p: int) -> int:
    table = D_TABLES.get(rs.type_tag)
    if table is None:
        raise UnsupportedRootSystem(f"No decomposition-number table for {rs.type_tag}")
    require_table_prime(rs, p)
    require_restricted(lam, p)
    separation = alcove_signature(rs, lam, p).separation
    if separation >= len(table):
        raise AssertionError(f"Separation {separation} of {lam} exceeds the {rs.type_tag} table")
    return table[separation]


# ─── Ranks ──────────────────────────────────────────────────────────────────

def rank_of_summand(rs: RootSystemData, lam: Weight, mu: Weight, p: int) -> int:
    """a_λ · d_λ · d_μ when μ ~ λ, else 0."""
    require_restricted(lam, p)
    require_restricted(mu, p)
    cls = linkage_class(rs, lam, p)
    if mu not in cls.orbit:
        return 0
    return cls.a_lambda * d_lambda(rs, lam, p) * d_lambda(rs, mu, p)


def steinberg_block_multiplicity(rs: RootSystemData, p: int) -> int:
    """Rank of the (p-1)ρ block subbundle; always 1."""
    top = rs.rho * (p - 1)
    return rank_of_summand(rs, top, top, p)


def class_ranks(rs: RootSystemData, cls: LinkageClass, p: int) -> set[int]:
    ds = {d_lambda(rs, lam, p) for lam in cls.orbit}
    return {cls.a_lambda * d * e for d in ds for e in ds}


def rank_set(rs: RootSystemData, p: int) -> set[int]:
    """Nonzero ranks realised over all pairs μ ~ λ in Λ_p."""
    require_table_prime(rs, p)
    ranks: set[int] = set()
    for cls in linkage_classes(rs, p):
        ranks |= class_ranks(rs, cls, p)
    return ranks


def rank_bound_set(rs: RootSystemData, p: int) -> set[int]:
    """{a · d · d'} over realised class sizes a and all table values d, d'."""
    require_table_prime(rs, p)
    table = set(D_TABLES[rs.type_tag])
    sizes = {cls.a_lambda for cls in linkage_classes(rs, p)}
    return {a * d * e for a in sizes for d in table for e in table}


def rank_set_report(rs: RootSystemData, p: int) -> RankSetReport:
    computed = frozenset(rank_set(rs, p))
    published = PUBLISHED_RANK_SETS.get(rs.type_tag)
    report = RankSetReport(
        type_tag=rs.type_tag,
        p=p,
        computed=computed,
        bound=frozenset(rank_bound_set(rs, p)),
        published=published,
        alcoves_found=len(alcove_census(rs, p)),
        alcoves_expected=ALCOVE_COUNTS.get(rs.type_tag),
    )
    if report.missing:
        logger.warning(
            f"{rs.type_tag} at p={p}: published ranks not realised: {report.missing} "
            f"({report.alcoves_found} of {report.alcoves_expected} alcoves populated)"
        )
    if report.unexpected:
        logger.error(f"{rs.type_tag} at p={p}: ranks outside the published set: {report.unexpected}")
    return report
