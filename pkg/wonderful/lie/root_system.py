"""
Exact root-system and Weyl-group arithmetic in fundamental-weight coordinates.

Convention: ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so the omega-coordinates
of the simple root alpha_j are column j of the Cartan matrix.
"""
from __future__ import annotations

import logging
import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
import sympy as sp

from ..config import SUPPORTED_TYPES, WEYL_ORDERS, WonderfulConfig
from ..errors import (
    InvalidPrime,
    UnsupportedRootSystem,
    WeightParseError,
    WeylEnumerationUnavailable,
)

logger = logging.getLogger(__name__)

_TYPE_PATTERN = re.compile(r"^\s*([ABG])\s*(\d+)?\s*$", re.IGNORECASE)


@dataclass(frozen=True, order=True)
class Weight:
    """Integer vector in the basis omega_1, ..., omega_l."""
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def of(cls, *coords: int) -> Weight:
        return cls(tuple(coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return format_weight(self)


def format_weight(weight: Weight) -> str:
    return ",".join(str(c) for c in weight.coords)


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse a comma-separated integer vector such as ``"6,6"`` or ``"-2,0,-2"``."""
    parts = [part.strip() for part in text.split(",")]
    if not parts or any(part == "" for part in parts):
        raise WeightParseError(f"Malformed weight {text!r}")
    try:
        coords = tuple(int(part) for part in parts)
    except ValueError:
        raise WeightParseError(
            f"Weight {text!r} must list integers in fundamental-weight coordinates"
        )
    if rank is not None and len(coords) != rank:
        raise WeightParseError(f"Weight {text!r} has {len(coords)} entries, rank is {rank}")
    return Weight(coords)


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """Immutable descriptor of a root system together with its Weyl group."""
    type_tag: str
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Weight, ...]
    positive_roots_alpha: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    rho: Weight
    coxeter_number: int
    weyl_order: int
    w0: np.ndarray
    weyl_elements: tuple[np.ndarray, ...] | None = None
    _weyl_index: dict[bytes, int] = field(default_factory=dict, repr=False)

    @property
    def num_pos_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def group_dim(self) -> int:
        return self.rank + 2 * self.num_pos_roots

    @property
    def weyl_available(self) -> bool:
        return self.weyl_elements is not None

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self.positive_roots[:self.rank]

    def require_weyl(self) -> tuple[np.ndarray, ...]:
        if self.weyl_elements is None:
            raise WeylEnumerationUnavailable(
                f"Weyl group of {self.type_tag} has order {self.weyl_order}; "
                f"enumeration is disabled past the configured rank"
            )
        return self.weyl_elements

    def weyl_index(self, matrix: np.ndarray) -> int:
        return self._weyl_index[np.ascontiguousarray(matrix, dtype=np.int64).tobytes()]

    def __repr__(self) -> str:
        return f"RootSystemData({self.type_tag})"


# ─── Construction ───────────────────────────────────────────────────────────

def parse_type_tag(text: str) -> tuple[str, int]:
    """Split ``"A3"``, ``"B2"``, ``"G2"`` into (family, rank)."""
    match = _TYPE_PATTERN.match(text)
    if not match or match.group(2) is None:
        raise UnsupportedRootSystem(f"Unknown root system {text!r}")
    letter, n = match.group(1).upper(), int(match.group(2))
    if letter == "A":
        return "A", n
    tag = f"{letter}{n}"
    if tag not in SUPPORTED_TYPES:
        raise UnsupportedRootSystem(f"Root system {tag} is not supported (A_n, B2, G2 only)")
    return tag, 2


def weyl_order_formula(family: str, n: int) -> int:
    if family == "A":
        return math.factorial(n + 1)
    return WEYL_ORDERS[family]


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    if family == "A":
        return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    if family == "B2":
        # alpha_1 long, alpha_2 short
        return [[2, -1], [-2, 2]]
    if family == "G2":
        # alpha_1 long, alpha_2 short
        return [[2, -1], [-3, 2]]
    raise UnsupportedRootSystem(f"Root system {family} is not supported")


def _coxeter_number(family: str, n: int) -> int:
    return {"A": n + 1, "B2": 4, "G2": 6}[family]


def _symmetrize(cartan: list[list[int]]) -> tuple[int, ...]:
    """Integers d_i with d_i A_ij = d_j A_ji; (alpha_i, alpha_i) = 2 d_i."""
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    for start in range(rank):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(rank):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    queue.append(j)
    scale = math.lcm(*(f.denominator for f in d))
    return tuple(int(f * scale) for f in d)


def _inner(cartan, sym, beta: Sequence[int], gamma: Sequence[int]) -> int:
    rank = len(cartan)
    return sum(beta[i] * gamma[j] * sym[i] * cartan[i][j] for i in range(rank) for j in range(rank))


def _positive_roots_alpha(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Closure of the simple roots under simple reflections, kept positive."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(rank):
            c = sum(cartan[i][j] * beta[j] for j in range(rank))
            gamma = tuple(beta[j] - (c if j == i else 0) for j in range(rank))
            if gamma != beta and all(x >= 0 for x in gamma) and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    return sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))


def _reflection_matrices(cartan: list[list[int]]) -> list[np.ndarray]:
    rank = len(cartan)
    a = np.array(cartan, dtype=np.int64)
    mats = []
    for i in range(rank):
        s = np.eye(rank, dtype=np.int64)
        s[:, i] -= a[:, i]
        mats.append(s)
    return mats


def _enumerate_weyl(cartan: list[list[int]]) -> list[np.ndarray]:
    """Breadth-first closure of the simple reflections; identity comes first."""
    rank = len(cartan)
    gens = _reflection_matrices(cartan)
    identity = np.eye(rank, dtype=np.int64)
    elements = [identity]
    seen = {identity.tobytes()}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s @ g
            key = h.tobytes()
            if key not in seen:
                seen.add(key)
                elements.append(h)
                queue.append(h)
    return elements


def _longest_element_type_a(n: int) -> np.ndarray:
    # w0(omega_i) = -omega_{n+1-i}
    w0 = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        w0[n - 1 - i, i] = -1
    return w0


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix = np.ascontiguousarray(matrix, dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=None)
def _build(family: str, n: int, weyl_rank_limit: int) -> RootSystemData:
    cartan = _cartan_matrix(family, n)
    rank = len(cartan)
    inverse = sp.Matrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(sp.numer(inverse[i, j])), int(sp.denom(inverse[i, j]))) for j in range(rank))
        for i in range(rank)
    )
    sym = _symmetrize(cartan)

    roots_alpha = _positive_roots_alpha(cartan)
    roots = []
    coroots = []
    for beta in roots_alpha:
        roots.append(Weight(tuple(sum(cartan[i][j] * beta[j] for j in range(rank)) for i in range(rank))))
        norm = _inner(cartan, sym, beta, beta)
        coefficients = []
        for i in range(rank):
            k = Fraction(beta[i] * 2 * sym[i], norm)
            if k.denominator != 1:
                raise UnsupportedRootSystem(f"Non-integral coroot for root {beta} in {family}{n}")
            coefficients.append(int(k))
        coroots.append(tuple(coefficients))

    tag = f"A{n}" if family == "A" else family
    weyl_order = weyl_order_formula(family, n)
    rho = Weight((1,) * rank)

    weyl_elements = None
    index: dict[bytes, int] = {}
    if family != "A" or n <= weyl_rank_limit:
        elements = [_frozen(m) for m in _enumerate_weyl(cartan)]
        if len(elements) != weyl_order:
            raise UnsupportedRootSystem(
                f"Weyl group closure for {tag} produced {len(elements)} elements, expected {weyl_order}"
            )
        rho_vec = np.array(rho.coords, dtype=np.int64)
        w0 = next(m for m in elements if np.array_equal(m @ rho_vec, -rho_vec))
        weyl_elements = tuple(elements)
        index = {m.tobytes(): k for k, m in enumerate(elements)}
        logger.info(f"Enumerated Weyl group of {tag}: {len(elements)} elements")
    else:
        w0 = _frozen(_longest_element_type_a(n))
        logger.info(f"Weyl enumeration disabled for {tag} (order {weyl_order})")

    return RootSystemData(
        type_tag=tag,
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        cartan_inverse=cartan_inverse,
        symmetrizer=sym,
        positive_roots=tuple(roots),
        positive_roots_alpha=tuple(roots_alpha),
        coroots=tuple(coroots),
        rho=rho,
        coxeter_number=_coxeter_number(family, n),
        weyl_order=weyl_order,
        w0=w0,
        weyl_elements=weyl_elements,
        _weyl_index=index,
    )


def build_root_system(type_tag: str, n: int | None = None) -> RootSystemData:
    """Build (or fetch the cached) root system for ``"A"``/``"An"``, ``"B2"`` or ``"G2"``."""
    tag = type_tag.strip().upper()
    if tag == "A":
        if n is None or n < 1:
            raise UnsupportedRootSystem("Type A needs an explicit rank n >= 1")
        family, rank = "A", n
    else:
        family, rank = parse_type_tag(tag)
        if family == "A" and rank < 1:
            raise UnsupportedRootSystem("Type A needs rank n >= 1")
        if n is not None and n != rank:
            raise UnsupportedRootSystem(f"Rank {n} conflicts with tag {type_tag!r}")
    limit = WonderfulConfig.from_env().weyl_rank_limit
    return _build(family, rank, limit)


# ─── Pairings and coordinates ───────────────────────────────────────────────

def pairing(rs: RootSystemData, weight: Weight, k: int) -> int:
    """<weight, beta_k^vee> for the k-th positive root."""
    return sum(c * x for c, x in zip(rs.coroots[k], weight.coords))


def coroot_height(rs: RootSystemData, k: int) -> int:
    return sum(rs.coroots[k])


def highest_coroot_index(rs: RootSystemData) -> int:
    return max(range(rs.num_pos_roots), key=lambda k: (coroot_height(rs, k), -k))


def simple_root(rs: RootSystemData, i: int) -> Weight:
    return rs.positive_roots[i]


def root_coords(rs: RootSystemData, weight: Weight) -> tuple[Fraction, ...]:
    """Coefficients of ``weight`` in the basis of simple roots."""
    return tuple(
        sum((row[j] * weight.coords[j] for j in range(rs.rank)), Fraction(0))
        for row in rs.cartan_inverse
    )


def phi(rs: RootSystemData, weight: Weight) -> Fraction:
    return sum(root_coords(rs, weight), Fraction(0))


def from_root_coords(rs: RootSystemData, coefficients: Sequence[int]) -> Weight:
    return Weight(tuple(
        sum(rs.cartan[i][j] * coefficients[j] for j in range(rs.rank)) for i in range(rs.rank)
    ))


# ─── Weyl group ─────────────────────────────────────────────────────────────

def _as_matrix(rs: RootSystemData, w) -> np.ndarray:
    if isinstance(w, (int, np.integer)):
        return rs.require_weyl()[int(w)]
    return w


def weyl_apply(rs: RootSystemData, w, weight: Weight) -> Weight:
    """Linear action of a Weyl element (index or matrix) on omega-coordinates."""
    matrix = _as_matrix(rs, w)
    return Weight(tuple(int(x) for x in matrix @ np.array(weight.coords, dtype=np.int64)))


def dot_action(rs: RootSystemData, w, weight: Weight) -> Weight:
    """w . lambda = w(lambda + rho) - rho."""
    return weyl_apply(rs, w, weight + rs.rho) - rs.rho


def identity_index(rs: RootSystemData) -> int:
    rs.require_weyl()
    return 0


def compose(rs: RootSystemData, w1: int, w2: int) -> int:
    elements = rs.require_weyl()
    return rs.weyl_index(elements[w1] @ elements[w2])


def inversion_count(rs: RootSystemData, w) -> int:
    """Number of positive roots sent to negative roots."""
    count = 0
    for root in rs.positive_roots:
        image = weyl_apply(rs, w, root)
        if any(c < 0 for c in root_coords(rs, image)):
            count += 1
    return count


def stabilizer_order(rs: RootSystemData, weight: Weight, modulus: int | None = None) -> int:
    """Number of w with w(weight) = weight, optionally modulo ``modulus`` times the weight lattice."""
    total = 0
    for w in rs.require_weyl():
        image = weyl_apply(rs, w, weight)
        diff = image - weight
        if modulus is None:
            total += diff.is_zero()
        else:
            total += all(c % modulus == 0 for c in diff.coords)
    return total


# ─── Primes ─────────────────────────────────────────────────────────────────

def require_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not sp.isprime(p):
        raise InvalidPrime(f"p = {p} is not a prime")
    return p


def require_good_prime(rs: RootSystemData, p: int) -> int:
    """Reject non-primes and primes dividing the Coxeter number."""
    require_prime(p)
    if rs.coxeter_number % p == 0:
        raise InvalidPrime(
            f"p = {p} divides the Coxeter number h = {rs.coxeter_number} of {rs.type_tag}"
        )
    return p
