"""
Truncated graded rings with rational coefficients, Adams operations and the
Chern character of a Frobenius pushforward.

A ring is described by a basis with degrees and integer structure constants;
products past the top degree vanish. Only projective spaces ship built in.
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import sympy as sp

from ..errors import NotInvertible, WonderfulError
from ..frobenius.subdivisor_count import thomsen_decomposition

logger = logging.getLogger(__name__)

_RING_PATTERN = re.compile(r"^\s*P(?:m:)?(\d+)\s*$", re.IGNORECASE)

Scalar = int | Fraction


@dataclass(frozen=True, eq=False)
class GradedRingDescriptor:
    name: str
    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    # (i, j) -> ((k, c), ...): basis_i * basis_j = sum c * basis_k
    products: Mapping[tuple[int, int], tuple[tuple[int, int], ...]] = field(repr=False)
    unit: int = 0
    hyperplane: int | None = None

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def __repr__(self) -> str:
        return f"GradedRingDescriptor({self.name})"


@dataclass(frozen=True)
class GradedElement:
    ring: GradedRingDescriptor
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.ring.size:
            raise ValueError(f"{self.ring.name} has {self.ring.size} basis elements, got {len(self.coefficients)}")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def zero(cls, ring: GradedRingDescriptor) -> GradedElement:
        return cls(ring, (Fraction(0),) * ring.size)

    @classmethod
    def one(cls, ring: GradedRingDescriptor) -> GradedElement:
        return cls.basis(ring, ring.unit)

    @classmethod
    def basis(cls, ring: GradedRingDescriptor, index: int, coefficient: Scalar = 1) -> GradedElement:
        coefficients = [Fraction(0)] * ring.size
        coefficients[index] = Fraction(coefficient)
        return cls(ring, tuple(coefficients))

    @classmethod
    def from_list(cls, ring: GradedRingDescriptor, values) -> GradedElement:
        return cls(ring, tuple(Fraction(v) for v in values))

    def _check(self, other: GradedElement) -> None:
        if other.ring is not self.ring:
            raise ValueError(f"Cannot combine elements of {self.ring.name} and {other.ring.name}")

    def __add__(self, other: GradedElement) -> GradedElement:
        self._check(other)
        return GradedElement(self.ring, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: GradedElement) -> GradedElement:
        self._check(other)
        return GradedElement(self.ring, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> GradedElement:
        return GradedElement(self.ring, tuple(-a for a in self.coefficients))

    def __mul__(self, other) -> GradedElement:
        if isinstance(other, (int, Fraction)):
            return GradedElement(self.ring, tuple(a * other for a in self.coefficients))
        self._check(other)
        result = [Fraction(0)] * self.ring.size
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if not b:
                    continue
                for k, c in self.ring.products.get((i, j), ()):
                    result[k] += a * b * c
        return GradedElement(self.ring, tuple(result))

    __rmul__ = __mul__

    @property
    def constant(self) -> Fraction:
        return self.coefficients[self.ring.unit]

    def degree_part(self, degree: int) -> GradedElement:
        return GradedElement(self.ring, tuple(
            c if d == degree else Fraction(0) for c, d in zip(self.coefficients, self.ring.degrees)
        ))

    def is_nilpotent(self) -> bool:
        return all(not c for c, d in zip(self.coefficients, self.ring.degrees) if d == 0)

    def to_list(self) -> list[str]:
        return [str(c) for c in self.coefficients]


# ─── Rings ──────────────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def projective_space(m: int) -> GradedRingDescriptor:
    """Chow ring of P^m: Q[h]/(h^{m+1})."""
    if m < 1:
        raise ValueError(f"P^m needs m >= 1, got {m}")
    products = {(i, j): ((i + j, 1),) for i in range(m + 1) for j in range(m + 1) if i + j <= m}
    labels = tuple("1" if i == 0 else "h" if i == 1 else f"h^{i}" for i in range(m + 1))
    return GradedRingDescriptor(
        name=f"P{m}",
        labels=labels,
        degrees=tuple(range(m + 1)),
        products=products,
        hyperplane=1,
    )


def parse_ring(text: str) -> GradedRingDescriptor:
    """``"Pm:3"`` or ``"P3"``."""
    match = _RING_PATTERN.match(text)
    if not match:
        raise WonderfulError(f"Unknown ring {text!r}; expected Pm:<m>")
    return projective_space(int(match.group(1)))


def hyperplane(ring: GradedRingDescriptor) -> GradedElement:
    if ring.hyperplane is None:
        raise WonderfulError(f"{ring.name} has no hyperplane class")
    return GradedElement.basis(ring, ring.hyperplane)


# ─── Operations ─────────────────────────────────────────────────────────────

def adams(k: int, x: GradedElement) -> GradedElement:
    """Scale the degree-i part by k^i."""
    if k == 0:
        raise ValueError("Adams operation needs k != 0")
    return GradedElement(x.ring, tuple(
        c * Fraction(k) ** d for c, d in zip(x.coefficients, x.ring.degrees)
    ))


def adams_inverse(k: int, x: GradedElement) -> GradedElement:
    if k == 0:
        raise ValueError("Adams operation needs k != 0")
    return GradedElement(x.ring, tuple(
        c / Fraction(k) ** d for c, d in zip(x.coefficients, x.ring.degrees)
    ))


def power(x: GradedElement, n: int) -> GradedElement:
    result = GradedElement.one(x.ring)
    for _ in range(n):
        result = result * x
    return result


def inverse(x: GradedElement) -> GradedElement:
    """Power-series inverse; the degree-0 part must be a nonzero multiple of 1."""
    c0 = x.constant
    if not c0:
        raise NotInvertible(f"Degree-0 part of {x.to_list()} is zero")
    one = GradedElement.one(x.ring)
    nilpotent = x * (1 / c0) - one
    if not nilpotent.is_nilpotent():
        raise NotInvertible(f"Degree-0 part of {x.to_list()} is not a multiple of the unit")
    result = one
    term = one
    for _ in range(x.ring.top_degree):
        term = term * -nilpotent
        result = result + term
    return result * (1 / c0)


def exp_nilpotent(x: GradedElement) -> GradedElement:
    if not x.is_nilpotent():
        raise ValueError("exp is only defined here for elements without degree-0 part")
    result = GradedElement.one(x.ring)
    term = GradedElement.one(x.ring)
    for j in range(1, x.ring.top_degree + 1):
        term = term * x * Fraction(1, j)
        result = result + term
    return result


def line_bundle_character(ring: GradedRingDescriptor, d: int) -> GradedElement:
    """ch(O(d)) = e^{dh}."""
    return exp_nilpotent(hyperplane(ring) * d)


@lru_cache(maxsize=None)
def _todd_series(m: int) -> tuple[Fraction, ...]:
    z = sp.symbols("z")
    series = sp.expand(sp.series((z / (1 - sp.exp(-z))) ** (m + 1), z, 0, m + 1).removeO())
    coefficients = []
    for i in range(m + 1):
        c = sp.Rational(series.coeff(z, i))
        coefficients.append(Fraction(int(c.p), int(c.q)))
    return tuple(coefficients)


def todd_projective(m: int) -> GradedElement:
    """td(P^m) = (h / (1 - e^{-h}))^{m+1}."""
    return GradedElement(projective_space(m), _todd_series(m))


def chern_pushforward(ring: GradedRingDescriptor, ch_l: GradedElement, td: GradedElement,
                      p: int, dim_x: int) -> GradedElement:
    """ch(Fr_* L) = p^{dim X} · (ψ^p)^{-1}(ch(L) · td) / td."""
    if td.ring is not ring or ch_l.ring is not ring:
        raise ValueError(f"Inputs must live in {ring.name}")
    td_inverse = inverse(td)
    result = adams_inverse(p, ch_l * td) * td_inverse * (p ** dim_x)
    logger.debug(f"ch(Fr_* L) on {ring.name} at p={p}: {result.to_list()}")
    return result


def thomsen_chern_character(m: int, d: int, p: int) -> GradedElement:
    """Σ_e m(e) e^{eh} over the line bundles O(e) in Fr_* O(d) on P^m."""
    ring = projective_space(m)
    total = GradedElement.zero(ring)
    for e, multiplicity in thomsen_decomposition(m, d, p).items():
        total = total + line_bundle_character(ring, e) * multiplicity
    return total


def pushforward_on_projective_space(m: int, d: int, p: int) -> GradedElement:
    ring = projective_space(m)
    return chern_pushforward(ring, line_bundle_character(ring, d), todd_projective(m), p, m)


def denominator_bound(dim_x: int, p: int) -> int:
    """Every coefficient of ch(Fr_* O(d)) on P^{dim_x} has denominator dividing this."""
    return math.factorial(dim_x) * p ** dim_x
