"""
The acceptance table: published values and identities that every build must
reproduce. Each row returns whether it passed together with the numbers it saw.
"""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .blocks.blocks import (
    a_from_type,
    a_lambda,
    block_dimension,
    linkage_classes,
    psln_type,
    rank_set_report,
    restricted_weights,
)
from .frobenius.config import (
    PSL3_CANDIDATE_MAX,
    PSL3_CANDIDATE_MIN,
    PSL3_GUARANTEED_MAX,
    PSL3_GUARANTEED_MIN,
    PUBLISHED_SUBDIVISOR_COUNTS,
)
from .frobenius.steinberg_block import steinberg_block_weight
from .frobenius.subdivisor_count import count_subdivisors, stable_subdivisor_count, subdivisor_report
from .frobenius.summand_conditions import (
    enumerate_candidate_mu,
    enumerate_guaranteed_mu,
    psl3_lattice_point_count,
    psl3_pick_formula,
)
from .ktheory.graded_ring import pushforward_on_projective_space, thomsen_chern_character
from .ktheory.ktheory import (
    CharacterAssignment,
    evaluate_class,
    evaluate_expansion,
    expand_class,
    fixed_points,
    localized_class,
)
from .lie.root_system import Weight, build_root_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AcceptanceRow:
    name: str
    description: str
    check: Callable[[], tuple[bool, dict]]


@dataclass(frozen=True)
class RowResult:
    name: str
    description: str
    passed: bool
    detail: dict
    seconds: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "detail": self.detail,
        }


ROWS: dict[str, AcceptanceRow] = {}


def acceptance_row(name: str, description: str):
    def register(fn: Callable[[], tuple[bool, dict]]):
        ROWS[name] = AcceptanceRow(name, description, fn)
        return fn
    return register


# == Subdivisor counts ==

@acceptance_row("subdivisors", "published subdivisor counts, capped and stable")
def _subdivisors() -> tuple[bool, dict]:
    a2, a3 = build_root_system("A2"), build_root_system("A3")
    small, large = Weight.of(6, 6), Weight.of(20, 22)
    a3_class = Weight.of(20, 21, 22)
    seen = {
        "A2 6,6 p=7": count_subdivisors(a2, small, 7),
        "A2 6,6 p=11": count_subdivisors(a2, small, 11),
        "A2 6,6 stable": stable_subdivisor_count(a2, small),
        "A2 20,22 p=37": count_subdivisors(a2, large, 37),
        "A2 20,22 stable": stable_subdivisor_count(a2, large),
        "A2 20,22 p=23 caps bind": subdivisor_report(a2, large, 23).caps_bind,
        "A3 20,21,22 p=89": count_subdivisors(a3, a3_class, 89),
    }
    expected = {
        "A2 6,6 p=7": 396,
        "A2 6,6 p=11": PUBLISHED_SUBDIVISOR_COUNTS[("A2", (6, 6))],
        "A2 6,6 stable": PUBLISHED_SUBDIVISOR_COUNTS[("A2", (6, 6))],
        "A2 20,22 p=37": PUBLISHED_SUBDIVISOR_COUNTS[("A2", (20, 22))],
        "A2 20,22 stable": PUBLISHED_SUBDIVISOR_COUNTS[("A2", (20, 22))],
        "A2 20,22 p=23 caps bind": True,
        "A3 20,21,22 p=89": PUBLISHED_SUBDIVISOR_COUNTS[("A3", (20, 21, 22))],
    }
    return seen == expected, {"seen": seen, "expected": expected}


# == PSL3 candidates ==

@acceptance_row("psl3_candidates", "21 to 27 candidate μ per λ, 27 attained, lattice-point count")
def _psl3_candidates() -> tuple[bool, dict]:
    rs = build_root_system("A2")
    detail = {}
    passed = True
    for p in (11, 13):
        counts = [len(enumerate_candidate_mu(rs, lam, p)) for lam in restricted_weights(rs, p)]
        points = psl3_lattice_point_count(p)
        ok = (min(counts) >= PSL3_CANDIDATE_MIN and max(counts) == PSL3_CANDIDATE_MAX
              and points == psl3_pick_formula(p))
        detail[f"p={p}"] = {"min": min(counts), "max": max(counts), "lattice_points": points}
        passed &= ok
    return passed, detail


@acceptance_row("psl3_guaranteed", "14 to 19 guaranteed μ per λ")
def _psl3_guaranteed() -> tuple[bool, dict]:
    rs = build_root_system("A2")
    detail = {}
    passed = True
    for p in (11, 13):
        counts = [len(enumerate_guaranteed_mu(rs, lam, p)) for lam in restricted_weights(rs, p)]
        detail[f"p={p}"] = {"min": min(counts), "max": max(counts)}
        passed &= PSL3_GUARANTEED_MIN <= min(counts) and max(counts) <= PSL3_GUARANTEED_MAX
    return passed, detail


# == Rank sets ==

@acceptance_row("rank_sets", "realised subbundle ranks against the published lists")
def _rank_sets() -> tuple[bool, dict]:
    detail = {}
    passed = True
    for tag, p in (("A2", 7), ("A3", 11), ("B2", 11), ("G2", 13)):
        report = rank_set_report(build_root_system(tag), p)
        subset = report.computed <= report.published
        if tag == "A2":
            ok = report.computed == report.published
        elif tag == "A3":
            ok = subset and report.bound == report.published
        else:
            ok = subset
        passed &= ok
        row = {"size": len(report.computed), "missing": report.missing}
        if tag != "A2":
            # products a d d' that no realised class carries, whatever p is
            row["shortfall"] = "structural, independent of p"
        detail[f"{tag} p={p}"] = row
    return passed, detail


# == Steinberg block ==

@acceptance_row("steinberg", "line bundle in the Steinberg block")
def _steinberg() -> tuple[bool, dict]:
    seen = {}
    expected = {}
    for tag in ("A1", "A2", "A3", "B2", "G2"):
        rs = build_root_system(tag)
        for p in (5, 7):
            key = f"{tag} (p-1)ρ p={p}"
            seen[key] = str(steinberg_block_weight(rs, rs.rho * (p - 1), p))
            expected[key] = str(Weight.zero(rs.rank))
    seen["A2 0 p=5"] = str(steinberg_block_weight(build_root_system("A2"), Weight.of(0, 0), 5))
    expected["A2 0 p=5"] = "-1,-1"
    seen["A3 0 p=5"] = str(steinberg_block_weight(build_root_system("A3"), Weight.of(0, 0, 0), 5))
    expected["A3 0 p=5"] = "-2,0,-2"
    mismatches = {k: seen[k] for k in expected if seen[k] != expected[k]}
    return not mismatches, {"checked": len(expected), "mismatches": mismatches}


# == Blocks ==

@acceptance_row("block_partition", "block dimensions add up to p^dim G")
def _block_partition() -> tuple[bool, dict]:
    detail = {}
    passed = True
    for tag, p in (("A2", 5), ("B2", 5), ("G2", 7)):
        rs = build_root_system(tag)
        total = sum(block_dimension(rs, cls.representative, p) for cls in linkage_classes(rs, p))
        passed &= total == p ** rs.group_dim
        detail[f"{tag} p={p}"] = str(total)
    return passed, detail


@acceptance_row("psln_type", "a_λ by orbit equals n!/(n_1!...n_k!)")
def _psln_type() -> tuple[bool, dict]:
    detail = {}
    passed = True
    for n, p in ((3, 5), (4, 5)):
        rs = build_root_system(f"A{n - 1}")
        bad = [
            str(lam) for lam in restricted_weights(rs, p)
            if a_lambda(rs, lam, p) != a_from_type(psln_type(n, lam, p))
        ]
        passed &= not bad
        detail[f"n={n} p={p}"] = {"mismatches": bad}
    return passed, detail


# == K-theory ==

def _random_assignment(rng: random.Random, rank: int) -> CharacterAssignment:
    def value() -> Fraction:
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    return CharacterAssignment(tuple(value() for _ in range(rank)), tuple(value() for _ in range(rank)))


@acceptance_row("kclass", "fixed-point classes of PSL2: term counts and evaluations")
def _kclass() -> tuple[bool, dict]:
    rs = build_root_system("A1")
    rng = random.Random(20240607)
    passed = True
    checked = 0
    for p in (2, 3):
        for y, w in fixed_points(rs):
            for n in (0, 1, 3):
                fpc = localized_class(rs, Weight.of(n), p, y, w)
                terms = expand_class(fpc, limit=p ** rs.group_dim)
                passed &= sum(terms.values()) == p ** rs.group_dim
                for _ in range(20):
                    assignment = _random_assignment(rng, rs.rank)
                    passed &= evaluate_class(fpc, assignment) == evaluate_expansion(terms, assignment)
                checked += 1
    return passed, {"classes": checked}


@acceptance_row("chern", "Chern character of Fr_* O(d) on P^m against the line-bundle sum")
def _chern() -> tuple[bool, dict]:
    failures = []
    checked = 0
    for m in (1, 2, 3):
        for p in (2, 3, 5):
            for d in range(2 * p + 1):
                checked += 1
                if pushforward_on_projective_space(m, d, p) != thomsen_chern_character(m, d, p):
                    failures.append(f"m={m} p={p} d={d}")
    return not failures, {"checked": checked, "failures": failures}


def run_rows(names: list[str] | None = None) -> list[RowResult]:
    selected = names or list(ROWS)
    results = []
    for name in selected:
        row = ROWS[name]
        start = time.perf_counter()
        passed, detail = row.check()
        elapsed = time.perf_counter() - start
        logger.info(f"Acceptance row {name}: {'pass' if passed else 'FAIL'} in {elapsed:.2f}s")
        results.append(RowResult(name, row.description, bool(passed), detail, elapsed))
    return results
