"""
Bounded integer feasibility for systems ``lower <= v - A b <= upper`` with
``b`` in a box.

The Cartan systems met here have rank at most five and small boxes, so a
propagate-then-branch search is exact and fast enough. Propagation tightens
each b_i from the current intervals of the other coordinates until nothing
moves; branching then fixes the coordinate with the smallest domain.
"""
from __future__ import annotations

import logging
from typing import Sequence

logger = logging.getLogger(__name__)

Bounds = list[int]


def _propagate(cartan, v, lower, upper, lo: Bounds, hi: Bounds, budget: int | None) -> bool:
    """Tighten [lo, hi] in place. Returns False when some interval empties."""
    rank = len(v)
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            a_ii = cartan[i][i]
            s_min = 0
            s_max = 0
            for j in range(rank):
                if j == i:
                    continue
                x, y = cartan[i][j] * lo[j], cartan[i][j] * hi[j]
                s_min += min(x, y)
                s_max += max(x, y)

            new_hi = hi[i]
            new_lo = lo[i]
            if lower is not None and lower[i] is not None:
                new_hi = min(new_hi, (v[i] - lower[i] - s_min) // a_ii)
            if upper is not None and upper[i] is not None:
                new_lo = max(new_lo, -((-(v[i] - upper[i] - s_max)) // a_ii))
            if budget is not None:
                new_hi = min(new_hi, budget - (sum(lo) - lo[i]))

            if new_lo > new_hi:
                return False
            if new_lo != lo[i] or new_hi != hi[i]:
                lo[i], hi[i] = new_lo, new_hi
                changed = True
    return True


def _satisfies(cartan, v, lower, upper, b: Sequence[int]) -> bool:
    rank = len(v)
    for i in range(rank):
        value = v[i] - sum(cartan[i][j] * b[j] for j in range(rank))
        if lower is not None and lower[i] is not None and value < lower[i]:
            return False
        if upper is not None and upper[i] is not None and value > upper[i]:
            return False
    return True


def find_box_solution(
    cartan: Sequence[Sequence[int]],
    v: Sequence[int],
    lower: Sequence[int | None] | None,
    upper: Sequence[int | None] | None,
    b_lo: Sequence[int],
    b_hi: Sequence[int],
    budget: int | None = None,
) -> tuple[int, ...] | None:
    """Find integer b with b_lo <= b <= b_hi, sum(b) <= budget and lower <= v - A b <= upper.

    The diagonal of ``cartan`` must be positive. Returns the first solution in
    lexicographic order of the branching, or None.
    """
    lo, hi = list(b_lo), list(b_hi)
    if any(a > b for a, b in zip(lo, hi)):
        return None
    return _search(cartan, v, lower, upper, lo, hi, budget)


def _search(cartan, v, lower, upper, lo: Bounds, hi: Bounds, budget) -> tuple[int, ...] | None:
    if not _propagate(cartan, v, lower, upper, lo, hi, budget):
        return None
    if budget is not None and sum(lo) > budget:
        return None

    free = [i for i in range(len(v)) if lo[i] < hi[i]]
    if not free:
        return tuple(lo) if _satisfies(cartan, v, lower, upper, lo) else None

    pivot = min(free, key=lambda i: (hi[i] - lo[i], i))
    for value in range(lo[pivot], hi[pivot] + 1):
        sub_lo, sub_hi = list(lo), list(hi)
        sub_lo[pivot] = sub_hi[pivot] = value
        found = _search(cartan, v, lower, upper, sub_lo, sub_hi, budget)
        if found is not None:
            return found
    return None
