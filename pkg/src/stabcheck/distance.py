"""Minimum distance by exhaustive search, plus column-independence bounds.

The distance of a stabilizer code is the least symplectic weight over the
operators that commute with every generator (zero syndrome) but are not
stabilizer elements themselves.  `min_distance` searches weight levels
ascending, so the first hit is exact.  `column_bounds` derives distance
bounds from the largest m such that every m-subset of check-matrix columns
is independent, without enumerating errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .degeneracy import (
    LETTER_MASKS,
    CriterionOutcome,
    Verdict,
    classify,
    css_nondegeneracy,
)
from .stabilizer import StabilizerCode, css_split
from .symplectic import (
    ALL_INDEPENDENT,
    BUDGET_EXHAUSTED,
    DEPENDENT_FOUND,
    Gf2Matrix,
    PauliOperator,
    row_reduce,
    smallest_dependent_subset,
)

__all__ = [
    "DistanceResult",
    "ColumnBounds",
    "min_distance",
    "column_bounds",
    "max_independence_order",
]


def _colex_combinations(n: int, w: int) -> Iterator[tuple[int, ...]]:
    """w-subsets of range(n) in colexicographic order."""
    if w == 0:
        yield ()
        return
    for top in range(w - 1, n):
        for rest in _colex_combinations(top, w - 1):
            yield rest + (top,)


def _iter_weight_level(n: int, w: int) -> Iterator[tuple[int, int]]:
    """(x, z) masks of weight-w Paulis: supports colex, letters lex X<Y<Z."""
    for support in _colex_combinations(n, w):
        for letters in product(LETTER_MASKS, repeat=w):
            x = 0
            z = 0
            for pos, (lx, lz) in zip(support, letters):
                x |= lx << pos
                z |= lz << pos
            yield x, z


@dataclass(frozen=True)
class DistanceResult:
    """d is None when the search limit was exhausted without a hit.

    `witness` is the first zero-syndrome non-stabilizer operator found, so it
    has weight d.  lower/upper come from `column_bounds` (upper only when a
    `t` was supplied and the bound applies; see there).
    """

    d: int | None
    witness: PauliOperator | None
    lower: int
    upper: int | None
    max_independence_order: int
    search_limit: int
    budget_exhausted: bool


@dataclass(frozen=True)
class ColumnBounds:
    """Distance bounds from column independence alone.

    max_independence_order M is the largest m such that every m-subset of
    [H_X|H_Z] columns is independent.  The always-valid lower bound is
    2*floor(M/4)+1.  The upper bound 4t+1 is attached only when the code is
    nondegenerate at t and M <= 4t (so a dependent set of at most 4t+1
    columns exists, which is what the bound's argument consumes).  For CSS
    codes whose blocks have every 2t-subset independent and some (2t+1)-subset
    dependent, nondegeneracy pins the distance exactly at 2t+1; then
    lower == upper == exact.

    Both upper and exact presuppose that logical operators exist, so neither
    is attached when k = 0 (a stabilizer state has no distance to bound).
    """

    t: int
    max_independence_order: int
    lower: int
    upper: int | None
    exact: int | None
    block_orders: tuple[int, int] | None
    budget_exhausted: bool


def max_independence_order(
    m: Gf2Matrix, *, budget: int = 10**7
) -> tuple[int, bool]:
    """Largest m such that every m-subset of columns is independent.

    Returns (order, budget_exhausted).  On exhaustion the order is the
    largest size fully verified, a valid lower bound for the true order.
    """
    red = row_reduce(m)
    if red.rank == m.cols:
        return m.cols, False
    search = smallest_dependent_subset(m, red.rank + 1, budget=budget)
    if search.outcome == DEPENDENT_FOUND:
        return len(search.dependent) - 1, False
    # rank < cols guarantees some (rank+1)-subset is dependent, so the search
    # cannot come back all_independent; only the budget stops it.
    assert search.outcome == BUDGET_EXHAUSTED
    return _verified_order(m, budget), True


def _verified_order(m: Gf2Matrix, budget: int) -> int:
    """Largest size whose full enumeration fits the budget (conservative)."""
    order = 0
    for size in range(1, m.cols + 1):
        search = smallest_dependent_subset(m, size, budget=budget)
        if search.outcome != ALL_INDEPENDENT:
            break
        order = size
    return order


def column_bounds(
    code: StabilizerCode, t: int, *, budget: int = 10**7
) -> ColumnBounds:
    """Distance bounds from column independence of the check matrix."""
    if not 1 <= t <= code.n:
        raise ValueError(f"t={t} outside 1..{code.n}")
    order, exhausted = max_independence_order(code.h.h, budget=budget)
    lower = 2 * (order // 4) + 1
    upper: int | None = None
    exact: int | None = None
    block_orders: tuple[int, int] | None = None

    encodes = code.k >= 1
    nondegenerate = classify(code, t).verdict is Verdict.NONDEGENERATE
    if encodes and nondegenerate and order <= 4 * t and not exhausted:
        upper = 4 * t + 1

    split = css_split(code)
    if split is not None:
        x_order, x_exh = max_independence_order(split.x_block, budget=budget)
        z_order, z_exh = max_independence_order(split.z_block, budget=budget)
        block_orders = (x_order, z_order)
        exhausted = exhausted or x_exh or z_exh
        pattern = (
            encodes
            and min(x_order, z_order) == 2 * t
            and not (x_exh or z_exh)
        )
        if pattern and css_nondegeneracy(
            code, t, budget=budget
        ) is CriterionOutcome.NONDEGENERATE:
            exact = 2 * t + 1
            lower = exact
            upper = exact

    return ColumnBounds(
        t=t,
        max_independence_order=order,
        lower=lower,
        upper=upper,
        exact=exact,
        block_orders=block_orders,
        budget_exhausted=exhausted,
    )


def min_distance(
    code: StabilizerCode,
    search_limit: int | None = None,
    *,
    t: int | None = None,
    budget: int = 10**7,
) -> DistanceResult:
    """Exhaustive minimum-distance search up to `search_limit` (default n).

    Weight levels ascend, so the first operator with zero syndrome outside
    the stabilizer row space is a minimum-weight logical and d is exact.
    Column bounds are attached to the result; the 4t+1 upper bound needs a
    `t` and is omitted otherwise.  Codes with k=0 have no logical operators
    and always exhaust the limit.
    """
    n = code.n
    limit = n if search_limit is None else search_limit
    if not 0 <= limit <= n:
        raise ValueError(f"search limit {limit} outside 0..{n}")

    if t is not None:
        bounds = column_bounds(code, t, budget=budget)
        lower, upper = bounds.lower, bounds.upper
        order, exhausted = bounds.max_independence_order, bounds.budget_exhausted
    else:
        order, exhausted = max_independence_order(code.h.h, budget=budget)
        lower, upper = 2 * (order // 4) + 1, None

    d: int | None = None
    witness: PauliOperator | None = None
    for w in range(1, limit + 1):
        for x, z in _iter_weight_level(n, w):
            if code.syndrome_masks(x, z) != 0:
                continue
            if code.in_stabilizer_masks(x, z):
                continue
            d = w
            witness = PauliOperator.from_masks(n, x, z)
            break
        if d is not None:
            break

    return DistanceResult(
        d=d,
        witness=witness,
        lower=lower,
        upper=upper,
        max_independence_order=order,
        search_limit=limit,
        budget_exhausted=exhausted,
    )
