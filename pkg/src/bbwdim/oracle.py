"""Brute-force ground truth, deliberately independent of the product formulas.

* semistandard tableaux counted by backtracking,
* the classical cohomology of O(d) on projective space,
* RSK row insertion over all words of a given length.

Enumerations run against a budget (``BBWDIM_ENUM_BUDGET`` or the
``budget`` argument) and raise :class:`TooLarge` instead of truncating.
"""
from __future__ import annotations

import os
from bisect import bisect_right
from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb

from .bott import CohomologyProfile
from .errors import BadRange, BBWError, TooLarge
from .weights import Partition

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "BBWDIM_ENUM_BUDGET"


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        if budget <= 0:
            raise BBWError(f"budget must be positive, got {budget}")
        return budget
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise BBWError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise BBWError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}")
    return value


def ssyt_count(lam: Partition, m: int, budget: int | None = None) -> int:
    """Count semistandard tableaux of shape ``lam`` with entries in 1..m."""
    if m < lam.row_count:
        raise BadRange(f"m={m} is smaller than the number of rows {lam.row_count}")
    limit = enumeration_budget(budget)
    cells = [(i, j) for i, row in enumerate(lam.parts) for j in range(row)]
    filling = [[0] * row for row in lam.parts]
    count = 0

    def fill(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            if count > limit:
                raise TooLarge(f"SSYT count of shape {lam} with entries <= {m}", limit)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = filling[i][j - 1]
        if i > 0:
            lo = max(lo, filling[i - 1][j] + 1)
        for v in range(lo, m + 1):
            filling[i][j] = v
            fill(idx + 1)

    fill(0)
    return count


def projective_cohomology(d: int, m: int) -> CohomologyProfile:
    """Cohomology of O(d) on P^(m-1)."""
    if m < 2:
        raise BadRange(f"need m >= 2, got m={m}")
    if d >= 0:
        return CohomologyProfile(((0, comb(d + m - 1, m - 1)),))
    if d <= -m:
        return CohomologyProfile(((m - 1, comb(-d - 1, m - 1)),))
    return CohomologyProfile()


def rsk_row_count(word) -> int:
    """Number of rows of the RSK insertion tableau of ``word``."""
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return len(rows)


@lru_cache(maxsize=None)
def _row_histogram(m: int, d: int) -> tuple[tuple[int, int], ...]:
    hist = Counter(rsk_row_count(w) for w in product(range(1, m + 1), repeat=d))
    return tuple(sorted(hist.items()))


def word_row_histogram(m: int, d: int, budget: int | None = None) -> dict[int, int]:
    """Map row count -> number of words of length d over 1..m with that RSK shape height."""
    if m < 1 or d < 0:
        raise BadRange(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    limit = enumeration_budget(budget)
    if m**d > limit:
        raise TooLarge(f"{m}^{d} words", limit)
    return dict(_row_histogram(m, d))


def bounded_shape_word_count(k: int, m: int, d: int, budget: int | None = None) -> int:
    """Count words of length d over 1..m whose RSK shape has at most k rows."""
    hist = word_row_histogram(m, d, budget)
    return sum(n for rows, n in hist.items() if rows <= k)
