"""Weyl dimension formula for GL_m and H^0 of bundles on Gr(k, m)."""
from __future__ import annotations

from typing import Sequence

from .errors import BBWError, MTooSmall, NegativeLowestEntry, NotDominant
from .weights import Weight, extend_with_zeros


def weyl_product(entries: Sequence[int]) -> int:
    """Evaluate prod_{i<j} (mu_i - mu_j + j - i) / (j - i) for any integer mu.

    No dominance check: for non-dominant weights the value is the signed
    alternant (possibly zero or negative). Numerator and denominator are
    accumulated separately and divided once.
    """
    mu = tuple(entries)
    num = den = 1
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    q, rem = divmod(num, den)
    assert rem == 0, (mu, num, den)
    return q


def weyl_dim_full(mu: Weight | Sequence[int]) -> int:
    """Dimension of the irreducible GL_m-module with highest weight ``mu``."""
    entries = tuple(mu)
    for i in range(1, len(entries)):
        if entries[i - 1] < entries[i]:
            raise NotDominant(i)
    return weyl_product(entries)


def _as_length_k(lam: Weight, k: int) -> Weight:
    if len(lam) > k:
        raise BBWError(f"weight {lam} has more than k={k} entries")
    if len(lam) < k:
        if lam.lowest < 0:
            raise NegativeLowestEntry(lam.lowest)
        lam = Weight(lam.entries + (0,) * (k - len(lam)))
    return lam


def h0_dim(lam: Weight, k: int, m: int) -> int:
    """dim H^0(Gr(k, m), V_lambda) for a weight with nonnegative entries."""
    lam = _as_length_k(lam, k)
    if m < k:
        raise MTooSmall(m, k)
    if lam.lowest < 0:
        raise NegativeLowestEntry(lam.lowest)
    return weyl_dim_full(extend_with_zeros(lam, m))


def dimension_table(lam: Weight, k: int, m_max: int) -> list[tuple[int, int]]:
    """``[(m, h0_dim(lam, k, m)) for m = k .. m_max]``."""
    lam = _as_length_k(lam, k)
    if lam.lowest < 0:
        raise NegativeLowestEntry(lam.lowest)
    if m_max < k:
        raise MTooSmall(m_max, k)
    return [(m, h0_dim(lam, k, m)) for m in range(k, m_max + 1)]
