from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from bbwdim import (
    MTooSmall,
    NegativeLowestEntry,
    NotDominant,
    Weight,
    dimension_table,
    extend_with_zeros,
    h0_dim,
    partitions_of,
    ssyt_count,
    twist,
    weyl_dim_full,
)


def ssyt_by_product(shape, m):
    """Check every filling in [1, m]^cells: a second, slower SSYT count."""
    cs = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    n = 0
    for vals in product(range(1, m + 1), repeat=len(cs)):
        t = dict(zip(cs, vals))
        if all(
            (j == 0 or t[(i, j - 1)] <= v) and (i == 0 or t[(i - 1, j)] < v)
            for (i, j), v in t.items()
        ):
            n += 1
    return n


dominant = st.integers(1, 8).flatmap(
    lambda m: st.lists(st.integers(-5, 5), min_size=m, max_size=m)
).map(lambda xs: Weight(tuple(sorted(xs, reverse=True))))


def test_frozen_oracle_values():
    assert ssyt_by_product((2, 1), 3) == 8
    assert ssyt_by_product((2, 2), 4) == 20


@pytest.mark.parametrize(
    "mu, expected",
    [((0, 0, 0, 0), 1), ((1, 1, 0, 0), 6), ((2, 1, 0), 8), ((2, 2, 0, 0), 20)],
)
def test_weyl_dim_examples(mu, expected):
    assert weyl_dim_full(Weight(mu)) == expected


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(NotDominant):
        weyl_dim_full((0, 1))


@given(dominant)
def test_weyl_dim_positive(mu):
    assert weyl_dim_full(mu) >= 1


@given(dominant, st.integers(-10, 10))
def test_translation_covariance(mu, r):
    assert weyl_dim_full(twist(mu, r)) == weyl_dim_full(mu)


def test_oracle_equivalence():
    for d in range(7):
        for lam in partitions_of(d, 4):
            for m in range(max(lam.row_count, 1), 7):
                assert weyl_dim_full(extend_with_zeros(lam.to_weight(max(lam.row_count, 1)), m)) == ssyt_count(lam, m)


def test_h0_examples():
    assert h0_dim(Weight((1, 1)), 2, 4) == 6
    for n in range(6):
        for m in range(1, 7):
            assert h0_dim(Weight((n,)), 1, m) == comb(n + m - 1, n)
    assert h0_dim(Weight((0, 0, 0)), 3, 7) == 1


def test_h0_independent_of_explicit_padding():
    for lam in partitions_of(4, 3):
        w = lam.to_weight(max(lam.row_count, 1))
        for k in range(len(w), 5):
            for m in range(k, 7):
                assert h0_dim(w, len(w), m) == h0_dim(extend_with_zeros(w, k), k, m)
                assert h0_dim(w, k, m) == h0_dim(w, len(w), m)


def test_h0_errors():
    with pytest.raises(NegativeLowestEntry):
        h0_dim(Weight((1, -1)), 2, 4)
    with pytest.raises(MTooSmall):
        h0_dim(Weight((1, 1)), 2, 1)


def test_dimension_table_examples():
    assert dimension_table(Weight((1,)), 1, 4) == [(1, 1), (2, 2), (3, 3), (4, 4)]
    assert dimension_table(Weight((1, 1)), 2, 5) == [(2, 1), (3, 3), (4, 6), (5, 10)]
    assert dimension_table(Weight((2,)), 1, 3) == [(1, 1), (2, 3), (3, 6)]
    with pytest.raises(MTooSmall):
        dimension_table(Weight((1, 1)), 2, 1)


def test_big_values_stay_exact():
    # det^50 on Gr(5, 20) is far beyond 64 bits
    value = h0_dim(Weight((50,) * 5), 5, 20)
    assert value > 2**64
    assert value == ssyt_count_free_check((50,) * 5, 20)


def ssyt_count_free_check(head, m):
    from fractions import Fraction

    mu = head + (0,) * (m - len(head))
    out = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            out *= Fraction(mu[i] - mu[j] + j - i, j - i)
    assert out.denominator == 1
    return out.numerator
