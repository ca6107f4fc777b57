from math import comb

import pytest

from bbwdim import (
    BadRange,
    NegativeTwistUnsupported,
    bounded_shape_word_count,
    det_power_dim,
    pluecker_relations_dim,
    sym_det_dim,
    sym_dim,
    symmetry_check,
    tensor_det_dim,
    weyl_dim_full,
)


def padded(head, m):
    return tuple(head) + (0,) * (m - len(head))


def test_det_power_examples():
    assert det_power_dim(2, 4, 1) == 6
    assert det_power_dim(2, 4, 2) == 20
    assert det_power_dim(2, 5, 1) == 10
    assert det_power_dim(2, 3, 3) == 10 == weyl_dim_full((3, 3, 0))
    assert det_power_dim(3, 7, 0) == 1


def test_det_power_matches_weyl():
    for m in range(1, 9):
        for k in range(1, m + 1):
            for l in range(7):
                assert det_power_dim(k, m, l) == weyl_dim_full(padded((l,) * k, m))


def test_sym_examples():
    assert sym_dim(1, 2, 2) == 3
    assert sym_dim(2, 4, 3) == 20
    assert sym_dim(3, 5, 2) == 15
    assert sym_dim(4, 6, 0) == 1


def test_sym_det_examples():
    for m in range(1, 6):
        for k in range(1, m + 1):
            for x in range(4):
                assert sym_det_dim(k, m, x, 0) == sym_dim(k, m, x)
                assert sym_det_dim(k, m, 0, x) == det_power_dim(k, m, x)
    assert sym_det_dim(1, 2, 1, 1) == 3


def test_sym_det_matches_weyl():
    for m in range(1, 8):
        for k in range(1, m + 1):
            for r in range(5):
                for l in range(5):
                    head = (r + l,) + (l,) * (k - 1)
                    assert sym_det_dim(k, m, r, l) == weyl_dim_full(padded(head, m))


def test_pluecker_examples():
    assert pluecker_relations_dim(2, 4, 2) == 1
    assert pluecker_relations_dim(2, 5, 2) == 5
    for m in range(3, 8):
        for k in range(2, m):
            assert pluecker_relations_dim(k, m, 1) == 0
            for l in range(1, 5):
                assert pluecker_relations_dim(k, m, l) >= 0


def test_pluecker_projective_space_has_no_relations():
    # Gr(1, m) is all of P^{m-1}
    for m in range(1, 7):
        for l in range(1, 5):
            assert pluecker_relations_dim(1, m, l) == 0


def test_tensor_examples():
    assert tensor_det_dim(2, 5, 2, 0) == 25
    assert tensor_det_dim(2, 3, 3, 0) == 26
    assert tensor_det_dim(1, 2, 1, 1) == 3
    assert tensor_det_dim(3, 4, 0, 2) == det_power_dim(3, 4, 2)


def test_tensor_power_identity():
    for k in range(1, 6):
        for m in range(k, 9):
            for d in range(k + 1):
                assert tensor_det_dim(k, m, d, 0) == m**d


def test_tensor_word_oracle_small():
    for k in range(1, 4):
        for m in range(k, 5):
            for d in range(6):
                assert tensor_det_dim(k, m, d, 0) == bounded_shape_word_count(k, m, d)


def test_tensor_single_box_is_twisted_standard():
    # V (x) det^l has highest weight (l+1, l, ..., l)
    for k in range(1, 4):
        for m in range(k, 6):
            for l in range(4):
                assert tensor_det_dim(k, m, 1, l) == sym_det_dim(k, m, 1, l)


def test_symmetry_examples():
    res = symmetry_check(2, 5, 1)
    assert (res.lhs, res.rhs, res.equal) == (10, 10, True)
    res = symmetry_check(1, 3, 4)
    assert (res.lhs, res.rhs) == (15, 15) == (comb(6, 4), comb(6, 4))
    res = symmetry_check(3, 3, 5)
    assert (res.lhs, res.rhs, res.equal) == (1, 1, True)


def test_symmetry_grid():
    for m in range(1, 11):
        for k in range(1, m + 1):
            for l in range(1, 9):
                assert symmetry_check(k, m, l).equal


@pytest.mark.parametrize(
    "call",
    [
        lambda: det_power_dim(0, 3, 1),
        lambda: det_power_dim(4, 3, 1),
        lambda: det_power_dim(2, 3, -1),
        lambda: sym_dim(2, 3, -1),
        lambda: sym_det_dim(2, 3, 1, -1),
        lambda: pluecker_relations_dim(2, 4, 0),
        lambda: symmetry_check(2, 4, 0),
        lambda: tensor_det_dim(2, 4, -1, 0),
    ],
)
def test_bad_range(call):
    with pytest.raises(BadRange):
        call()


def test_negative_twist_rejected():
    with pytest.raises(NegativeTwistUnsupported):
        tensor_det_dim(2, 4, 2, -1)
