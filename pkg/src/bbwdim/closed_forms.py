"""Closed-form dimensions of sections of determinant, symmetric and tensor bundles.

Every function returns an exact integer. Products of binomial quotients are
accumulated as separate numerator/denominator integers and divided once.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BadRange, NegativeTwistUnsupported
from .weights import Weight, extend_with_zeros, partitions_of, syt_count, twist
from .weyl import weyl_dim_full


def _check_km(k, m):
    if not 0 < k <= m:
        raise BadRange(f"need 0 < k <= m, got k={k}, m={m}")


def _nonneg(name, value):
    if value < 0:
        raise BadRange(f"need {name} >= 0, got {name}={value}")


def _exact(num, den):
    q, rem = divmod(num, den)
    assert rem == 0, (num, den)
    return q


def det_power_dim(k: int, m: int, l: int) -> int:
    """dim H^0(Gr(k, m), det^l)."""
    _check_km(k, m)
    _nonneg("l", l)
    num = den = 1
    for j in range(k + 1, m + 1):
        num *= comb(l + j - 1, l)
        den *= comb(l + j - k - 1, l)
    return _exact(num, den)


def sym_dim(k: int, m: int, r: int) -> int:
    """dim H^0(Gr(k, m), Sym^r V); independent of k."""
    _check_km(k, m)
    _nonneg("r", r)
    return comb(r + m - 1, r)


def sym_det_dim(k: int, m: int, r: int, l: int) -> int:
    """dim H^0(Gr(k, m), Sym^r V (x) det^l)."""
    _check_km(k, m)
    _nonneg("r", r)
    _nonneg("l", l)
    num = comb(r + l + m - 1, r) * comb(l + m - 1, l)
    den = comb(r + l + k - 1, l)
    for j in range(k + 1, m + 1):
        num *= comb(l + j - 2, l)
        den *= comb(l + j - k - 1, l)
    return _exact(num, den)


def pluecker_relations_dim(k: int, m: int, l: int) -> int:
    """Dimension of the degree-l part of the Pluecker ideal of Gr(k, m).

    Degree-l forms on the Pluecker space (dimension C(m, k)) minus the
    sections of det^l.
    """
    _check_km(k, m)
    if l < 1:
        raise BadRange(f"need l >= 1, got l={l}")
    n = comb(m, k)
    return comb(n + l - 1, l) - det_power_dim(k, m, l)


def tensor_det_dim(k: int, m: int, d: int, l: int) -> int:
    """dim H^0(Gr(k, m), V^(x)d (x) det^l) for l >= 0.

    Decomposes V^(x)d into Schur modules (multiplicity = number of standard
    tableaux of each shape with at most k rows) and sums their H^0.
    """
    _check_km(k, m)
    _nonneg("d", d)
    if l < 0:
        raise NegativeTwistUnsupported(l)
    total = 0
    for lam in partitions_of(d, k):
        top = twist(lam.to_weight(k), l)
        total += syt_count(lam) * weyl_dim_full(extend_with_zeros(top, m))
    return total


@dataclass(frozen=True)
class SymmetryCheck:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def symmetry_check(k: int, m: int, l: int) -> SymmetryCheck:
    """Compare det^l on Gr(k, m) with det^(m-k) on Gr(k, k+l)."""
    _check_km(k, m)
    if l < 1:
        raise BadRange(f"need l >= 1, got l={l}")
    return SymmetryCheck(det_power_dim(k, m, l), det_power_dim(k, k + l, m - k))
