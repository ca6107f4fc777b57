"""Cohomology of homogeneous line bundles on GL_m/B and of V_lambda on Gr(k, m).

Characteristic-zero semantics (Bott's theorem via the dotted Weyl action).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import MTooSmall, NotNegative
from .weights import GeneralWeight, Weight
from .weyl import weyl_dim_full


@dataclass(frozen=True)
class CohomologyProfile:
    """Nonzero cohomology dimensions, keyed by degree. Empty means total vanishing."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple(sorted((int(i), int(d)) for i, d in self.entries))
        if any(i < 0 or d <= 0 for i, d in entries):
            raise ValueError(f"invalid profile entries {entries}")
        if len({i for i, _ in entries}) != len(entries):
            raise ValueError(f"duplicate degrees in {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "CohomologyProfile":
        return cls(tuple((i, d) for i, d in mapping.items() if d))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, degree: int) -> int:
        return self.as_dict().get(degree, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def vanishes(self) -> bool:
        return not self.entries

    def to_json(self) -> list[dict]:
        return [{"degree": i, "dim": str(d)} for i, d in self.entries]


def rho(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, -1, -1))


def _inversions(seq) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] < seq[j])


def bott_cohomology(mu: GeneralWeight | Weight | tuple[int, ...]) -> CohomologyProfile:
    """All cohomology of the line bundle L_mu on the flag variety of GL_m.

    Shift by rho; a repeated entry means everything vanishes. Otherwise the
    only nonzero group sits in degree equal to the number of inversions of
    the shifted weight, with dimension that of the module whose highest
    weight is the sorted shifted weight minus rho.
    """
    entries = tuple(mu)
    m = len(entries)
    r = rho(m)
    nu = tuple(e + s for e, s in zip(entries, r))
    if len(set(nu)) < m:
        return CohomologyProfile()
    degree = _inversions(nu)
    dominant = tuple(sorted(nu, reverse=True))
    dim = weyl_dim_full(tuple(e - s for e, s in zip(dominant, r)))
    return CohomologyProfile(((degree, dim),))


def grassmannian_cohomology(lam: Weight, k: int, m: int) -> CohomologyProfile:
    """H^*(Gr(k, m), V_lambda), computed on the full flag variety.

    The pushforward of L_(lambda, 0, ..., 0) along G/B -> G/P is V_lambda
    and has no higher direct images, so the two cohomologies agree.
    """
    if len(lam) != k:
        raise ValueError(f"weight {lam} does not have length k={k}")
    if m < k:
        raise MTooSmall(m, k)
    return bott_cohomology(lam.entries + (0,) * (m - k))


def vanishing_threshold(lam: Weight, k: int) -> int:
    """Smallest m from which on V_lambda is acyclic on Gr(k, m) by the
    projective-bundle argument: m >= k - lambda_k. Sufficient, not always minimal."""
    if len(lam) != k:
        raise ValueError(f"weight {lam} does not have length k={k}")
    if lam.lowest >= 0:
        raise NotNegative(lam.lowest)
    return k - lam.lowest
