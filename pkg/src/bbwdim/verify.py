"""Property grids comparing formulas against each other and against the oracles.

Each suite walks its grid in a fixed order and returns a :class:`SuiteReport`;
the first failing case is kept as the counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bott import bott_cohomology
from .closed_forms import (
    det_power_dim,
    pluecker_relations_dim,
    symmetry_check,
    tensor_det_dim,
)
from .oracle import (
    bounded_shape_word_count,
    enumeration_budget,
    projective_cohomology,
    ssyt_count,
)
from .weights import Partition, partitions_of
from .weyl import weyl_dim_full


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, describe: Callable[[], str]):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def summary(self) -> str:
        line = f"{self.name}: {self.passed} passed, {self.failed} failed"
        if self.counterexample:
            line += f"; first counterexample: {self.counterexample}"
        return line


def symmetry(k_max: int = 10, l_max: int = 8) -> SuiteReport:
    rep = SuiteReport("symmetry")
    for m in range(1, k_max + 1):
        for k in range(1, m + 1):
            for l in range(1, l_max + 1):
                res = symmetry_check(k, m, l)
                rep.record(res.equal, lambda: f"k={k} m={m} l={l}: {res.lhs} != {res.rhs}")
    return rep


def weyl_oracle(size_max: int = 6, rows_max: int = 4, m_max: int = 6) -> SuiteReport:
    rep = SuiteReport("weyl-oracle")
    for d in range(size_max + 1):
        for lam in partitions_of(d, rows_max):
            for m in range(max(lam.row_count, 1), m_max + 1):
                w = weyl_dim_full(lam.to_weight(m))
                s = ssyt_count(lam, m)
                rep.record(w == s, lambda: f"lambda=({lam}) m={m}: weyl {w} != ssyt {s}")
    return rep


def bott_oracle(d_max: int = 10, m_max: int = 6) -> SuiteReport:
    rep = SuiteReport("bott-oracle")
    for d in range(-d_max, d_max + 1):
        for m in range(2, m_max + 1):
            b = bott_cohomology((d,) + (0,) * (m - 1))
            p = projective_cohomology(d, m)
            rep.record(b == p, lambda: f"d={d} m={m}: bott {b.as_dict()} != classical {p.as_dict()}")
    return rep


def schur_weyl(d_max: int = 5, m_max: int = 8, k_max: int = 5, word_limit: int = 10**6) -> SuiteReport:
    """m^d identity for d <= k, plus word counting wherever m^d <= word_limit."""
    rep = SuiteReport("schur-weyl")
    for k in range(1, k_max + 1):
        for m in range(k, m_max + 1):
            for d in range(0, min(d_max, k) + 1):
                t = tensor_det_dim(k, m, d, 0)
                rep.record(t == m**d, lambda: f"k={k} m={m} d={d}: {t} != {m}^{d}")
    budget = min(word_limit, enumeration_budget())
    for k in range(1, k_max + 1):
        for m in range(k, m_max + 1):
            d = 0
            while m**d <= budget and (m > 1 or d <= max(d_max, k_max)):
                t = tensor_det_dim(k, m, d, 0)
                w = bounded_shape_word_count(k, m, d, budget)
                rep.record(t == w, lambda: f"k={k} m={m} d={d}: formula {t} != words {w}")
                d += 1
    return rep


def pluecker(m_max: int = 7, l_max: int = 4) -> SuiteReport:
    rep = SuiteReport("pluecker")
    for m in range(3, m_max + 1):
        for k in range(2, m):
            for l in range(1, l_max + 1):
                p = pluecker_relations_dim(k, m, l)
                ok = p >= 0 and (l != 1 or p == 0)
                rep.record(ok, lambda: f"k={k} m={m} l={l}: {p}")
    for args, want in (((2, 4, 2), 1), ((2, 5, 2), 5)):
        p = pluecker_relations_dim(*args)
        rep.record(p == want, lambda: f"k,m,l={args}: {p} != {want}")
    return rep


def det_power_oracle(m_max: int = 5, l_max: int = 3) -> SuiteReport:
    rep = SuiteReport("det-power-oracle")
    for m in range(1, m_max + 1):
        for k in range(1, m + 1):
            for l in range(l_max + 1):
                lam = Partition((l,) * k if l else ())
                a, b = det_power_dim(k, m, l), ssyt_count(lam, m)
                rep.record(a == b, lambda: f"k={k} m={m} l={l}: {a} != {b}")
    return rep


SUITES = ("symmetry", "weyl-oracle", "bott-oracle", "schur-weyl", "pluecker")


def run(names: Iterable[str], **bounds) -> list[SuiteReport]:
    """Run suites by name; bounds left as None fall back to each suite's default."""
    given = {key: value for key, value in bounds.items() if value is not None}

    def pick(fn, *keys):
        return fn(**{key: given[key] for key in keys if key in given})

    table = {
        "symmetry": (symmetry, "k_max", "l_max"),
        "weyl-oracle": (weyl_oracle, "size_max", "m_max"),
        "bott-oracle": (bott_oracle, "d_max", "m_max"),
        "schur-weyl": (schur_weyl, "d_max", "m_max", "k_max"),
        "pluecker": (pluecker, "m_max", "l_max"),
    }
    out = []
    for name in names:
        if name not in table:
            raise ValueError(f"unknown suite {name!r}")
        fn, *keys = table[name]
        out.append(pick(fn, *keys))
    return out
