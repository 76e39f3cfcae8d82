"""Exhaustive generation of canonical terms by length bound.

The size measure is the system's length function (l for ω^X, L for the
others).  Terms of each exact length are built from strictly shorter
terms, so every canonical term is produced exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations_with_replacement
from typing import Iterator

from . import cnf, epsilon, gamma, veblen
from .base import BaseOrder
from .errors import GuardExceeded, HViolation, InvalidTerm, UnsupportedBase
from .systems import NotationSystem, get_system

DEFAULT_MAX_COUNT = 200_000


@dataclass(frozen=True)
class EnumSpec:
    system: str
    base: BaseOrder
    max_len: int
    max_count: int = DEFAULT_MAX_COUNT

    def __post_init__(self):
        if self.max_len < 0:
            raise ValueError("max_len must be non-negative")
        if not self.base.is_finite:
            raise UnsupportedBase("enumeration needs a finite base order")


def _descending(system: NotationSystem, terms) -> list:
    return sorted(terms, key=cmp_to_key(system.compare), reverse=True)


def _multisets(atoms: list, total: int, min_count: int) -> Iterator[tuple]:
    """Non-increasing sequences from ``atoms`` (``(term, cost)`` pairs,
    sorted descending) whose costs add up to exactly ``total``."""

    def go(start: int, remaining: int, chosen: list):
        if remaining == 0:
            if len(chosen) >= min_count:
                yield tuple(chosen)
            return
        for i in range(start, len(atoms)):
            term, cost = atoms[i]
            if cost <= remaining:
                chosen.append(term)
                yield from go(i, remaining - cost, chosen)
                chosen.pop()

    yield from go(0, total, [])


class _Generator:
    """Builds ``by_len[k]``, the terms of length exactly k, one level at a time."""

    def __init__(self, system: NotationSystem, X: BaseOrder):
        self.system = system
        self.X = X
        self.codes = list(X.elements())
        self.by_len: list[list] = []

    def upto(self, k: int) -> list:
        return [t for level in self.by_len[: k + 1] for t in level]

    def grow(self) -> list:
        k = len(self.by_len)
        level = getattr(self, "_level_" + self.system.name)(k)
        self.by_len.append(level)
        return level

    def _level_w(self, k):
        return [cnf.CnfTerm(c) for c in combinations_with_replacement(sorted(self.codes, reverse=True), k)]

    def _level_w2(self, k):
        if k == 0:
            return [cnf.ZERO2]
        # exponents from ω^X: an exponent α costs l(α) + 1
        atoms = []
        for n in range(k):
            for c in combinations_with_replacement(sorted(self.codes, reverse=True), n):
                atoms.append(cnf.CnfTerm(c))
        atoms = [(a, len(a.exponents) + 1) for a in _descending(get_system("w"), atoms)]
        return [cnf.Cnf2Term(seq) for seq in _multisets(atoms, k, 1)]

    def _level_eps(self, k):
        if k == 0:
            return [epsilon.ZERO] + [epsilon.Eps(x) for x in self.codes]
        out = [epsilon.Pow(a) for a in self.by_len[k - 1] if not isinstance(a, epsilon.Eps)]
        shorter = _descending(self.system, self.upto(k - 2)) if k >= 2 else []
        atoms = [(a, epsilon._len(a) + 1) for a in shorter]
        out += [epsilon.Sum(seq) for seq in _multisets(atoms, k, 2)]
        return out

    def _level_phi(self, k):
        if k == 0:
            return [veblen.ZERO]
        out = []
        for a in self.by_len[k - 1]:
            for i in [None] + self.codes:
                try:
                    out.append(veblen.Phi(i, a))
                except HViolation:
                    pass
        principal = [t for t in self.upto(k - 1) if isinstance(t, veblen.Phi)]
        atoms = [(p, veblen._len(p)) for p in _descending(self.system, principal)]
        out += [veblen.Sum(seq) for seq in _multisets(atoms, k, 2)]
        return out

    def _level_gamma(self, k):
        if k == 0:
            return [gamma.ZERO] + [gamma.Gam(x) for x in self.codes]
        out = []
        for j in range(k):
            for a in self.by_len[j]:
                for b in self.by_len[k - 1 - j]:
                    try:
                        out.append(gamma.Phi(a, b))
                    except InvalidTerm:
                        pass
        principal = [t for t in self.upto(k - 1) if gamma.is_principal(t)]
        atoms = [(p, gamma._len(p) + 1) for p in _descending(self.system, principal)]
        out += [gamma.Sum(seq) for seq in _multisets(atoms, k, 2)]
        return out


def enumerate_terms(spec: EnumSpec) -> list:
    """All canonical terms with length <= ``spec.max_len``, ascending."""
    system = get_system(spec.system)
    gen = _Generator(system, spec.base)
    count = 0
    for _ in range(spec.max_len + 1):
        count += len(gen.grow())
        if count > spec.max_count:
            raise GuardExceeded(f"more than {spec.max_count} terms")
    terms = sorted(gen.upto(spec.max_len), key=cmp_to_key(system.compare))
    for a, b in zip(terms, terms[1:]):
        if system.compare(a, b) >= 0:
            raise InvalidTerm(f"enumeration is not strictly increasing at {a!r}, {b!r}")
    return terms


def largest_len_within(system: str, base: BaseOrder, budget: int, limit: int = 1000) -> int:
    """The largest length bound whose enumeration has at most ``budget`` terms."""
    gen = _Generator(get_system(system), base)
    count = len(gen.grow())
    if count > budget:
        raise GuardExceeded("even the length-0 terms exceed the budget")
    k = 0
    while k < limit:
        count += len(gen.grow())
        if count > budget:
            return k
        k += 1
    return k
