"""Registry of the five notation systems behind a common interface."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import cnf, epsilon, gamma, veblen
from .base import BaseOrder
from .errors import UsageError


@dataclass(frozen=True)
class NotationSystem:
    """Uniform access to one notation system.

    ``compare`` and the arithmetic fields skip the base-order range check;
    ``check`` performs it.
    """

    name: str
    title: str
    term_type: type
    zero: object
    check: Callable
    compare: Callable
    length: Callable
    add: Optional[Callable] = None
    succ: Optional[Callable] = None
    omega_pow: Optional[Callable] = None
    mul: Optional[Callable] = None
    subterms: Optional[Callable] = None

    def cmp(self, X: BaseOrder, s, t):
        return self.compare(self.check(X, s), self.check(X, t))

    def omega2(self, a):
        return self.omega_pow(self.omega_pow(a))


W = NotationSystem(
    name="w",
    title="ω^X",
    term_type=cnf.CnfTerm,
    zero=cnf.ZERO,
    check=cnf.check_cnf,
    compare=cnf._cmp1,
    length=lambda t: len(t.exponents),
    add=cnf._add1,
)

W2 = NotationSystem(
    name="w2",
    title="ω₂(X)",
    term_type=cnf.Cnf2Term,
    zero=cnf.ZERO2,
    check=cnf.check_cnf2,
    compare=cnf._cmp2,
    length=cnf._len2,
    add=cnf._add2,
    succ=lambda t: cnf._add2(t, cnf.ONE2),
    mul=cnf._mul,
)

EPS = NotationSystem(
    name="eps",
    title="ε_X",
    term_type=epsilon.EpsTerm,
    zero=epsilon.ZERO,
    check=epsilon.check_eps,
    compare=epsilon._cmp,
    length=epsilon._len,
    add=epsilon._add,
    succ=epsilon._succ,
    omega_pow=epsilon.omega_pow,
    mul=epsilon._mul,
    subterms=epsilon.subterms,
)

PHI = NotationSystem(
    name="phi",
    title="φ(1+X)0",
    term_type=veblen.VebTerm,
    zero=veblen.ZERO,
    check=veblen.check_veb,
    compare=veblen._cmp,
    length=veblen._len,
    add=veblen._add,
    succ=veblen._succ,
    omega_pow=veblen.omega_pow,
    mul=veblen._mul,
    subterms=veblen.subterms,
)

GAMMA = NotationSystem(
    name="gamma",
    title="Γ_X",
    term_type=gamma.GammaTerm,
    zero=gamma.ZERO,
    check=gamma.check_gamma,
    compare=gamma._cmp,
    length=gamma._len,
    add=gamma._add,
    succ=gamma._succ,
    omega_pow=gamma.omega_pow,
    mul=gamma._mul,
    subterms=gamma.subterms,
)

SYSTEMS = {s.name: s for s in (W, W2, EPS, PHI, GAMMA)}


def get_system(name: str) -> NotationSystem:
    try:
        return SYSTEMS[name]
    except KeyError:
        raise UsageError(f"unknown system {name!r}; choose from {', '.join(SYSTEMS)}") from None
