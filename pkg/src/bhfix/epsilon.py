"""The notation system ε_X.

Terms are ``0``, ``ε_x``, ``ω^α`` (α not of the form ε_x) and sums
``ω^{α_1}+...+ω^{α_n}`` with n > 1 and non-increasing exponents.  Every
non-zero term has a Cantor normal form *view*: the list of its exponents,
where ``ε_x`` views as ``[ε_x]`` because ω^{ε_x} = ε_x.  Comparison is
lexicographic on views, with ε_x against ε_y decided by the base order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .base import (
    EQUAL, GREATER, LESS, BaseOrder, Ordering, cached_hash, compare_ints, lex_compare, unchecked,
)
from .errors import ArityViolation, InvalidTerm, NotDecomposable, SumOrderViolation


class EpsTerm:
    __slots__ = ()


@cached_hash
@dataclass(frozen=True)
class Zero(EpsTerm):
    pass


@cached_hash
@dataclass(frozen=True)
class Eps(EpsTerm):
    x: int

    def __post_init__(self):
        if not isinstance(self.x, int) or isinstance(self.x, bool) or self.x < 0:
            raise InvalidTerm(f"{self.x!r} is not a base element code")


@cached_hash
@dataclass(frozen=True)
class Pow(EpsTerm):
    """ω^arg; the argument is never of the form ε_x."""

    arg: EpsTerm

    def __post_init__(self):
        if not isinstance(self.arg, EpsTerm):
            raise InvalidTerm(f"{self.arg!r} is not an ε_X term")
        if isinstance(self.arg, Eps):
            raise InvalidTerm("ω^(ε_x) is not a term; write ε_x")


@cached_hash
@dataclass(frozen=True)
class Sum(EpsTerm):
    """ω^{args[0]} + ... + ω^{args[-1]}."""

    args: tuple

    def __post_init__(self):
        if not isinstance(self.args, tuple) or not all(isinstance(a, EpsTerm) for a in self.args):
            raise InvalidTerm("sum arguments must be a tuple of ε_X terms")
        if len(self.args) < 2:
            raise ArityViolation("a sum needs at least two summands")
        for a, b in zip(self.args, self.args[1:]):
            if _cmp(a, b) < 0:
                raise SumOrderViolation("sum exponents must be non-increasing")


ZERO = Zero()


def view(t: EpsTerm) -> tuple:
    """Exponents of the Cantor normal form of ``t``."""
    if isinstance(t, Zero):
        return ()
    if isinstance(t, Eps):
        return (t,)
    if isinstance(t, Pow):
        return (t.arg,)
    return t.args


def unview(exponents) -> EpsTerm:
    exponents = tuple(exponents)
    if not exponents:
        return ZERO
    if len(exponents) == 1:
        return omega_pow(exponents[0])
    return Sum(exponents)


def _unview(exponents: tuple) -> EpsTerm:
    # exponents already known to be non-increasing
    if len(exponents) < 2:
        return unview(exponents)
    return unchecked(Sum, args=exponents)


def check_eps(X: BaseOrder, t: EpsTerm) -> EpsTerm:
    if not isinstance(t, EpsTerm):
        raise InvalidTerm(f"{t!r} is not an ε_X term")
    if isinstance(t, Eps):
        X.check(t.x)
    else:
        for e in view(t):
            check_eps(X, e)
    return t


@lru_cache(maxsize=1 << 20)
def _cmp(s: EpsTerm, t: EpsTerm) -> Ordering:
    if s == t:
        return EQUAL
    if isinstance(s, Zero):
        return LESS
    if isinstance(t, Zero):
        return GREATER
    if isinstance(s, Eps) and isinstance(t, Eps):
        return compare_ints(s.x, t.x)
    # at least one side is not ε_x, so every recursive call is on a proper
    # subterm of that side
    return lex_compare(view(s), view(t), _cmp)


ONE = Pow(ZERO)


def omega_pow(a: EpsTerm) -> EpsTerm:
    return a if isinstance(a, Eps) else Pow(a)


def _add(s: EpsTerm, t: EpsTerm) -> EpsTerm:
    vt = view(t)
    if not vt:
        return s
    vs = view(s)
    keep = 0
    while keep < len(vs) and _cmp(vt[0], vs[keep]) <= 0:
        keep += 1
    return _unview(vs[:keep] + vt)


def _mul(a: EpsTerm, t: EpsTerm) -> EpsTerm:
    return _unview(tuple(_add(a, e) for e in view(t)))


def _succ(t: EpsTerm) -> EpsTerm:
    return _add(t, ONE)


def _len(t: EpsTerm) -> int:
    if isinstance(t, (Zero, Eps)):
        return 0
    v = view(t)
    return sum(_len(e) for e in v) + len(v)


def cmp_eps(X: BaseOrder, s: EpsTerm, t: EpsTerm) -> Ordering:
    return _cmp(check_eps(X, s), check_eps(X, t))


def add_eps(X: BaseOrder, s: EpsTerm, t: EpsTerm) -> EpsTerm:
    return _add(check_eps(X, s), check_eps(X, t))


def omega_pow_eps(X: BaseOrder, a: EpsTerm) -> EpsTerm:
    """ω^a; the terms ε_x are fixed points."""
    return omega_pow(check_eps(X, a))


def mul_principal_eps(X: BaseOrder, a: EpsTerm, t: EpsTerm) -> EpsTerm:
    """ω^a · t: add ``a`` on the left of every exponent of ``t``."""
    return _mul(check_eps(X, a), check_eps(X, t))


def succ_eps(X: BaseOrder, t: EpsTerm) -> EpsTerm:
    return _succ(check_eps(X, t))


def omega2_eps(a: EpsTerm) -> EpsTerm:
    """ω₂(a) = ω^(ω^a)."""
    return omega_pow(omega_pow(a))


def decompose_eps(X: BaseOrder, t: EpsTerm) -> tuple[EpsTerm, EpsTerm]:
    """Write a decomposable ``t`` as ω^α + β with α, β < t.

    α is the leading exponent and β the remaining summands; a single
    remaining summand ω^{ε_x} is the term ε_x itself.
    """
    check_eps(X, t)
    if isinstance(t, (Zero, Eps)):
        raise NotDecomposable("0 and ε_x are not decomposable")
    v = view(t)
    return v[0], _unview(v[1:])


def len_eps(X: BaseOrder, t: EpsTerm) -> int:
    return _len(check_eps(X, t))


def subterms(t: EpsTerm):
    """Proper subterms (exponents of the view, recursively)."""
    if isinstance(t, (Zero, Eps)):
        return
    for e in view(t):
        yield e
        yield from subterms(e)
