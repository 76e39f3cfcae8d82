"""Cantor normal forms: the orders ω^X and ω₂(X) = ω^(ω^X).

A :class:`CnfTerm` ``ω^{x_0}+...+ω^{x_{n-1}}`` is stored as its
non-increasing tuple of base codes, and a :class:`Cnf2Term` as its
non-increasing tuple of :class:`CnfTerm` exponents.  Both orders are
lexicographic, with a proper prefix smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .base import BaseOrder, Ordering, cached_hash, compare_ints, lex_compare
from .errors import InvalidTerm, NotALimit


@cached_hash
@dataclass(frozen=True)
class CnfTerm:
    exponents: tuple = ()

    def __post_init__(self):
        es = self.exponents
        if not isinstance(es, tuple):
            raise InvalidTerm("exponents must be a tuple")
        for e in es:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise InvalidTerm(f"{e!r} is not a base element code")
        for a, b in zip(es, es[1:]):
            if b > a:
                raise InvalidTerm(f"exponents {es} are not non-increasing")


@cached_hash
@dataclass(frozen=True)
class Cnf2Term:
    exponents: tuple = ()

    def __post_init__(self):
        es = self.exponents
        if not isinstance(es, tuple) or not all(isinstance(e, CnfTerm) for e in es):
            raise InvalidTerm("exponents must be a tuple of CnfTerm")
        for a, b in zip(es, es[1:]):
            if _cmp1(a, b) < 0:
                raise InvalidTerm("exponents are not non-increasing")


ZERO = CnfTerm()
ZERO2 = Cnf2Term()
ONE2 = Cnf2Term((ZERO,))


def omega_power(x: int) -> CnfTerm:
    """ω^x as an element of ω^X."""
    return CnfTerm((x,))


def omega2(x: int) -> CnfTerm:
    """The exponent of ω₂(x) = ω^(ω^x); use with :func:`mul_principal`."""
    return omega_power(x)


def check_cnf(X: BaseOrder, t: CnfTerm) -> CnfTerm:
    if not isinstance(t, CnfTerm):
        raise InvalidTerm(f"{t!r} is not a term of ω^X")
    for e in t.exponents:
        X.check(e)
    return t


def check_cnf2(X: BaseOrder, t: Cnf2Term) -> Cnf2Term:
    if not isinstance(t, Cnf2Term):
        raise InvalidTerm(f"{t!r} is not a term of ω₂(X)")
    for e in t.exponents:
        check_cnf(X, e)
    return t


def _cmp1(s: CnfTerm, t: CnfTerm) -> Ordering:
    return lex_compare(s.exponents, t.exponents, compare_ints)


def _cmp2(s: Cnf2Term, t: Cnf2Term) -> Ordering:
    return lex_compare(s.exponents, t.exponents, _cmp1)


def _add1(s: CnfTerm, t: CnfTerm) -> CnfTerm:
    if not t.exponents:
        return s
    y0 = t.exponents[0]
    keep = 0
    while keep < len(s.exponents) and y0 <= s.exponents[keep]:
        keep += 1
    return CnfTerm(s.exponents[:keep] + t.exponents)


def _add2(s: Cnf2Term, t: Cnf2Term) -> Cnf2Term:
    if not t.exponents:
        return s
    y0 = t.exponents[0]
    keep = 0
    while keep < len(s.exponents) and _cmp1(y0, s.exponents[keep]) <= 0:
        keep += 1
    return Cnf2Term(s.exponents[:keep] + t.exponents)


def _mul(a: CnfTerm, t: Cnf2Term) -> Cnf2Term:
    return Cnf2Term(tuple(_add1(a, b) for b in t.exponents))


def cmp_cnf(X: BaseOrder, s: CnfTerm, t: CnfTerm) -> Ordering:
    return _cmp1(check_cnf(X, s), check_cnf(X, t))


def add_cnf(X: BaseOrder, s: CnfTerm, t: CnfTerm) -> CnfTerm:
    """Keep the exponents of ``s`` that are >= the leading exponent of ``t``,
    then append ``t``."""
    return _add1(check_cnf(X, s), check_cnf(X, t))


def cmp_cnf2(X: BaseOrder, s: Cnf2Term, t: Cnf2Term) -> Ordering:
    return _cmp2(check_cnf2(X, s), check_cnf2(X, t))


def add_cnf2(X: BaseOrder, s: Cnf2Term, t: Cnf2Term) -> Cnf2Term:
    return _add2(check_cnf2(X, s), check_cnf2(X, t))


def succ_cnf2(X: BaseOrder, t: Cnf2Term) -> Cnf2Term:
    return _add2(check_cnf2(X, t), ONE2)


def mul_principal(X: BaseOrder, a: CnfTerm, t: Cnf2Term) -> Cnf2Term:
    """ω^a · t, computed by adding ``a`` on the left of every exponent of t.

    Addition is monotone in its right argument, so the exponents stay
    non-increasing.
    """
    return _mul(check_cnf(X, a), check_cnf2(X, t))


class Classification(NamedTuple):
    kind: str  # "zero" | "successor" | "limit"
    pred: Optional[Cnf2Term] = None


def classify(X: BaseOrder, t: Cnf2Term) -> Classification:
    check_cnf2(X, t)
    if not t.exponents:
        return Classification("zero")
    if t.exponents[-1] == ZERO:
        return Classification("successor", Cnf2Term(t.exponents[:-1]))
    return Classification("limit")


def _left_subtract(x: int, beta: CnfTerm) -> CnfTerm:
    # the unique gamma with ω^x + gamma = beta, given ω^x <= beta
    if beta.exponents and beta.exponents[0] == x:
        return CnfTerm(beta.exponents[1:])
    return beta


def decompose_limit(X: BaseOrder, t: Cnf2Term) -> tuple[int, Cnf2Term]:
    """Write a limit ``t`` as ω₂(x)·η with 0 < η < t.

    ``x`` is the leading base element of the last exponent of ``t``; η is
    obtained by subtracting ω^x on the left of every exponent.
    """
    if classify(X, t).kind != "limit":
        raise NotALimit("only limit elements decompose as ω₂(x)·η")
    x = t.exponents[-1].exponents[0]
    eta = Cnf2Term(tuple(_left_subtract(x, b) for b in t.exponents))
    return x, eta


def len_l(X: BaseOrder, t: CnfTerm) -> int:
    return len(check_cnf(X, t).exponents)


def _len2(t: Cnf2Term) -> int:
    return sum(len(e.exponents) for e in t.exponents) + len(t.exponents)


def len_L(X: BaseOrder, t: Cnf2Term) -> int:
    return _len2(check_cnf2(X, t))


def embed_omega_power(X: BaseOrder, alpha: CnfTerm) -> Cnf2Term:
    """The embedding ω^X → ω₂(X), α ↦ ω^α."""
    return Cnf2Term((check_cnf(X, alpha),))

