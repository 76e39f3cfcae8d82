"""Textbook ordinal arithmetic below ω^(ω^n), used as an independent oracle.

An ordinal below ω^n is a coefficient vector ``(c_{n-1}, ..., c_0)`` for
``ω^{n-1}·c_{n-1} + ... + ω^0·c_0``.  An ordinal below ω^(ω^n) is a tuple of
``(exponent vector, coefficient)`` pairs with strictly decreasing exponents.
None of this code looks at the sequence representation in :mod:`bhfix.cnf`
beyond :func:`encode`.
"""

from __future__ import annotations

from collections import Counter

from .base import BaseOrder
from .cnf import Cnf2Term, CnfTerm
from .errors import TooLarge, UnsupportedBase

MAX_BASE = 8
MAX_COEFFICIENT = 2**32


def _require_finite(X: BaseOrder) -> int:
    if not X.is_finite:
        raise UnsupportedBase("the oracle only handles finite base orders")
    if X.size > MAX_BASE:
        raise TooLarge(f"oracle is capped at fin:{MAX_BASE}")
    return X.size


def _vector(n: int, t: CnfTerm) -> tuple:
    counts = Counter(t.exponents)
    if any(k >= n for k in counts):
        raise UnsupportedBase("term mentions an element outside the base order")
    if any(c >= MAX_COEFFICIENT for c in counts.values()):
        raise TooLarge("coefficient overflow")
    return tuple(counts.get(k, 0) for k in range(n - 1, -1, -1))


def encode(X: BaseOrder, t):
    """Coefficient form of a term of ω^X or ω₂(X) over a finite X."""
    n = _require_finite(X)
    if isinstance(t, CnfTerm):
        return _vector(n, t)
    if isinstance(t, Cnf2Term):
        counts = Counter(_vector(n, e) for e in t.exponents)
        return tuple(sorted(counts.items(), reverse=True))
    raise TypeError(f"cannot encode {t!r}")


def _sign(a, b) -> int:
    return (a > b) - (a < b)


def compare1(u: tuple, v: tuple) -> int:
    # higher powers dominate; vectors are stored highest power first
    return _sign(u, v)


def compare2(u: tuple, v: tuple) -> int:
    for (e, c), (f, d) in zip(u, v):
        if e != f:
            return compare1(e, f)
        if c != d:
            return _sign(c, d)
    return _sign(len(u), len(v))


def add1(u: tuple, v: tuple) -> tuple:
    """α + β below ω^n: coefficients of α above the leading power of β
    survive, the leading coefficients add, the rest comes from β."""
    for p, c in enumerate(v):
        if c:
            return u[:p] + (u[p] + c,) + v[p + 1:]
    return u


def add2(u: tuple, v: tuple) -> tuple:
    if not v:
        return u
    lead, d = v[0]
    head = []
    for e, c in u:
        w = compare1(e, lead)
        if w > 0:
            head.append((e, c))
        elif w == 0:
            d += c
            break
        else:
            break
    return tuple(head) + ((lead, d),) + v[1:]


def mul_principal2(a: tuple, v: tuple) -> tuple:
    """ω^a · β by left distributivity over the Cantor normal form of β."""
    out: list = []
    for e, c in v:
        f = add1(a, e)
        if out and out[-1][0] == f:
            out[-1] = (f, out[-1][1] + c)
        else:
            out.append((f, c))
    return tuple(out)
