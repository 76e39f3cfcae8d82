"""Base orders X, the extended order 1+X, finite test orders Y, and the
sum/product orders used by the order transformations.

Elements of X are natural-number codes ordered numerically.  An element of
1+X is either ``None`` (the bottom element) or a code of X.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, fields
from enum import IntEnum
from typing import Any, Callable, Iterator, Optional, Protocol, Sequence

from .errors import ElementOutOfRange, MalformedElement, TooLarge, UsageError

#: element of 1+X: ``None`` is the bottom element, an int is a code of X
ExtElem = Optional[int]
BOTTOM: ExtElem = None

MAX_SUBORDER_SIZE = 20


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]

    def __neg__(self) -> "Ordering":
        return Ordering(-self.value)


LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


def compare_ints(a: int, b: int) -> Ordering:
    if a < b:
        return LESS
    return GREATER if a > b else EQUAL


def lex_compare(xs: Sequence, ys: Sequence, cmp: Callable[[Any, Any], int]) -> Ordering:
    """Lexicographic comparison; a proper prefix is smaller."""
    for a, b in zip(xs, ys):
        c = cmp(a, b)
        if c:
            return LESS if c < 0 else GREATER
    return compare_ints(len(xs), len(ys))


def cached_hash(cls):
    """Memoize the hash of a frozen dataclass.

    Terms are nested deeply and used as cache keys, so recomputing the
    structural hash on every lookup dominates comparison time.
    """
    names = tuple(f.name for f in fields(cls))

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((cls.__name__,) + tuple(getattr(self, n) for n in names))
            object.__setattr__(self, "_hash", h)
            return h

    cls.__hash__ = __hash__
    return cls


def unchecked(cls, **values):
    """Build a frozen dataclass instance without running its validation.

    Only for internal arithmetic whose results are valid by construction.
    """
    obj = object.__new__(cls)
    for k, v in values.items():
        object.__setattr__(obj, k, v)
    return obj


@dataclass(frozen=True)
class BaseOrder:
    """The parameter order X: ``finite(n)`` (codes 0..n-1) or ``omega``."""

    size: Optional[int] = None

    def __post_init__(self):
        if self.size is not None and self.size < 0:
            raise ValueError("finite base order needs a non-negative size")

    @classmethod
    def finite(cls, n: int) -> "BaseOrder":
        return cls(n)

    @classmethod
    def omega(cls) -> "BaseOrder":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "BaseOrder":
        text = text.strip()
        if text == "omega":
            return cls.omega()
        m = re.fullmatch(r"fin:(\d+)", text)
        if not m:
            raise UsageError(f"bad base order {text!r}; expected fin:N or omega")
        return cls.finite(int(m.group(1)))

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def check(self, code: int) -> int:
        if not isinstance(code, int) or isinstance(code, bool) or code < 0:
            raise ElementOutOfRange(f"{code!r} is not an element code")
        if self.size is not None and code >= self.size:
            raise ElementOutOfRange(f"element {code} is not in fin:{self.size}")
        return code

    def elements(self) -> range:
        if self.size is None:
            raise TooLarge("omega has infinitely many elements")
        return range(self.size)

    def __str__(self) -> str:
        return "omega" if self.size is None else f"fin:{self.size}"


def cmp_base(X: BaseOrder, a: int, b: int) -> Ordering:
    X.check(a)
    X.check(b)
    return compare_ints(a, b)


def check_ext(X: BaseOrder, p: ExtElem) -> ExtElem:
    if p is not None:
        X.check(p)
    return p


def compare_ext(p: ExtElem, q: ExtElem) -> Ordering:
    if p is None:
        return EQUAL if q is None else LESS
    if q is None:
        return GREATER
    return compare_ints(p, q)


def cmp_ext(X: BaseOrder, p: ExtElem, q: ExtElem) -> Ordering:
    """Compare in 1+X, where the bottom element is below every code."""
    check_ext(X, p)
    check_ext(X, q)
    return compare_ext(p, q)


class OrderHandle(Protocol):
    """A total order given by a comparison, optionally with a finite carrier."""

    def compare(self, a: Any, b: Any) -> int: ...


@dataclass(frozen=True)
class TermOrder:
    """Order handle backed by a comparison function on (hashable) values.

    ``rank`` optionally maps a collection of values to order-preserving
    integer ranks faster than sorting with ``compare`` would.
    """

    compare: Callable[[Any, Any], int]
    carrier: Optional[tuple] = None
    rank: Optional[Callable[[Any], dict]] = None

    def enumerate(self, bound: Optional[int] = None) -> tuple:
        if self.carrier is None:
            raise TooLarge("order has no enumerable carrier")
        return self.carrier if bound is None else self.carrier[:bound]


@dataclass(frozen=True)
class FiniteOrder:
    """The finite order 0 < 1 < ... < size-1."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be non-negative")

    def check(self, y: Any) -> int:
        if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < self.size:
            raise MalformedElement(f"{y!r} is not an element of a {self.size}-element order")
        return y

    def compare(self, a: int, b: int) -> Ordering:
        return compare_ints(self.check(a), self.check(b))

    def enumerate(self, bound: Optional[int] = None) -> tuple:
        n = self.size if bound is None else min(bound, self.size)
        return tuple(range(n))


@dataclass(frozen=True)
class SuborderMask:
    parent: FiniteOrder
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for y in self.members:
            self.parent.check(y)

    def __contains__(self, y) -> bool:
        return y in self.members

    def issubset(self, other: "SuborderMask") -> bool:
        return self.members <= other.members


def enumerate_suborders(Y: FiniteOrder) -> Iterator[SuborderMask]:
    """All 2^|Y| suborders, in order of their bitmask value."""
    if Y.size > MAX_SUBORDER_SIZE:
        raise TooLarge(f"refusing to enumerate 2^{Y.size} suborders")
    for bits in range(1 << Y.size):
        yield SuborderMask(Y, frozenset(i for i in range(Y.size) if bits >> i & 1))


def sum_product_cmp(kind: str, A: OrderHandle, B: OrderHandle, u, v) -> Ordering:
    """Compare in the order sum A+B or the order product A×B.

    Sum elements are pairs ``(0, a)`` / ``(1, b)``; every left element lies
    below every right element.  Product elements are pairs ``(a, b)``,
    ordered lexicographically with the first coordinate dominant.
    """
    for w in (u, v):
        if not (isinstance(w, tuple) and len(w) == 2):
            raise MalformedElement(f"{w!r} is not a pair")
    if kind == "sum":
        (i, a), (j, b) = u, v
        if i not in (0, 1) or j not in (0, 1):
            raise MalformedElement("sum elements are tagged 0 or 1")
        if i != j:
            return compare_ints(i, j)
        return Ordering((A if i == 0 else B).compare(a, b))
    if kind == "product":
        c = A.compare(u[0], v[0])
        return Ordering(c) if c else Ordering(B.compare(u[1], v[1]))
    raise UsageError(f"unknown order construction {kind!r}")
