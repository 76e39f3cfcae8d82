"""The notation system φ(1+X)0 for values of the binary Veblen function.

Terms are ``0``, ``φ_x α`` with x in 1+X and h(α) <= x, and sums of at
least two principal terms ``φ_x α`` in non-increasing order.  The index
``None`` is the bottom element of 1+X, so ``Phi(None, a)`` is ω^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .base import (
    EQUAL, GREATER, LESS, BaseOrder, ExtElem, Ordering, cached_hash, check_ext, compare_ext,
    lex_compare, unchecked,
)
from .errors import ArityViolation, HViolation, InvalidTerm, NotDecomposable, SumOrderViolation


class VebTerm:
    __slots__ = ()


@cached_hash
@dataclass(frozen=True)
class Zero(VebTerm):
    pass


@cached_hash
@dataclass(frozen=True)
class Phi(VebTerm):
    index: Optional[int]
    arg: VebTerm

    def __post_init__(self):
        i = self.index
        if i is not None and (not isinstance(i, int) or isinstance(i, bool) or i < 0):
            raise InvalidTerm(f"{i!r} is not an element of 1+X")
        if not isinstance(self.arg, VebTerm):
            raise InvalidTerm(f"{self.arg!r} is not a φ(1+X)0 term")
        if compare_ext(h(self.arg), i) > 0:
            raise HViolation(
                f"h(argument) = {_ext_str(h(self.arg))} exceeds the index {_ext_str(i)}"
            )


@cached_hash
@dataclass(frozen=True)
class Sum(VebTerm):
    args: tuple

    def __post_init__(self):
        if not isinstance(self.args, tuple) or not all(isinstance(a, Phi) for a in self.args):
            raise InvalidTerm("summands must be a tuple of principal terms φ_x α")
        if len(self.args) < 2:
            raise ArityViolation("a sum needs at least two summands")
        for a, b in zip(self.args, self.args[1:]):
            if _cmp_phi(a, b) < 0:
                raise SumOrderViolation("summands must be non-increasing")


def _ext_str(i: ExtElem) -> str:
    return "⊥" if i is None else f"1+x{i}"


ZERO = Zero()


def h(t: VebTerm) -> ExtElem:
    return t.index if isinstance(t, Phi) else None


def h_veb(X: BaseOrder, t: VebTerm) -> ExtElem:
    return h(check_veb(X, t))


def summands(t: VebTerm) -> tuple:
    if isinstance(t, Zero):
        return ()
    if isinstance(t, Phi):
        return (t,)
    return t.args


def _join(ps: tuple):
    # summands already known to be non-increasing
    if not ps:
        return ZERO
    return ps[0] if len(ps) == 1 else unchecked(Sum, args=ps)


def from_summands(ps) -> VebTerm:
    ps = tuple(ps)
    if not ps:
        return ZERO
    return ps[0] if len(ps) == 1 else Sum(ps)


def check_veb(X: BaseOrder, t: VebTerm) -> VebTerm:
    if not isinstance(t, VebTerm):
        raise InvalidTerm(f"{t!r} is not a φ(1+X)0 term")
    for p in summands(t):
        check_ext(X, p.index)
        check_veb(X, p.arg)
    return t


def validate_veb(X: BaseOrder, raw) -> VebTerm:
    """Build a term from a raw tree, enforcing every grammar condition.

    Raw trees are ``"0"``, ``("phi", index, raw)`` with index ``None`` for
    the bottom element, or ``("sum", raw, raw, ...)``.
    """
    if isinstance(raw, VebTerm):
        return check_veb(X, raw)
    if raw == "0" or raw == ("0",):
        return ZERO
    if isinstance(raw, tuple) and raw and raw[0] == "phi" and len(raw) == 3:
        return Phi(check_ext(X, raw[1]), validate_veb(X, raw[2]))
    if isinstance(raw, tuple) and raw and raw[0] == "sum":
        parts = [validate_veb(X, r) for r in raw[1:]]
        if any(not isinstance(p, Phi) for p in parts):
            raise InvalidTerm("summands must be principal terms")
        return Sum(tuple(parts))
    raise InvalidTerm(f"unrecognised raw term {raw!r}")


def _cmp_phi(s: Phi, t: Phi) -> Ordering:
    # φ_a b < φ_c d  iff  a < c and b < φ_c d,  or a = c and b < d,
    #                 or  a > c and φ_a b < d
    c = compare_ext(s.index, t.index)
    if c < 0:
        return LESS if _cmp(s.arg, t) < 0 else GREATER
    if c > 0:
        return LESS if _cmp(s, t.arg) < 0 else GREATER
    return _cmp(s.arg, t.arg)


@lru_cache(maxsize=1 << 20)
def _cmp(s: VebTerm, t: VebTerm) -> Ordering:
    if s == t:
        return EQUAL
    return lex_compare(summands(s), summands(t), _cmp_phi)


ONE = Phi(None, ZERO)


def cmp_veb(X: BaseOrder, s: VebTerm, t: VebTerm) -> Ordering:
    return _cmp(check_veb(X, s), check_veb(X, t))


def omega_pow(a: VebTerm) -> VebTerm:
    if isinstance(a, Phi) and a.index is not None:
        return a
    # h(a) = ⊥ in the remaining cases
    return unchecked(Phi, index=None, arg=a)


def exponent(p: Phi) -> VebTerm:
    """The α with ω^α = p; terms φ_{1+x} β are their own exponent."""
    return p.arg if p.index is None else p


def _add(s: VebTerm, t: VebTerm) -> VebTerm:
    pt = summands(t)
    if not pt:
        return s
    ps = summands(s)
    keep = 0
    while keep < len(ps) and _cmp_phi(pt[0], ps[keep]) <= 0:
        keep += 1
    return _join(ps[:keep] + pt)


def _mul(a: VebTerm, t: VebTerm) -> VebTerm:
    return _join(tuple(omega_pow(_add(a, exponent(q))) for q in summands(t)))


def _succ(t: VebTerm) -> VebTerm:
    return _add(t, ONE)


def _len(t: VebTerm) -> int:
    ps = summands(t)
    return sum(_len(p.arg) for p in ps) + len(ps)


def omega_pow_veb(X: BaseOrder, a: VebTerm) -> VebTerm:
    return omega_pow(check_veb(X, a))


def add_veb(X: BaseOrder, s: VebTerm, t: VebTerm) -> VebTerm:
    return _add(check_veb(X, s), check_veb(X, t))


def succ_veb(X: BaseOrder, t: VebTerm) -> VebTerm:
    return _succ(check_veb(X, t))


def mul_principal_veb(X: BaseOrder, a: VebTerm, t: VebTerm) -> VebTerm:
    """ω^a · t."""
    return _mul(check_veb(X, a), check_veb(X, t))


def omega2_veb(a: VebTerm) -> VebTerm:
    return omega_pow(omega_pow(a))


def decompose_veb(X: BaseOrder, t: VebTerm) -> tuple[VebTerm, VebTerm]:
    check_veb(X, t)
    if isinstance(t, Zero) or (isinstance(t, Phi) and t.index is not None):
        raise NotDecomposable("0 and φ_{1+x} α are not decomposable")
    ps = summands(t)
    return exponent(ps[0]), _join(ps[1:])


def len_veb(X: BaseOrder, t: VebTerm) -> int:
    return _len(check_veb(X, t))


def subterms(t: VebTerm):
    """Proper subterms: summands of a sum, arguments of φ, recursively."""
    if isinstance(t, Phi):
        yield t.arg
        yield from subterms(t.arg)
    elif isinstance(t, Sum):
        for p in t.args:
            yield p
            yield from subterms(p)
