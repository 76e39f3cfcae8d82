"""The notation system Γ_X for ordinals below the X-th Γ-number.

Terms are ``0``, ``Γ_x``, ``φ_α β`` (with h(β) <= α, and β != 0 when α is
some Γ_x) and sums of at least two principal terms.  The principal terms
(``Gam`` and ``Phi``) form the class 𝐇.  ``Phi(ZERO, b)`` is ω^b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .base import (
    EQUAL, GREATER, LESS, BaseOrder, Ordering, cached_hash, compare_ints, lex_compare, unchecked,
)
from .errors import (
    ArityViolation, BetaZeroViolation, HViolation, InvalidTerm, NotASum, SumOrderViolation,
)


class GammaTerm:
    __slots__ = ()


@cached_hash
@dataclass(frozen=True)
class Zero(GammaTerm):
    pass


@cached_hash
@dataclass(frozen=True)
class Gam(GammaTerm):
    x: int

    def __post_init__(self):
        if not isinstance(self.x, int) or isinstance(self.x, bool) or self.x < 0:
            raise InvalidTerm(f"{self.x!r} is not a base element code")


@cached_hash
@dataclass(frozen=True)
class Phi(GammaTerm):
    a: GammaTerm
    b: GammaTerm

    def __post_init__(self):
        if not (isinstance(self.a, GammaTerm) and isinstance(self.b, GammaTerm)):
            raise InvalidTerm("φ needs two Γ_X terms")
        if _cmp(h(self.b), self.a) > 0:
            raise HViolation("h(β) must not exceed the index α in φ_α β")
        if isinstance(self.a, Gam) and isinstance(self.b, Zero):
            raise BetaZeroViolation("φ_{Γ_x} 0 is not a term (it would equal Γ_x)")


@cached_hash
@dataclass(frozen=True)
class Sum(GammaTerm):
    args: tuple

    def __post_init__(self):
        if not isinstance(self.args, tuple) or not all(is_principal(a) for a in self.args):
            raise InvalidTerm("summands must be a tuple of principal terms")
        if len(self.args) < 2:
            raise ArityViolation("a sum needs at least two summands")
        for a, b in zip(self.args, self.args[1:]):
            if _cmp_h(a, b) < 0:
                raise SumOrderViolation("summands must be non-increasing")


ZERO = Zero()


def is_principal(t) -> bool:
    return isinstance(t, (Gam, Phi))


def h(t: GammaTerm) -> GammaTerm:
    if isinstance(t, Gam):
        return t
    if isinstance(t, Phi):
        return t.a
    return ZERO


def summands(t: GammaTerm) -> tuple:
    if isinstance(t, Zero):
        return ()
    if isinstance(t, Sum):
        return t.args
    return (t,)


def _join(ps: tuple):
    # summands already known to be non-increasing
    if not ps:
        return ZERO
    return ps[0] if len(ps) == 1 else unchecked(Sum, args=ps)


def from_summands(ps) -> GammaTerm:
    ps = tuple(ps)
    if not ps:
        return ZERO
    return ps[0] if len(ps) == 1 else Sum(ps)


def check_gamma(X: BaseOrder, t: GammaTerm) -> GammaTerm:
    if not isinstance(t, GammaTerm):
        raise InvalidTerm(f"{t!r} is not a Γ_X term")
    if isinstance(t, Gam):
        X.check(t.x)
    elif isinstance(t, Phi):
        check_gamma(X, t.a)
        check_gamma(X, t.b)
    elif isinstance(t, Sum):
        for p in t.args:
            check_gamma(X, p)
    return t


def h_gamma(X: BaseOrder, t: GammaTerm) -> GammaTerm:
    return h(check_gamma(X, t))


def validate_gamma(X: BaseOrder, raw) -> GammaTerm:
    """Build a term from a raw tree: ``"0"``, ``("G", x)``,
    ``("phi", raw, raw)`` or ``("sum", raw, ...)``."""
    if isinstance(raw, GammaTerm):
        return check_gamma(X, raw)
    if raw == "0" or raw == ("0",):
        return ZERO
    if isinstance(raw, tuple) and len(raw) == 2 and raw[0] == "G":
        return Gam(X.check(raw[1]))
    if isinstance(raw, tuple) and len(raw) == 3 and raw[0] == "phi":
        return Phi(validate_gamma(X, raw[1]), validate_gamma(X, raw[2]))
    if isinstance(raw, tuple) and raw and raw[0] == "sum":
        return Sum(tuple(validate_gamma(X, r) for r in raw[1:]))
    raise InvalidTerm(f"unrecognised raw term {raw!r}")


def _cmp_h(s: GammaTerm, t: GammaTerm) -> Ordering:
    """Compare two principal terms."""
    if isinstance(s, Gam):
        if isinstance(t, Gam):
            return compare_ints(s.x, t.x)
        # Γ-numbers are closed under φ: φ_a b < Γ_x iff a, b < Γ_x
        return GREATER if _cmp(t.a, s) < 0 and _cmp(t.b, s) < 0 else LESS
    if isinstance(t, Gam):
        return LESS if _cmp(s.a, t) < 0 and _cmp(s.b, t) < 0 else GREATER
    c = _cmp(s.a, t.a)
    if c < 0:
        return LESS if _cmp(s.b, t) < 0 else GREATER
    if c > 0:
        return LESS if _cmp(s, t.b) < 0 else GREATER
    return _cmp(s.b, t.b)


@lru_cache(maxsize=1 << 20)
def _cmp(s: GammaTerm, t: GammaTerm) -> Ordering:
    if s == t:
        return EQUAL
    return lex_compare(summands(s), summands(t), _cmp_h)


ONE = Phi(ZERO, ZERO)


def cmp_gamma(X: BaseOrder, s: GammaTerm, t: GammaTerm) -> Ordering:
    return _cmp(check_gamma(X, s), check_gamma(X, t))


def is_epsilon_like(p: GammaTerm) -> bool:
    return isinstance(p, Gam) or (isinstance(p, Phi) and not isinstance(p.a, Zero))


def omega_pow(a: GammaTerm) -> GammaTerm:
    # h(a) = 0 whenever a is not ε-like, so φ_0 a is a term
    return a if is_epsilon_like(a) else unchecked(Phi, a=ZERO, b=a)


def exponent(p: GammaTerm) -> GammaTerm:
    return p if is_epsilon_like(p) else p.b


def _add(s: GammaTerm, t: GammaTerm) -> GammaTerm:
    pt = summands(t)
    if not pt:
        return s
    ps = summands(s)
    keep = 0
    while keep < len(ps) and _cmp_h(pt[0], ps[keep]) <= 0:
        keep += 1
    return _join(ps[:keep] + pt)


def _mul(a: GammaTerm, t: GammaTerm) -> GammaTerm:
    return _join(tuple(omega_pow(_add(a, exponent(q))) for q in summands(t)))


def _succ(t: GammaTerm) -> GammaTerm:
    return _add(t, ONE)


def _len(t: GammaTerm) -> int:
    if isinstance(t, Phi):
        return _len(t.a) + _len(t.b) + 1
    if isinstance(t, Sum):
        return sum(_len(p) for p in t.args) + len(t.args)
    return 0


def omega_pow_gamma(X: BaseOrder, a: GammaTerm) -> GammaTerm:
    return omega_pow(check_gamma(X, a))


def add_gamma(X: BaseOrder, s: GammaTerm, t: GammaTerm) -> GammaTerm:
    return _add(check_gamma(X, s), check_gamma(X, t))


def succ_gamma(X: BaseOrder, t: GammaTerm) -> GammaTerm:
    return _succ(check_gamma(X, t))


def mul_principal_gamma(X: BaseOrder, a: GammaTerm, t: GammaTerm) -> GammaTerm:
    """ω^a · t."""
    return _mul(check_gamma(X, a), check_gamma(X, t))


def omega2_gamma(a: GammaTerm) -> GammaTerm:
    return omega_pow(omega_pow(a))


def decompose_head(X: BaseOrder, t: GammaTerm) -> tuple[GammaTerm, GammaTerm]:
    """Split a sum into its first summand and the rest."""
    check_gamma(X, t)
    if not isinstance(t, Sum):
        raise NotASum("only sums split as α + β with α in 𝐇")
    return t.args[0], _join(t.args[1:])


def len_gamma(X: BaseOrder, t: GammaTerm) -> int:
    return _len(check_gamma(X, t))


def subterms(t: GammaTerm):
    if isinstance(t, Phi):
        for u in (t.a, t.b):
            yield u
            yield from subterms(u)
    elif isinstance(t, Sum):
        for p in t.args:
            yield p
            yield from subterms(p)
