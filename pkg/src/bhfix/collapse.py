"""The order transformations T^ω, T^ε, T^φ, T^Γ and their collapses.

For a tag and an order Y the transformed order is

    W:  1 + (1+X) × Y          elements ⊥, ⟨⊥,y⟩, ⟨1+x,y⟩
    E:  1 + Y² + X             elements ⊥, ⟨y0,y1⟩, x
    P:  1 + Y² + X × Y         elements ⊥, ⟨y0,y1⟩, ⟨x,y⟩
    G:  1 + 2 × Y² + X         elements ⊥, ⟨i,y0,y1⟩, x

(the form of P is the sum-of-products version of 1+(Y+X)×Y).  Summands are
ordered left to right and products lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cmp_to_key
from typing import Any, Callable, Iterable, Optional

import numpy as np

from . import cnf, epsilon, gamma, veblen
from .base import (
    BaseOrder, FiniteOrder, Ordering, TermOrder, cached_hash, compare_ext, compare_ints,
    enumerate_suborders,
)
from .errors import CollapseFailure, MalformedElement, PartialTheta, UnmappedElement
from .ranking import rank_terms
from .systems import NotationSystem, get_system


class Tag(str, Enum):
    W = "W"
    E = "E"
    P = "P"
    G = "G"

    @classmethod
    def parse(cls, text) -> "Tag":
        if isinstance(text, Tag):
            return text
        try:
            return cls(str(text).upper())
        except ValueError:
            raise MalformedElement(f"unknown transformation tag {text!r}") from None


#: the notation system that is the tag's own fixed point
SYSTEM_OF = {Tag.W: "w2", Tag.E: "eps", Tag.P: "phi", Tag.G: "gamma"}
TAG_OF = {v: k for k, v in SYSTEM_OF.items()}


class TElem:
    __slots__ = ()


@cached_hash
@dataclass(frozen=True)
class Bot(TElem):
    pass


@cached_hash
@dataclass(frozen=True)
class Pair(TElem):
    """⟨left, right⟩: for W ``left`` is in 1+X, otherwise both are in Y."""

    left: Any
    right: Any


@cached_hash
@dataclass(frozen=True)
class XPair(TElem):
    """⟨x, y⟩ in the X×Y summand of T^φ."""

    x: int
    y: Any


@cached_hash
@dataclass(frozen=True)
class Triple(TElem):
    i: int
    y0: Any
    y1: Any


@cached_hash
@dataclass(frozen=True)
class Base(TElem):
    x: int


BOT = Bot()

_KINDS = {
    Tag.W: (Bot, Pair),
    Tag.E: (Bot, Pair, Base),
    Tag.P: (Bot, Pair, XPair),
    Tag.G: (Bot, Triple, Base),
}


def kind(tag: Tag, e: TElem) -> str:
    """Name of the summand of T(Y) that contains ``e``."""
    if isinstance(e, Triple):
        return f"tri{e.i}"
    return type(e).__name__.lower()


def _summand(tag: Tag, e: TElem) -> int:
    # position of e's summand, left to right; T^Γ has two copies of Y²
    if isinstance(e, Triple):
        return 1 + e.i
    if tag is Tag.G and isinstance(e, Base):
        return 3
    return _KINDS[tag].index(type(e))


def y_components(tag: Tag, e: TElem) -> tuple:
    if isinstance(e, Pair):
        return (e.right,) if tag is Tag.W else (e.left, e.right)
    if isinstance(e, XPair):
        return (e.y,)
    if isinstance(e, Triple):
        return (e.y0, e.y1)
    return ()


def check_telem(tag: Tag, X: BaseOrder, e: TElem, check_y: Optional[Callable] = None) -> TElem:
    tag = Tag.parse(tag)
    if not isinstance(e, _KINDS[tag]):
        raise MalformedElement(f"{e!r} is not an element of T^{tag.value}")
    if isinstance(e, Pair) and tag is Tag.W and e.left is not None:
        X.check(e.left)
    if isinstance(e, (XPair, Base)):
        X.check(e.x)
    if isinstance(e, Triple) and e.i not in (0, 1):
        raise MalformedElement("the first component of a triple is 0 or 1")
    if check_y is not None:
        for y in y_components(tag, e):
            check_y(y)
    return e


def _cmp_unchecked(tag: Tag, cmp_y: Callable, e1: TElem, e2: TElem) -> Ordering:
    c = compare_ints(_summand(tag, e1), _summand(tag, e2))
    if c:
        return c
    if isinstance(e1, Pair):
        if tag is Tag.W:
            c = compare_ext(e1.left, e2.left)
        else:
            c = cmp_y(e1.left, e2.left)
        return Ordering(c) if c else Ordering(cmp_y(e1.right, e2.right))
    if isinstance(e1, XPair):
        c = compare_ints(e1.x, e2.x)
        return c if c else Ordering(cmp_y(e1.y, e2.y))
    if isinstance(e1, Triple):
        c = cmp_y(e1.y0, e2.y0)
        return Ordering(c) if c else Ordering(cmp_y(e1.y1, e2.y1))
    if isinstance(e1, Base):
        return compare_ints(e1.x, e2.x)
    return Ordering.EQUAL


def t_compare(tag, X: BaseOrder, Y, e1: TElem, e2: TElem) -> Ordering:
    """Compare two elements of T_X(Y)."""
    tag = Tag.parse(tag)
    check = getattr(Y, "check", None)
    check_telem(tag, X, e1, check)
    check_telem(tag, X, e2, check)
    return _cmp_unchecked(tag, Y.compare, e1, e2)


def t_map(tag, f, e: TElem) -> TElem:
    """The functorial action T(f): apply ``f`` to every Y-component."""
    tag = Tag.parse(tag)

    def g(y):
        try:
            return f[y] if isinstance(f, dict) else f(y)
        except KeyError:
            raise UnmappedElement(f"the map is undefined at {y!r}") from None

    if isinstance(e, Pair):
        if tag is Tag.W:
            return Pair(e.left, g(e.right))
        return Pair(g(e.left), g(e.right))
    if isinstance(e, XPair):
        return XPair(e.x, g(e.y))
    if isinstance(e, Triple):
        return Triple(e.i, g(e.y0), g(e.y1))
    if isinstance(e, (Bot, Base)):
        return e
    raise MalformedElement(f"{e!r} is not an element of T^{tag.value}")


def supp_explicit(tag, e: TElem) -> frozenset:
    tag = Tag.parse(tag)
    if not isinstance(e, _KINDS[tag]):
        raise MalformedElement(f"{e!r} is not an element of T^{tag.value}")
    return frozenset(y_components(tag, e))


def member(tag, e: TElem, members) -> bool:
    """Whether ``e`` lies in T(Y0) for the suborder with the given members."""
    return all(y in members for y in y_components(Tag.parse(tag), e))


def supp_bruteforce(tag, X: BaseOrder, Y: FiniteOrder, e: TElem) -> frozenset:
    """The support as the intersection of all suborders Y0 with e in T(Y0)."""
    tag = Tag.parse(tag)
    check_telem(tag, X, e, Y.check)
    result = frozenset(range(Y.size))
    for mask in enumerate_suborders(Y):
        if member(tag, e, mask.members):
            result &= mask.members
    return result


def t_elements(tag, X: BaseOrder, carrier: Iterable) -> list:
    """All elements of T_X(Y) over an ascending carrier, in ascending order."""
    tag = Tag.parse(tag)
    ys = list(carrier)
    xs = list(X.elements())
    out: list = [BOT]
    if tag is Tag.W:
        out += [Pair(x, y) for x in [None] + xs for y in ys]
    elif tag is Tag.G:
        out += [Triple(i, a, b) for i in (0, 1) for a in ys for b in ys]
    else:
        out += [Pair(a, b) for a in ys for b in ys]
    if tag is Tag.P:
        out += [XPair(x, y) for x in xs for y in ys]
    if tag in (Tag.E, Tag.G):
        out += [Base(x) for x in xs]
    return out


# --- the collapse condition -------------------------------------------------

#: clause of the itemized collapse condition covering σ < τ, by summand kinds
_MONOTONE_CLAUSE = {
    Tag.W: {("bot", "pair"): "i", ("pair", "pair"): "i′"},
    Tag.E: {("bot", "pair"): "i", ("bot", "base"): "i", ("base", "base"): "i",
            ("pair", "pair"): "i′", ("pair", "base"): "i″"},
    Tag.P: {("bot", "pair"): "i", ("bot", "xpair"): "i", ("pair", "pair"): "i′",
            ("pair", "xpair"): "i″", ("xpair", "xpair"): "i‴"},
    Tag.G: {("bot", "tri0"): "i", ("bot", "tri1"): "i", ("bot", "base"): "i",
            ("base", "base"): "i", ("tri0", "tri0"): "i′", ("tri1", "tri1"): "i′",
            ("tri0", "tri1"): "i″", ("tri0", "base"): "i‴", ("tri1", "base"): "i‴"},
}
_SUPPORT_CLAUSE = {
    Tag.W: {"pair": "ii"},
    Tag.E: {"pair": "ii"},
    Tag.P: {"pair": "ii", "xpair": "ii′"},
    Tag.G: {"tri0": "ii", "tri1": "ii"},
}
CLAUSE_ORDER = ("i", "i′", "i″", "i‴", "ii", "ii′")

DEFAULT_MAX_WITNESSES = 20
_CHUNK = 512


@dataclass(frozen=True)
class Violation:
    """A failed clause: σ < τ with θ(σ) ≥ θ(τ) although the side condition
    holds, or (``tau`` is None) some y in supp(σ) with y ≥ θ(σ)."""

    clause: str
    sigma: TElem
    tau: Optional[TElem] = None


@dataclass(frozen=True)
class CollapseReport:
    tag: Tag
    checked: int
    violations: tuple = ()
    #: number of failing τ (monotonicity) or σ (support clauses), per clause
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counts

    @property
    def clauses(self) -> tuple:
        return tuple(c for c in CLAUSE_ORDER if c in self.counts)

    @property
    def truncated(self) -> bool:
        return len(self.violations) < sum(self.counts.values())


def _ranks(Y, values: list) -> dict:
    rank = getattr(Y, "rank", None)
    if rank is not None:
        return rank(values)
    ordered = sorted(set(values), key=cmp_to_key(Y.compare))
    return {v: i for i, v in enumerate(ordered)}


def check_collapse(tag, X: BaseOrder, Y, theta: Callable, carrier=None,
                   max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CollapseReport:
    """Check that θ: T(Y) → Y is a Bachmann-Howard collapse on a carrier.

    Every pair σ < τ of elements over the carrier is examined: if all of
    supp(σ) lies below θ(τ), then θ(σ) < θ(τ) must hold; and supp(σ) must lie
    below θ(σ).  Failures are attributed to the clause of the itemized
    condition that covers the pair.
    """
    tag = Tag.parse(tag)
    ys = list(Y.enumerate() if carrier is None else carrier)
    for a, b in zip(ys, ys[1:]):
        if Y.compare(a, b) >= 0:
            raise MalformedElement("the carrier must be strictly ascending")
    elems = t_elements(tag, X, ys)
    values = []
    for e in elems:
        try:
            values.append(theta(e))
        except Exception as exc:  # any failure means θ is not total here
            raise PartialTheta(f"θ is undefined at {e!r}: {exc}") from exc

    rank = _ranks(Y, ys + values)
    R = np.fromiter((rank[v] for v in values), dtype=np.int64, count=len(values))
    carrier_rank = np.fromiter((rank[y] for y in ys), dtype=np.int64, count=len(ys))
    position = {y: i + 1 for i, y in enumerate(ys)}
    # bucket 0: empty support; bucket k: largest support element is ys[k-1]
    bucket = np.fromiter(
        (max((position[y] for y in y_components(tag, e)), default=0) for e in elems),
        dtype=np.int64, count=len(elems),
    )
    # buckets 0..allowed[j] lie entirely below θ(elems[j])
    allowed = np.searchsorted(carrier_rank, R, side="left")
    kinds = [kind(tag, e) for e in elems]

    counts: dict = {}
    found: list = []

    def note(clause, idx_sigma, idx_tau):
        counts[clause] = counts.get(clause, 0) + 1
        found.append((CLAUSE_ORDER.index(clause), idx_tau if idx_tau is not None else idx_sigma,
                      idx_sigma, clause))

    # support clauses
    for j in np.flatnonzero(bucket > allowed):
        note(_SUPPORT_CLAUSE[tag][kinds[j]], int(j), None)

    # blocks of equal kind are contiguous in ascending order
    blocks = []
    start = 0
    for j in range(1, len(elems) + 1):
        if j == len(elems) or kinds[j] != kinds[start]:
            blocks.append((kinds[start], start, j))
            start = j
    nb = len(ys) + 1
    for ks, s0, s1 in blocks:
        for kt, t0, t1 in blocks:
            clause = _MONOTONE_CLAUSE[tag].get((ks, kt))
            if clause is None or t0 < s0:
                continue
            if s0 != t0:
                best = np.full(nb, -1, dtype=np.int64)
                np.maximum.at(best, bucket[s0:s1], R[s0:s1])
                best = np.maximum.accumulate(best)
                bad = np.flatnonzero(best[allowed[t0:t1]] >= R[t0:t1]) + t0
            else:
                bad = _sweep(bucket[s0:s1], R[s0:s1], allowed[s0:s1], nb) + s0
            for j in bad:
                note(clause, _witness(bucket, R, allowed, s0, min(s1, int(j)), int(j)), int(j))

    found.sort()
    violations = tuple(
        Violation(cl, elems[s], None if cl.startswith("ii") else elems[t])
        for _, t, s, cl in found[:max_witnesses]
    )
    return CollapseReport(tag, len(elems), violations, counts)


def _sweep(bucket, R, allowed, nb) -> np.ndarray:
    """Indices τ with some earlier σ (same block) violating monotonicity."""
    n = len(R)
    best = np.full(nb, -1, dtype=np.int64)
    bad = []
    for c0 in range(0, n, _CHUNK):
        c1 = min(n, c0 + _CHUNK)
        prefix = np.maximum.accumulate(best)
        flag = prefix[allowed[c0:c1]] >= R[c0:c1]
        b, r, a = bucket[c0:c1], R[c0:c1], allowed[c0:c1]
        inner = (b[:, None] <= a[None, :]) & (r[:, None] >= r[None, :])
        inner &= _upper(c1 - c0)
        flag |= inner.any(axis=0)
        bad.append(np.flatnonzero(flag) + c0)
        np.maximum.at(best, b, r)
    return np.concatenate(bad) if bad else np.zeros(0, dtype=np.int64)


_UPPER = np.triu(np.ones((_CHUNK, _CHUNK), dtype=bool), k=1)


def _upper(m: int) -> np.ndarray:
    # [σ, τ] is True iff σ < τ
    return _UPPER[:m, :m]


def _witness(bucket, R, allowed, s0, s1, j) -> int:
    hit = np.flatnonzero((bucket[s0:s1] <= allowed[j]) & (R[s0:s1] >= R[j]))
    return int(hit[0]) + s0


# --- the concrete collapses -------------------------------------------------

def _theta_w(X, e):
    if isinstance(e, Bot):
        return cnf.ZERO2
    eta = cnf._add2(e.right, cnf.ONE2)
    if e.left is None:
        return eta
    return cnf._mul(cnf.CnfTerm((e.left,)), eta)


def _omega2_succ_times(mod, a, b):
    # ω₂(a+1)·(b+1) = ω^(ω^(a+1))·(b+1)
    return mod._mul(mod.omega_pow(mod._succ(a)), mod._succ(b))


def _theta_e(X, e):
    if isinstance(e, Bot):
        return epsilon.ZERO
    if isinstance(e, Base):
        return epsilon.Eps(e.x)
    return _omega2_succ_times(epsilon, e.left, e.right)


def _theta_p(X, e):
    if isinstance(e, Bot):
        return veblen.ZERO
    if isinstance(e, XPair):
        return veblen.Phi(e.x, veblen._succ(e.y))
    return _omega2_succ_times(veblen, e.left, e.right)


def _theta_g(X, e):
    if isinstance(e, Bot):
        return gamma.ZERO
    if isinstance(e, Base):
        return gamma.Gam(e.x)
    if e.i == 0:
        return _omega2_succ_times(gamma, e.y0, e.y1)
    return gamma.Phi(gamma._add(gamma.ONE, e.y0), gamma._succ(e.y1))


_THETA = {Tag.W: _theta_w, Tag.E: _theta_e, Tag.P: _theta_p, Tag.G: _theta_g}


def theta(tag, X: BaseOrder, e: TElem):
    """The collapse T(S) → S of the tag's own notation system S."""
    tag = Tag.parse(tag)
    system = get_system(SYSTEM_OF[tag])
    check_telem(tag, X, e, lambda y: system.check(X, y))
    return _THETA[tag](X, e)


def self_theta(tag, X: BaseOrder, validate: bool = False) -> Callable:
    tag = Tag.parse(tag)
    if validate:
        return lambda e: theta(tag, X, e)
    rule = _THETA[tag]
    return lambda e: rule(X, e)


def mutant_theta_eps(X: BaseOrder) -> Callable:
    """θ^ε with ω₂(α) in place of ω₂(α+1); it violates the support clause."""

    def rule(e):
        if isinstance(e, Pair):
            return epsilon._mul(epsilon.omega_pow(e.left), epsilon._succ(e.right))
        return _theta_e(X, e)

    return rule


def system_order(system: NotationSystem | str, carrier=None) -> TermOrder:
    """A notation system as an order handle, with fast ranking."""
    if isinstance(system, str):
        system = get_system(system)
    return TermOrder(
        compare=system.compare,
        carrier=None if carrier is None else tuple(carrier),
        rank=lambda values: rank_terms(system, values),
    )


# --- the minimality embeddings ----------------------------------------------

class Embedding:
    """The map f from the tag's notation system into an order Y with a
    collapse θ_Y, defined by recursion on terms."""

    def __init__(self, tag, X: BaseOrder, theta_y: Callable):
        self.tag = Tag.parse(tag)
        self.X = X
        self.theta_y = theta_y
        self.system = get_system(SYSTEM_OF[self.tag])
        self._memo: dict = {}
        self._step = {Tag.W: self._w, Tag.E: self._e, Tag.P: self._p, Tag.G: self._g}[self.tag]

    def __call__(self, t):
        v = self._memo.get(t)
        if v is None:
            self.system.check(self.X, t)
            v = self._memo[t] = self._step(t)
        return v

    def _collapse(self, e):
        try:
            return self.theta_y(e)
        except Exception as exc:
            raise CollapseFailure(f"θ_Y failed at {e!r}: {exc}") from exc

    def _w(self, t):
        c = cnf.classify(self.X, t)
        if c.kind == "zero":
            return self._collapse(BOT)
        if c.kind == "successor":
            return self._collapse(Pair(None, self(c.pred)))
        x, eta = cnf.decompose_limit(self.X, t)
        return self._collapse(Pair(x, self(eta)))

    def _e(self, t):
        if isinstance(t, epsilon.Zero):
            return self._collapse(BOT)
        if isinstance(t, epsilon.Eps):
            return self._collapse(Base(t.x))
        a, b = epsilon.decompose_eps(self.X, t)
        return self._collapse(Pair(self(a), self(b)))

    def _p(self, t):
        if isinstance(t, veblen.Zero):
            return self._collapse(BOT)
        if isinstance(t, veblen.Phi) and t.index is not None:
            return self._collapse(XPair(t.index, self(t.arg)))
        a, b = veblen.decompose_veb(self.X, t)
        return self._collapse(Pair(self(a), self(b)))

    def _g(self, t):
        if isinstance(t, gamma.Zero):
            return self._collapse(BOT)
        if isinstance(t, gamma.Gam):
            return self._collapse(Base(t.x))
        if isinstance(t, gamma.Phi):
            return self._collapse(Triple(1, self(t.a), self(t.b)))
        a, b = gamma.decompose_head(self.X, t)
        return self._collapse(Triple(0, self(a), self(b)))


def embed(tag, X: BaseOrder, theta_y: Callable, t):
    return Embedding(tag, X, theta_y)(t)


def self_embedding(tag, X: BaseOrder) -> Embedding:
    return Embedding(tag, X, self_theta(tag, X))


@dataclass(frozen=True)
class MorphismReport:
    checked: int
    #: triples (e, f(θ_X(e)), θ_Y(T(f)(e)))
    mismatches: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_morphism(tag, X: BaseOrder, f, theta_x: Callable, theta_y: Callable,
                   carrier: Iterable) -> MorphismReport:
    """Compare f∘θ_X with θ_Y∘T(f) on every element over the carrier."""
    tag = Tag.parse(tag)

    def apply(y):
        try:
            return f[y] if isinstance(f, dict) else f(y)
        except KeyError:
            raise UnmappedElement(f"the map is undefined at {y!r}") from None

    elems = t_elements(tag, X, carrier)
    bad = []
    for e in elems:
        lhs = apply(theta_x(e))
        rhs = theta_y(t_map(tag, f, e))
        if lhs != rhs:
            bad.append((e, lhs, rhs))
    return MorphismReport(len(elems), tuple(bad))
