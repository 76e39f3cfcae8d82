"""Order-preserving integer ranks for large sets of terms.

Sorting hundreds of thousands of φ(1+X)0 or Γ_X terms with the recursive
comparison is too slow, so for those systems the principal terms are ranked
layer by layer instead.  Every term is a non-increasing sum of principal
terms and the order is lexicographic on summands, so once each principal
term carries an integer rank, a term's key is simply the tuple of its
summand ranks and Python's tuple order does the rest.

A new principal term φ_a b (a, b already ranked) is placed by counting the
ranked principals below it.  Two new terms with the same count have no
ranked principal between them; then the order between them is
lexicographic in (index, argument), because a smaller index forces the
argument (which is ranked, hence below the other term) to decide.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable

from . import gamma, veblen
from .systems import NotationSystem


class _PrincipalRanker:
    summands = staticmethod(lambda t: ())

    def __init__(self):
        self.order: list = []
        self.rank: dict = {}
        self._keys: dict = {}
        self._depth: dict = {}

    # hooks -----------------------------------------------------------
    def components(self, p) -> tuple:
        raise NotImplementedError

    def index_key(self, p):
        raise NotImplementedError

    def arg(self, p):
        raise NotImplementedError

    def lt_atomic(self, p, u):
        """``p < u`` when the rule for ``u`` does not look at its index; or None."""
        return None

    # -----------------------------------------------------------------
    def key(self, t) -> tuple:
        k = self._keys.get(t)
        if k is None:
            k = tuple(self.rank[q] for q in self.summands(t))
            self._keys[t] = k
        return k

    def depth(self, p) -> int:
        d = self._depth.get(p)
        if d is None:
            d = 0
            for c in self.components(p):
                for q in self.summands(c):
                    d = max(d, self.depth(q) + 1)
            self._depth[p] = d
        return d

    def _lt_new_old(self, p, u) -> bool:
        """``p < u`` for a not yet ranked principal ``p`` and a ranked ``u``."""
        r = self.lt_atomic(p, u)
        if r is not None:
            return r
        i, j = self.index_key(p), self.index_key(u)
        if i < j:
            return self.key(self.arg(p)) < (self.rank[u],)
        if i > j:
            first = self.summands(self.arg(u))
            return bool(first) and self._lt_new_old(p, first[0])
        return self.key(self.arg(p)) < self.key(self.arg(u))

    def _count_below(self, p, lo: int) -> int:
        """Number of ranked principals below ``p``, known to be at least ``lo``."""
        order, n = self.order, len(self.order)
        hi, step = lo, 1
        while hi < n and not self._lt_new_old(p, order[hi]):
            lo = hi + 1
            hi = lo + step
            step *= 2
        hi = min(hi, n)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._lt_new_old(p, order[mid]):
                hi = mid
            else:
                lo = mid + 1
        return lo

    def _insert_layer(self, layer: list) -> None:
        self._keys.clear()
        entries = sorted(
            ((self.index_key(p), self.key(self.arg(p)), p) for p in layer),
            key=lambda e: (e[0], e[1]),
        )
        placed = []
        prev_index, pos = object(), 0
        for i, a, p in entries:
            if i != prev_index:
                prev_index, pos = i, 0
            # φ_i is increasing, so within one index the counts only grow
            pos = self._count_below(p, pos)
            placed.append((pos, i, a, p))
        placed.sort(key=lambda e: (e[0], e[1], e[2]))
        merged, k = [], 0
        for pos, _, _, p in placed:
            merged.extend(self.order[k:pos])
            k = pos
            merged.append(p)
        merged.extend(self.order[k:])
        self.order = merged
        self.rank = {p: r for r, p in enumerate(merged)}
        self._keys.clear()

    def add(self, terms: Iterable) -> None:
        seen = set(self.rank)
        stack, found = [], []
        for t in terms:
            stack.extend(self.summands(t))
        while stack:
            p = stack.pop()
            if p in seen:
                continue
            seen.add(p)
            found.append(p)
            for c in self.components(p):
                stack.extend(self.summands(c))
        layers: dict = {}
        for p in found:
            layers.setdefault(self.depth(p), []).append(p)
        for d in sorted(layers):
            self._insert_layer(layers[d])


class _VeblenRanker(_PrincipalRanker):
    summands = staticmethod(veblen.summands)

    def components(self, p):
        return (p.arg,)

    def index_key(self, p):
        return -1 if p.index is None else p.index

    def arg(self, p):
        return p.arg


class _GammaRanker(_PrincipalRanker):
    summands = staticmethod(gamma.summands)

    def components(self, p):
        return (p.a, p.b) if isinstance(p, gamma.Phi) else ()

    def index_key(self, p):
        return self.key(p.a)

    def arg(self, p):
        return p.b

    def lt_atomic(self, p, u):
        if isinstance(u, gamma.Gam):
            # Γ_x is closed under φ
            ku = (self.rank[u],)
            return self.key(p.a) < ku and self.key(p.b) < ku
        return None

    def _insert_layer(self, layer):
        gams = [p for p in layer if isinstance(p, gamma.Gam)]
        if gams:
            # Γ terms are atomic, so they all arrive in the first layer
            if self.order:
                raise ValueError("Γ_x terms must be ranked before any φ term")
            self.order = sorted(gams, key=lambda g: g.x)
            self.rank = {p: r for r, p in enumerate(self.order)}
            layer = [p for p in layer if not isinstance(p, gamma.Gam)]
        if layer:
            super()._insert_layer(layer)


_RANKERS = {"phi": _VeblenRanker, "gamma": _GammaRanker}


def rank_terms(system: NotationSystem, terms: Iterable) -> dict:
    """Map each distinct term to its position among the distinct terms."""
    terms = set(terms)
    if system.name in ("w", "w2"):
        if system.name == "w":
            key = lambda t: t.exponents  # noqa: E731
        else:
            key = lambda t: tuple(e.exponents for e in t.exponents)  # noqa: E731
        ordered = sorted(terms, key=key)
    elif system.name in _RANKERS:
        ranker = _RANKERS[system.name]()
        ranker.add(terms)
        ordered = sorted(terms, key=ranker.key)
    else:
        ordered = sorted(terms, key=cmp_to_key(system.compare))
    return {t: r for r, t in enumerate(ordered)}

