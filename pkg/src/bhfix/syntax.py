"""Text syntax for terms of the five systems and for elements of T(Y).

Terms (whitespace is ignored)::

    term  := "0" | atom ("+" atom)*
    w     : atom := "w^" NAT
    w2    : atom := "w^(" term_w ")"
    eps   : atom := "e" NAT | "w^(" term_eps ")"
    phi   : atom := "p[" ("_" | NAT) "](" term_phi ")"
    gamma : atom := "G" NAT | "p[" term_gamma "](" term_gamma ")"

Elements of T(Y)::

    bot | pair(L, T) | xpair(K, T) | tri(I, T, T) | base(K)

where L is ``_`` or a base element for tag W and a term otherwise.  For
tag P the forms of 1+(Y+X)×Y are also accepted and converted:
``pair(inl(T), T)`` or ``pair((0,T), T)`` becomes ``pair(T, T)``, and
``pair(inr(K), T)`` or ``pair((1,K), T)`` becomes ``xpair(K, T)``.
"""

from __future__ import annotations

from . import cnf, epsilon, gamma, veblen
from .base import BaseOrder
from .collapse import BOT, SYSTEM_OF, Base, Bot, Pair, Tag, Triple, XPair
from .errors import MalformedElement, ParseError, SumOrderViolation
from .systems import get_system


class _Parser:
    def __init__(self, text: str, X: BaseOrder):
        self.text = text
        self.X = X
        self.pos = 0

    # lexing -------------------------------------------------------------
    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def error(self, message: str, pos=None):
        raise ParseError(message, self.pos if pos is None else pos, self.text)

    def peek(self, s: str) -> bool:
        self._skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.accept(s):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            self.error(f"expected {s!r}, found {found!r}")

    def nat(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def element(self) -> int:
        pos = self.pos
        x = self.nat()
        try:
            return self.X.check(x)
        except Exception as exc:
            exc.context.setdefault("position", pos)
            raise

    def end(self) -> None:
        self._skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")

    # terms --------------------------------------------------------------
    def term(self, system: str):
        if self.accept("0"):
            if self.peek("+"):
                self.error("0 cannot be a summand")
            return get_system(system).zero
        atom = getattr(self, "_atom_" + system)
        atoms = [atom()]
        while self.accept("+"):
            atoms.append(atom())
        return getattr(self, "_build_" + system)(atoms)

    def _atom_w(self):
        self.expect("w^")
        return self.element()

    def _build_w(self, xs):
        if any(b > a for a, b in zip(xs, xs[1:])):
            raise SumOrderViolation("exponents must be non-increasing")
        return cnf.CnfTerm(tuple(xs))

    def _atom_w2(self):
        self.expect("w^(")
        t = self.term("w")
        self.expect(")")
        return t

    def _build_w2(self, es):
        if any(cnf._cmp1(a, b) < 0 for a, b in zip(es, es[1:])):
            raise SumOrderViolation("exponents must be non-increasing")
        return cnf.Cnf2Term(tuple(es))

    def _atom_eps(self):
        # a summand, given by its exponent
        if self.accept("e"):
            return epsilon.Eps(self.element())
        self.expect("w^(")
        t = self.term("eps")
        self.expect(")")
        return t

    def _build_eps(self, es):
        # a singleton ω^(ε_x) collapses to ε_x
        return epsilon.unview(tuple(es))

    def _atom_phi(self):
        self.expect("p[")
        index = None if self.accept("_") else self.element()
        self.expect("](")
        arg = self.term("phi")
        self.expect(")")
        return veblen.Phi(index, arg)

    def _build_phi(self, ps):
        return ps[0] if len(ps) == 1 else veblen.Sum(tuple(ps))

    def _atom_gamma(self):
        if self.accept("G"):
            return gamma.Gam(self.element())
        self.expect("p[")
        a = self.term("gamma")
        self.expect("](")
        b = self.term("gamma")
        self.expect(")")
        return gamma.Phi(a, b)

    def _build_gamma(self, ps):
        return ps[0] if len(ps) == 1 else gamma.Sum(tuple(ps))

    # elements of T(Y) ---------------------------------------------------
    def telem(self, tag: Tag):
        system = SYSTEM_OF[tag]
        if self.accept("bot"):
            return BOT
        if self.accept("xpair("):
            if tag is not Tag.P:
                self.error("xpair(...) only exists for tag P")
            x = self.element()
            self.expect(",")
            y = self.term(system)
            self.expect(")")
            return XPair(x, y)
        if self.accept("tri("):
            if tag is not Tag.G:
                self.error("tri(...) only exists for tag G")
            i = self.nat()
            if i not in (0, 1):
                self.error("the first component of tri(...) is 0 or 1")
            self.expect(",")
            y0 = self.term(system)
            self.expect(",")
            y1 = self.term(system)
            self.expect(")")
            return Triple(i, y0, y1)
        if self.accept("base("):
            if tag not in (Tag.E, Tag.G):
                self.error("base(...) only exists for tags E and G")
            x = self.element()
            self.expect(")")
            return Base(x)
        if self.accept("pair("):
            if tag is Tag.G:
                self.error("tag G has triples, not pairs")
            if tag is Tag.W:
                left = None if self.accept("_") else self.element()
            elif tag is Tag.P and self.accept("inr("):
                x = self.element()
                self.expect(")")
                self.expect(",")
                y = self.term(system)
                self.expect(")")
                return XPair(x, y)
            elif tag is Tag.P and self.accept("inl("):
                left = self.term(system)
                self.expect(")")
            elif tag is Tag.P and self.accept("("):
                # ⟨⟨0,y⟩,y′⟩ and ⟨⟨1,x⟩,y′⟩ from 1+(Y+X)×Y
                side = self.nat()
                if side not in (0, 1):
                    self.error("the summand selector is 0 or 1")
                self.expect(",")
                left = self.term(system) if side == 0 else self.element()
                self.expect(")")
                self.expect(",")
                right = self.term(system)
                self.expect(")")
                return Pair(left, right) if side == 0 else XPair(left, right)
            else:
                left = self.term(system)
            self.expect(",")
            right = self.term(system)
            self.expect(")")
            return Pair(left, right)
        self.error("expected bot, pair(...), xpair(...), tri(...) or base(...)")


def _squash(text: str) -> str:
    return "".join(text.split())


def parse_term_with_notices(system: str, X: BaseOrder, text: str):
    """Parse a term; also return notices about non-canonical input."""
    p = _Parser(text, X)
    t = p.term(get_system(system).name)
    p.end()
    notices = []
    canonical = print_term(system, t)
    if canonical != _squash(text):
        notices.append(f"normalized {_squash(text)!r} to {canonical!r}")
    return t, notices


def parse_term(system: str, X: BaseOrder, text: str):
    return parse_term_with_notices(system, X, text)[0]


def print_term(system: str, t) -> str:
    name = get_system(system).name
    return _PRINTERS[name](t)


def _print_w(t: cnf.CnfTerm) -> str:
    return "+".join(f"w^{x}" for x in t.exponents) or "0"


def _print_w2(t: cnf.Cnf2Term) -> str:
    return "+".join(f"w^({_print_w(e)})" for e in t.exponents) or "0"


def _print_eps(t: epsilon.EpsTerm) -> str:
    if isinstance(t, epsilon.Zero):
        return "0"
    if isinstance(t, epsilon.Eps):
        return f"e{t.x}"
    return "+".join(f"w^({_print_eps(e)})" for e in epsilon.view(t))


def _print_phi(t: veblen.VebTerm) -> str:
    if isinstance(t, veblen.Zero):
        return "0"
    return "+".join(
        f"p[{'_' if p.index is None else p.index}]({_print_phi(p.arg)})" for p in veblen.summands(t)
    )


def _print_gamma(t: gamma.GammaTerm) -> str:
    if isinstance(t, gamma.Zero):
        return "0"

    def atom(p):
        if isinstance(p, gamma.Gam):
            return f"G{p.x}"
        return f"p[{_print_gamma(p.a)}]({_print_gamma(p.b)})"

    return "+".join(atom(p) for p in gamma.summands(t))


_PRINTERS = {"w": _print_w, "w2": _print_w2, "eps": _print_eps, "phi": _print_phi,
             "gamma": _print_gamma}


def parse_telem(tag, X: BaseOrder, text: str):
    tag = Tag.parse(tag)
    p = _Parser(text, X)
    e = p.telem(tag)
    p.end()
    return e


def print_telem(tag, e, show=None) -> str:
    """Render an element of T(Y); ``show`` prints Y-components (terms of
    the tag's own system by default)."""
    tag = Tag.parse(tag)
    show = show or _PRINTERS[SYSTEM_OF[tag]]
    if isinstance(e, Bot):
        return "bot"
    if isinstance(e, Pair):
        if tag is Tag.W:
            left = "_" if e.left is None else str(e.left)
        else:
            left = show(e.left)
        return f"pair({left},{show(e.right)})"
    if isinstance(e, XPair):
        return f"xpair({e.x},{show(e.y)})"
    if isinstance(e, Triple):
        return f"tri({e.i},{show(e.y0)},{show(e.y1)})"
    if isinstance(e, Base):
        return f"base({e.x})"
    raise MalformedElement(f"{e!r} is not an element of T^{tag.value}")
