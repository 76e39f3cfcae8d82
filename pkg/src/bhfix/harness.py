"""Exhaustive verification suites over bounded enumerations.

Well-foundedness cannot be checked from finite data, so each suite checks
the finitary facts that the constructions rely on: the order axioms, the
decomposition and subterm lemmas, closure and arithmetic laws, agreement
with the coefficient oracle, the collapse conditions, monotonicity of the
embeddings, supports, and the parser round trip.

Every suite walks its inputs in enumeration order, so a given suite and
instance always produce the same result, witnesses included.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from . import cnf, epsilon, gamma, oracle, veblen
from .base import BaseOrder, FiniteOrder, enumerate_suborders
from .collapse import (
    SYSTEM_OF, TAG_OF, Pair, Tag, check_collapse, member, self_embedding,
    self_theta, supp_bruteforce, supp_explicit, system_order, t_compare, t_elements, t_map,
)
from .enumeration import EnumSpec, enumerate_terms, largest_len_within
from .errors import (
    InvalidTerm, NotALimit, NotASum, NotationError, NotDecomposable, UsageError,
)
from .syntax import parse_telem, parse_term_with_notices, print_telem, print_term
from .systems import get_system

#: witnesses kept per suite; the rest are only counted
MAX_FAILURES = 50
#: size caps for the quadratic and cubic checks run inside the lemma suite
PAIR_BUDGET = 400
TRIPLE_BUDGET = 40


@dataclass(frozen=True)
class Witness:
    check: str
    items: tuple = ()

    def __str__(self) -> str:
        return f"{self.check}: {' | '.join(self.items)}" if self.items else self.check


@dataclass
class SuiteResult:
    suite_id: str
    instance: str
    checked: int = 0
    failures: list = field(default_factory=list)
    #: failures beyond MAX_FAILURES, counted but not stored
    omitted: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failure_count(self) -> int:
        return len(self.failures) + self.omitted

    def fail(self, check: str, *items: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(Witness(check, tuple(items)))
        else:
            self.omitted += 1

    def expect(self, condition: bool, check: str, *items: str) -> None:
        self.checked += 1
        if not condition:
            self.fail(check, *items)

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        for w in other.failures:
            self.fail(f"{other.suite_id}/{w.check}", *w.items)
        self.omitted += other.omitted

    def lines(self, fmt: str = "text") -> list:
        if fmt == "structured":
            record = {
                "suite": self.suite_id,
                "instance": self.instance,
                "status": "pass" if self.ok else "fail",
                "checked": self.checked,
                "failures": self.failure_count,
                "witnesses": [[w.check, *w.items] for w in self.failures],
            }
            return [json.dumps(record, ensure_ascii=False)]
        status = "PASS" if self.ok else "FAIL"
        head = f"{status} {self.suite_id} [{self.instance}] checked={self.checked}"
        if self.ok:
            return [head]
        out = [f"{head} failures={self.failure_count}"]
        out += [f"  {w}" for w in self.failures[:10]]
        if self.failure_count > 10:
            out.append(f"  ... {self.failure_count - 10} more")
        return out


def format_report(results: Iterable[SuiteResult], fmt: str = "text") -> str:
    results = list(results)
    lines = [line for r in results for line in r.lines(fmt)]
    passed = sum(r.ok for r in results)
    if fmt == "structured":
        summary = {"suites": len(results), "passed": passed, "failed": len(results) - passed}
        lines.append(json.dumps({"summary": summary}))
    else:
        lines.append(f"summary: {len(results)} suites, {passed} passed, {len(results) - passed} failed")
    return "\n".join(lines)


def _instance(spec: EnumSpec) -> str:
    return f"{spec.system} {spec.base} L<={spec.max_len}"


def _capped(spec: EnumSpec, budget: int) -> EnumSpec:
    n = min(spec.max_len, largest_len_within(spec.system, spec.base, budget))
    return EnumSpec(spec.system, spec.base, n, spec.max_count)


# --- order axioms -----------------------------------------------------------

def check_order_axioms(spec: EnumSpec, compare: Optional[Callable] = None,
                       terms: Optional[list] = None) -> SuiteResult:
    """Irreflexivity, trichotomy and antisymmetry on all pairs and
    transitivity on all triples of the enumerated terms.

    ``compare`` and ``terms`` replace the system comparison and the
    enumeration, for fixtures.
    """
    system = get_system(spec.system)
    cmp = compare or system.compare
    terms = enumerate_terms(spec) if terms is None else list(terms)
    res = SuiteResult("order-axioms", _instance(spec))
    show = lambda t: print_term(system.name, t)  # noqa: E731
    n = len(terms)
    C = np.zeros((n, n), dtype=np.int8)
    for i, s in enumerate(terms):
        for j, t in enumerate(terms):
            C[i, j] = int(cmp(s, t))
    res.checked += n * n
    for i in range(n):
        if C[i, i] != 0:
            res.fail("irreflexivity", show(terms[i]))
    # the terms are distinct, so exactly i == j may compare equal
    eq = (C == 0) & ~np.eye(n, dtype=bool)
    for i, j in zip(*np.nonzero(eq)):
        if i < j:
            res.fail("trichotomy", show(terms[i]), show(terms[j]))
    for i, j in zip(*np.nonzero(C != -C.T)):
        if i < j:
            res.fail("antisymmetry", show(terms[i]), show(terms[j]))
    L = (C < 0).astype(np.int32)
    res.checked += n ** 3
    broken = ((L @ L) > 0) & (L == 0)
    for i, k in zip(*np.nonzero(broken)):
        j = int(np.nonzero(L[i] & L[:, k])[0][0])
        res.fail("transitivity", show(terms[i]), show(terms[j]), show(terms[k]))
    for a, b in zip(terms, terms[1:]):
        res.expect(cmp(a, b) < 0, "enumeration order", show(a), show(b))
    return res


# --- decomposition lemmas -----------------------------------------------------

@dataclass(frozen=True)
class _Lemma:
    eligible: Callable  # term -> bool
    decompose: Callable  # (X, term) -> (a, b)
    rebuild: Callable  # (a, b) -> term
    parts: Callable  # (a, b) -> terms that must lie below t and be shorter
    left_candidates: Callable  # (X, terms) -> candidates for the first component
    refusal: type  # raised by decompose on ineligible terms
    show_left: Optional[Callable] = None


def _w2_parts(x, eta):
    return (eta,)


_LEMMAS = {
    "w2": _Lemma(
        eligible=lambda t: bool(t.exponents) and t.exponents[-1] != cnf.ZERO,
        decompose=cnf.decompose_limit,
        rebuild=lambda x, eta: cnf._mul(cnf.CnfTerm((x,)), eta),
        parts=_w2_parts,
        left_candidates=lambda X, terms: list(X.elements()),
        refusal=NotALimit,
        show_left=str,
    ),
    "eps": _Lemma(
        eligible=lambda t: not isinstance(t, (epsilon.Zero, epsilon.Eps)),
        decompose=epsilon.decompose_eps,
        rebuild=lambda a, b: epsilon._add(epsilon.omega_pow(a), b),
        parts=lambda a, b: (a, b),
        left_candidates=lambda X, terms: terms,
        refusal=NotDecomposable,
    ),
    "phi": _Lemma(
        eligible=lambda t: not (isinstance(t, veblen.Zero)
                                or (isinstance(t, veblen.Phi) and t.index is not None)),
        decompose=veblen.decompose_veb,
        rebuild=lambda a, b: veblen._add(veblen.omega_pow(a), b),
        parts=lambda a, b: (a, b),
        left_candidates=lambda X, terms: terms,
        refusal=NotDecomposable,
    ),
    "gamma": _Lemma(
        eligible=lambda t: isinstance(t, gamma.Sum),
        decompose=gamma.decompose_head,
        rebuild=gamma._add,
        parts=lambda a, b: (a, b),
        left_candidates=lambda X, terms: [t for t in terms if gamma.is_principal(t)],
        refusal=NotASum,
    ),
}


def check_decompositions(spec: EnumSpec) -> SuiteResult:
    """Existence, uniqueness, strict length decrease and reconstruction.

    Uniqueness is an exhaustive scan: every pair of candidates drawn from
    the enumeration is combined, and each term must be hit by exactly the
    pair the decomposition returns (and ineligible terms by none).
    """
    system = get_system(spec.system)
    lemma = _LEMMAS.get(system.name)
    if lemma is None:
        raise UsageError(f"system {system.name} has no decomposition lemma")
    X = spec.base
    terms = enumerate_terms(spec)
    res = SuiteResult("decomposition", _instance(spec))
    show = lambda t: print_term(system.name, t)  # noqa: E731
    show_left = lemma.show_left or show
    cmp, length = system.compare, system.length
    targets = set(terms)

    candidates: dict = {}
    for a in lemma.left_candidates(X, terms):
        for b in terms:
            res.checked += 1
            t = lemma.rebuild(a, b)
            if t not in targets:
                continue
            parts = lemma.parts(a, b)
            if system.name == "w2" and b == cnf.ZERO2:
                continue
            # a part equal to t cannot lie below it (absorbed sums land here)
            if all(p != t for p in parts) and all(cmp(p, t) < 0 for p in parts):
                candidates.setdefault(t, []).append((a, b))

    for t in terms:
        found = candidates.get(t, [])
        if not lemma.eligible(t):
            try:
                lemma.decompose(X, t)
                res.fail("refusal", show(t))
            except lemma.refusal:
                pass
            res.expect(not found, "uniqueness", show(t), *(f"{show_left(a)}, {show(b)}" for a, b in found))
            continue
        a, b = lemma.decompose(X, t)
        parts = lemma.parts(a, b)
        pair = f"{show_left(a)}, {show(b)}"
        res.expect(lemma.rebuild(a, b) == t, "reconstruction", show(t), pair)
        res.expect(all(cmp(p, t) < 0 for p in parts), "components below", show(t), pair)
        res.expect(all(length(p) < length(t) for p in parts), "length decrease", show(t), pair)
        if system.name == "w2":
            res.expect(b != cnf.ZERO2, "eta positive", show(t), pair)
        res.expect(found == [(a, b)], "uniqueness", show(t),
                   *(f"{show_left(u)}, {show(v)}" for u, v in found))
    return res


def decomposition_candidates(spec: EnumSpec, t) -> list:
    """All candidate pairs from the enumeration that decompose ``t``."""
    system = get_system(spec.system)
    lemma = _LEMMAS[system.name]
    terms = enumerate_terms(spec)
    out = []
    for a in lemma.left_candidates(spec.base, terms):
        for b in terms:
            if system.name == "w2" and b == cnf.ZERO2:
                continue
            if lemma.rebuild(a, b) == t and all(system.compare(p, t) < 0 for p in lemma.parts(a, b)):
                out.append((a, b))
    return out


# --- subterms, closure, arithmetic ---------------------------------------------

def check_subterms(spec: EnumSpec) -> SuiteResult:
    """Every proper subterm lies strictly below the term."""
    system = get_system(spec.system)
    if system.subterms is None:
        raise UsageError(f"system {system.name} has no subterm lemma")
    res = SuiteResult("subterms", _instance(spec))
    show = lambda t: print_term(system.name, t)  # noqa: E731
    for t in enumerate_terms(spec):
        for s in system.subterms(t):
            res.expect(system.compare(s, t) < 0, "proper subterm", show(s), show(t))
        if isinstance(t, gamma.Phi):
            res.expect(system.compare(t.a, t) < 0 and system.compare(t.b, t) < 0,
                       "phi components", show(t))
    return res


def _principal(system_name: str, t) -> bool:
    if system_name in ("w", "w2"):
        return len(t.exponents) == 1
    if system_name == "eps":
        return len(epsilon.view(t)) == 1
    if system_name == "phi":
        return isinstance(t, veblen.Phi)
    if system_name == "gamma":
        return gamma.is_principal(t)
    return False


def check_closure(spec: EnumSpec) -> SuiteResult:
    """ε- and Γ-closure, additive principality, and the ω₂ absorption law."""
    system = get_system(spec.system)
    name, cmp = system.name, system.compare
    X = spec.base
    res = SuiteResult("closure", _instance(spec))
    show = lambda t: print_term(name, t)  # noqa: E731
    terms = enumerate_terms(spec)
    if name == "w2":
        xs = list(X.elements())
        for x in xs:
            for y in xs:
                if x < y:
                    big = cnf.Cnf2Term((cnf.omega_power(y),))
                    res.expect(cnf._mul(cnf.omega_power(x), big) == big, "omega2 absorption", str(x), str(y))
    # fixed points of ω^·: ε_x, φ_{1+x} β and the Γ-numbers bound their ω-powers
    if name == "eps":
        fixed = [t for t in terms if isinstance(t, epsilon.Eps)]
    elif name == "phi":
        fixed = [t for t in terms if isinstance(t, veblen.Phi) and t.index is not None]
    elif name == "gamma":
        fixed = [t for t in terms if isinstance(t, gamma.Gam) or gamma.is_epsilon_like(t)]
    else:
        fixed = []
    for e in fixed:
        for a in terms:
            if cmp(a, e) < 0:
                res.expect(cmp(system.omega_pow(a), e) < 0, "omega-power closure", show(a), show(e))
    if name == "gamma":
        gams = [t for t in terms if isinstance(t, gamma.Gam)]
        for g, h in zip(gams, gams[1:]):
            res.expect(cmp(g, h) < 0, "Gamma increasing", show(g), show(h))
        for g in gams:
            below = [a for a in terms if cmp(a, g) < 0]
            for a in below:
                for b in below:
                    try:
                        p = gamma.Phi(a, b)
                    except InvalidTerm:
                        continue
                    res.expect(cmp(p, g) < 0, "Gamma closure", show(a), show(b), show(g))
    for p in terms:
        if _principal(name, p):
            for c in terms:
                if cmp(c, p) < 0:
                    res.expect(system.add(c, p) == p, "additive principality", show(c), show(p))
    return res


def check_arithmetic(spec: EnumSpec) -> SuiteResult:
    """Laws of + (and of ω^a · when defined) on all pairs and triples."""
    system = get_system(spec.system)
    name, cmp, add = system.name, system.compare, system.add
    res = SuiteResult("arithmetic", _instance(spec))
    show = lambda t: print_term(name, t)  # noqa: E731
    terms = enumerate_terms(spec)
    zero = system.zero
    for a in terms:
        res.expect(add(a, zero) == a and add(zero, a) == a, "zero neutral", show(a))
        if system.succ is not None:
            res.expect(cmp(a, system.succ(a)) < 0, "successor above", show(a))
        if name == "eps":
            res.expect(epsilon.unview(epsilon.view(a)) == a, "view round trip", show(a))
        for b in terms:
            ab = add(a, b)
            res.expect(cmp(a, ab) <= 0, "left part below sum", show(a), show(b))
            for c in terms:
                res.expect(add(ab, c) == add(a, add(b, c)), "associativity", show(a), show(b), show(c))
                if cmp(b, c) < 0:
                    res.expect(cmp(ab, add(a, c)) < 0, "right strict monotonicity", show(a), show(b), show(c))
    if system.mul is not None:
        exps = enumerate_terms(EnumSpec("w", spec.base, spec.max_len)) if name == "w2" else terms
        show_e = (lambda t: print_term("w", t)) if name == "w2" else show  # noqa: E731
        for e in exps:
            for s in terms:
                for t in terms:
                    res.expect(system.mul(e, add(s, t)) == add(system.mul(e, s), system.mul(e, t)),
                               "left distributivity", show_e(e), show(s), show(t))
                    if cmp(s, t) < 0:
                        res.expect(cmp(system.mul(e, s), system.mul(e, t)) < 0,
                                   "multiplication monotone", show_e(e), show(s), show(t))
    return res


def check_oracle(spec: EnumSpec) -> SuiteResult:
    """Agreement of cmp, add and ω^a · with the coefficient-vector oracle."""
    system = get_system(spec.system)
    if system.name not in ("w", "w2"):
        raise UsageError("the oracle covers the systems w and w2 only")
    X = spec.base
    res = SuiteResult("oracle", _instance(spec))
    show = lambda t: print_term(system.name, t)  # noqa: E731
    terms = enumerate_terms(spec)
    code = {t: oracle.encode(X, t) for t in terms}
    o_cmp, o_add = (oracle.compare1, oracle.add1) if system.name == "w" else (oracle.compare2, oracle.add2)
    for s in terms:
        for t in terms:
            res.expect(int(system.compare(s, t)) == o_cmp(code[s], code[t]), "cmp", show(s), show(t))
            res.expect(oracle.encode(X, system.add(s, t)) == o_add(code[s], code[t]), "add", show(s), show(t))
    if system.name == "w2":
        for a in enumerate_terms(EnumSpec("w", X, spec.max_len)):
            ca = oracle.encode(X, a)
            for t in terms:
                res.expect(oracle.encode(X, cnf._mul(a, t)) == oracle.mul_principal2(ca, code[t]),
                           "mul_principal", print_term("w", a), show(t))
    return res


def check_lemma_suite(spec: EnumSpec) -> SuiteResult:
    """All lemma checks that apply to the system, merged into one result.

    Decompositions and subterms run at the given bound; the quadratic
    closure checks and the cubic arithmetic checks run at the largest
    bound within PAIR_BUDGET and TRIPLE_BUDGET terms respectively.
    """
    name = get_system(spec.system).name
    res = SuiteResult("lemmas", _instance(spec))
    if name in _LEMMAS:
        res.merge(check_decompositions(spec))
    if get_system(name).subterms is not None:
        res.merge(check_subterms(spec))
    res.merge(check_closure(_capped(spec, PAIR_BUDGET)))
    res.merge(check_arithmetic(_capped(spec, TRIPLE_BUDGET)))
    if name in ("w", "w2") and spec.base.size <= oracle.MAX_BASE:
        res.merge(check_oracle(_capped(spec, PAIR_BUDGET)))
    return res


# --- collapse and embeddings -------------------------------------------------

def _tag_instance(tag: Tag, base: BaseOrder, max_len: int) -> str:
    return f"{tag.value} ({SYSTEM_OF[tag]}) {base} L<={max_len}"


def check_collapse_suite(tag, base: BaseOrder, max_len: int, theta: Optional[Callable] = None) -> SuiteResult:
    """The collapse conditions for θ over all T-elements built from the
    terms of length at most ``max_len``."""
    tag = Tag.parse(tag)
    system = SYSTEM_OF[tag]
    carrier = enumerate_terms(EnumSpec(system, base, max_len))
    report = check_collapse(tag, base, system_order(system), theta or self_theta(tag, base), carrier=carrier)
    res = SuiteResult("collapse", _tag_instance(tag, base, max_len), checked=report.checked)
    for v in report.violations:
        items = [print_telem(tag, v.sigma)]
        if v.tau is not None:
            items.append(print_telem(tag, v.tau))
        res.fail(f"clause ({v.clause})", *items)
    res.omitted += sum(report.counts.values()) - len(report.violations)
    return res


def check_embedding_suite(tag, base: BaseOrder, max_len: int) -> SuiteResult:
    """Strict monotonicity of the self-embedding f on all ordered pairs,
    plus the identities describing f for tags W and P."""
    tag = Tag.parse(tag)
    name = SYSTEM_OF[tag]
    system = get_system(name)
    show = lambda t: print_term(name, t)  # noqa: E731
    res = SuiteResult("embedding", _tag_instance(tag, base, max_len))
    terms = enumerate_terms(EnumSpec(name, base, max_len))
    f = self_embedding(tag, base)
    images = [f(t) for t in terms]
    for i, s in enumerate(terms):
        for j in range(i + 1, len(terms)):
            res.expect(system.compare(images[i], images[j]) < 0, "strictly monotone", show(s), show(terms[j]))
    if tag is Tag.W:
        # f(ω₂(x)·η) = ω₂(x)·(f(η)+1) whenever η < ω₂(x)·η, i.e. for the
        # decomposition of a limit
        for x in base.elements():
            wx = cnf.CnfTerm((x,))
            for eta in terms[1:]:
                t = cnf._mul(wx, eta)
                if system.compare(eta, t) < 0:
                    res.expect(f(t) == cnf._mul(wx, system.succ(f(eta))), "omega2 identity", str(x), show(eta))
    if tag is Tag.P:
        expected = veblen.omega2_veb(veblen.ONE)
        res.expect(f(veblen.ONE) == expected, "f(1) = omega2(1)", show(f(veblen.ONE)))
    return res


def check_cross_embedding(base: BaseOrder, max_len: int) -> SuiteResult:
    """α ↦ ω^α from ω^X into ω₂(X) is strictly increasing."""
    res = SuiteResult("cross-embedding", f"w -> w2 {base} L<={max_len}")
    terms = enumerate_terms(EnumSpec("w", base, max_len))
    images = [cnf.embed_omega_power(base, a) for a in terms]
    for i, a in enumerate(terms):
        for j in range(i + 1, len(terms)):
            res.expect(cnf._cmp2(images[i], images[j]) < 0, "strictly increasing",
                       print_term("w", a), print_term("w", terms[j]))
    return res


def check_supports_suite(tag, max_y: int, base: Optional[BaseOrder] = None) -> SuiteResult:
    """Explicit against brute-force supports, inclusivity, and the T-order
    axioms, over every finite Y with at most ``max_y`` elements."""
    tag = Tag.parse(tag)
    X = base or BaseOrder.finite(2)
    res = SuiteResult("supports", f"{tag.value} {X} |Y|<={max_y}")
    for n in range(max_y + 1):
        Y = FiniteOrder(n)
        elems = t_elements(tag, X, range(n))
        masks = [m.members for m in enumerate_suborders(Y)]
        for e in elems:
            shown = f"|Y|={n} {_show_finite(tag, e)}"
            res.expect(supp_explicit(tag, e) == supp_bruteforce(tag, X, Y, e), "support", shown)
            inside = [member(tag, e, m) for m in masks]
            for m0, in0 in zip(masks, inside):
                if not in0:
                    continue
                for m1, in1 in zip(masks, inside):
                    if m0 <= m1:
                        res.expect(in1, "inclusivity", shown, str(sorted(m0)), str(sorted(m1)))
        for i, e in enumerate(elems):
            for j, d in enumerate(elems):
                c = t_compare(tag, X, Y, e, d)
                res.expect((c < 0) == (i < j) and (c == 0) == (i == j), "T-order",
                           f"|Y|={n}", _show_finite(tag, e), _show_finite(tag, d))
        # T(f) for the order-preserving shift of Y into a larger order
        shift = {y: y + 1 for y in range(n)}
        for e in elems:
            moved = t_map(tag, shift, e)
            res.expect(supp_explicit(tag, moved) == {y + 1 for y in supp_explicit(tag, e)},
                       "support naturality", f"|Y|={n}", _show_finite(tag, e))
    return res


def _show_finite(tag: Tag, e) -> str:
    return print_telem(tag, e, show=str)


# --- syntax ---------------------------------------------------------------------

def check_round_trip(spec: EnumSpec) -> SuiteResult:
    """print∘parse and parse∘print are identities; canonical text raises
    no normalization notice.  Elements of T over short terms round-trip too."""
    system = get_system(spec.system)
    name, X = system.name, spec.base
    res = SuiteResult("round-trip", _instance(spec))
    terms = enumerate_terms(spec)
    for t in terms:
        text = print_term(name, t)
        back, notices = parse_term_with_notices(name, X, text)
        res.expect(back == t, "parse(print(t)) = t", text)
        res.expect(print_term(name, back) == text and not notices, "print(parse(s)) = s", text)
    tag = TAG_OF.get(name)
    if tag is not None:
        short = enumerate_terms(EnumSpec(name, X, min(spec.max_len, 1)))
        for e in t_elements(tag, X, short):
            text = print_telem(tag, e)
            res.expect(parse_telem(tag, X, text) == e, "element round trip", text)
    return res


def _fixture_calls() -> list:
    from . import collapse as co
    from .base import MAX_SUBORDER_SIZE

    X1, X2 = BaseOrder.finite(1), BaseOrder.finite(2)

    def raising_theta(e):
        raise ValueError("no value")

    return [
        ("syntax-error", "phi fin:2 'p[0](0'", lambda: parse_term_with_notices("phi", X2, "p[0](0")),
        ("syntax-error", "w fin:2 'w^1 w^0'", lambda: parse_term_with_notices("w", X2, "w^1 w^0")),
        ("h-violation", "phi fin:2 'p[0](p[1](0))'", lambda: parse_term_with_notices("phi", X2, "p[0](p[1](0))")),
        ("h-violation", "gamma fin:1 'p[0](p[p[0](0)](0))'",
         lambda: parse_term_with_notices("gamma", X1, "p[0](p[p[0](0)](0))")),
        ("beta-zero-violation", "gamma fin:1 'p[G0](0)'", lambda: parse_term_with_notices("gamma", X1, "p[G0](0)")),
        ("sum-order-violation", "w fin:2 'w^0+w^1'", lambda: parse_term_with_notices("w", X2, "w^0+w^1")),
        ("sum-order-violation", "eps fin:1 'w^(0)+e0'", lambda: parse_term_with_notices("eps", X1, "w^(0)+e0")),
        ("element-out-of-range", "w fin:2 'w^2'", lambda: parse_term_with_notices("w", X2, "w^2")),
        ("element-out-of-range", "gamma fin:1 'G1'", lambda: parse_term_with_notices("gamma", X1, "G1")),
        ("syntax-error", "base(0) read as an element of T^W", lambda: parse_telem("W", X2, "base(0)")),
        ("malformed-element", "support of base(0) under tag W", lambda: supp_explicit("W", co.Base(0))),
        ("malformed-element", "tag 'Q'", lambda: Tag.parse("Q")),
        ("invalid-term", "eps Pow(e0)", lambda: epsilon.Pow(epsilon.Eps(0))),
        ("arity-violation", "phi one-summand sum", lambda: veblen.Sum((veblen.ONE,))),
        ("not-a-limit", "decompose_limit w^(0)", lambda: cnf.decompose_limit(X2, cnf.ONE2)),
        ("not-decomposable", "decompose_eps e0", lambda: epsilon.decompose_eps(X1, epsilon.Eps(0))),
        ("not-a-sum", "decompose_head G0", lambda: gamma.decompose_head(X1, gamma.Gam(0))),
        ("unsupported-base", "enumerate over omega",
         lambda: enumerate_terms(EnumSpec("w", BaseOrder.omega(), 1))),
        ("too-large", f"suborders of a {MAX_SUBORDER_SIZE + 1}-element order",
         lambda: next(enumerate_suborders(FiniteOrder(MAX_SUBORDER_SIZE + 1)))),
        ("guard-exceeded", "gamma fin:2 L<=5 with max_count 100",
         lambda: enumerate_terms(EnumSpec("gamma", X2, 5, max_count=100))),
        ("partial-theta", "theta raising everywhere",
         lambda: co.check_collapse("W", X1, system_order("w2"), raising_theta, carrier=[cnf.ZERO2])),
        ("unmapped-element", "t_map with an empty map",
         lambda: t_map("W", {}, Pair(None, cnf.ZERO2))),
        ("collapse-failure", "embedding into a raising theta",
         lambda: co.embed("W", X1, raising_theta, cnf.ZERO2)),
        ("usage-error", "system 'zz'", lambda: get_system("zz")),
    ]


def check_diagnostics() -> SuiteResult:
    """Every documented diagnostic code is raised by its fixture input."""
    res = SuiteResult("diagnostics", "error fixtures")
    for code, label, call in _fixture_calls():
        try:
            call()
        except NotationError as exc:
            res.expect(exc.code == code, "wrong code", code, label, exc.code)
        else:
            res.expect(False, "no error", code, label)
    return res


# --- registry for the command line ------------------------------------------------

def _tag_for(system: str) -> Tag:
    name = get_system(system).name
    if name not in TAG_OF:
        raise UsageError(f"system {name} has no order transformation; use w2, eps, phi or gamma")
    return TAG_OF[name]


SUITES = {
    "order-axioms": lambda a: check_order_axioms(EnumSpec(a.system, a.base, a.max_len)),
    "lemmas": lambda a: check_lemma_suite(EnumSpec(a.system, a.base, a.max_len)),
    "decomposition": lambda a: check_decompositions(EnumSpec(a.system, a.base, a.max_len)),
    "subterms": lambda a: check_subterms(EnumSpec(a.system, a.base, a.max_len)),
    "closure": lambda a: check_closure(EnumSpec(a.system, a.base, a.max_len)),
    "arithmetic": lambda a: check_arithmetic(EnumSpec(a.system, a.base, a.max_len)),
    "oracle": lambda a: check_oracle(EnumSpec(a.system, a.base, a.max_len)),
    "collapse": lambda a: check_collapse_suite(_tag_for(a.system), a.base, a.max_len),
    "embedding": lambda a: check_embedding_suite(_tag_for(a.system), a.base, a.max_len),
    "supports": lambda a: check_supports_suite(_tag_for(a.system), a.max_y, a.base),
    "cross-embedding": lambda a: check_cross_embedding(a.base, a.max_len),
    "round-trip": lambda a: check_round_trip(EnumSpec(a.system, a.base, a.max_len)),
    "diagnostics": lambda a: check_diagnostics(),
}
