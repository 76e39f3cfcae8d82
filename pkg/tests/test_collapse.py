from __future__ import annotations

import itertools

import pytest

from bhfix import cnf, collapse as co, epsilon, gamma, veblen
from bhfix.base import LESS, BaseOrder, FiniteOrder, enumerate_suborders
from bhfix.enumeration import EnumSpec, enumerate_terms
from bhfix.errors import CollapseFailure, MalformedElement, PartialTheta, UnmappedElement
from bhfix.syntax import parse_telem, parse_term

FIN1, FIN2 = BaseOrder.finite(1), BaseOrder.finite(2)
Y3 = FiniteOrder(3)


def term(system, text, X=FIN2):
    return parse_term(system, X, text)


# --- T(Y) -------------------------------------------------------------------------

def test_t_compare_examples():
    assert co.t_compare("W", FIN2, Y3, co.Pair(None, 2), co.Pair(0, 0)) == LESS
    assert co.t_compare("G", FIN2, Y3, co.Triple(0, 2, 2), co.Triple(1, 0, 0)) == LESS
    assert co.t_compare("E", FIN2, Y3, co.BOT, co.Base(0)) == LESS


@pytest.mark.parametrize("tag", list(co.Tag))
def test_t_elements_ascending_and_total(tag):
    elems = co.t_elements(tag, FIN2, range(3))
    assert len(set(elems)) == len(elems)
    for a, b in itertools.combinations(elems, 2):
        assert co.t_compare(tag, FIN2, Y3, a, b) < 0
        assert co.t_compare(tag, FIN2, Y3, b, a) > 0


def test_t_elements_counts():
    # [DERIVED] 1 + (1+|X|)|Y|, 1 + |Y|² + |X|, 1 + |Y|² + |X||Y|, 1 + 2|Y|² + |X|
    assert [len(co.t_elements(t, FIN2, range(3))) for t in "WEPG"] == [10, 12, 16, 21]


def test_t_map_examples():
    f = {0: 1, 1: 2, 2: 0}
    assert co.t_map("W", f, co.BOT) == co.BOT
    assert co.t_map("W", f, co.Pair(1, 0)) == co.Pair(1, 1)
    assert co.t_map("G", f, co.Triple(1, 0, 1)) == co.Triple(1, 1, 2)
    assert co.t_map("E", f, co.Base(1)) == co.Base(1)
    assert co.t_map("P", f, co.XPair(0, 2)) == co.XPair(0, 0)
    with pytest.raises(UnmappedElement):
        co.t_map("W", {}, co.Pair(None, 0))


def test_supp_examples():
    assert co.supp_explicit("E", co.Base(0)) == frozenset()
    assert co.supp_explicit("P", co.XPair(1, 2)) == {2}
    assert co.supp_explicit("G", co.Triple(0, 1, 1)) == {1}
    assert co.supp_explicit("W", co.BOT) == frozenset()
    with pytest.raises(MalformedElement):
        co.supp_explicit("W", co.Base(0))


def test_supp_bruteforce_examples():
    Y2 = FiniteOrder(2)
    assert co.supp_bruteforce("W", FIN2, Y2, co.Pair(0, 1)) == {1}
    assert co.supp_bruteforce("E", FIN2, Y2, co.BOT) == frozenset()
    assert co.supp_bruteforce("G", FIN2, Y2, co.Triple(1, 0, 1)) == {0, 1}


@pytest.mark.parametrize("tag", list(co.Tag))
def test_supports_agree_and_are_inclusive(tag):
    for n in range(4):
        Y = FiniteOrder(n)
        masks = list(enumerate_suborders(Y))
        for e in co.t_elements(tag, FIN2, range(n)):
            assert co.supp_bruteforce(tag, FIN2, Y, e) == co.supp_explicit(tag, e)
            for m0, m1 in itertools.product(masks, repeat=2):
                if m0.issubset(m1) and co.member(tag, e, m0.members):
                    assert co.member(tag, e, m1.members)


# --- θ ------------------------------------------------------------------------------

def test_theta_examples():
    assert co.theta("W", FIN2, co.Pair(None, cnf.ZERO2)) == term("w2", "w^(0)")
    z = veblen.ZERO
    assert co.theta("P", FIN2, co.XPair(0, z)) == term("phi", "p[0](p[_](0))")
    assert co.theta("G", FIN2, co.Base(1)) == term("gamma", "G1")
    assert co.theta("E", FIN2, co.Base(1)) == term("eps", "e1")
    for tag in co.Tag:
        assert co.theta(tag, FIN2, co.BOT) == co.get_system(co.SYSTEM_OF[tag]).zero


def test_theta_w_limit_case():
    # [PAPER] θ(⟨1+x,η⟩) = ω₂(x)·(η+1) with x = x0, η = 1: ω^(ω^0)·2
    eta = term("w2", "w^(0)")
    assert co.theta("W", FIN2, co.Pair(0, eta)) == term("w2", "w^(w^0)+w^(w^0)")


def test_theta_parsed_elements():
    e = parse_telem("P", FIN2, "xpair(0,0)")
    assert co.theta("P", FIN2, e) == term("phi", "p[0](p[_](0))")


@pytest.mark.parametrize("tag,X,bound", [("W", FIN2, 4), ("E", FIN2, 3), ("P", FIN2, 3), ("G", FIN1, 3)])
def test_theta_is_a_collapse(tag, X, bound):
    system = co.SYSTEM_OF[co.Tag(tag)]
    carrier = enumerate_terms(EnumSpec(system, X, bound))
    report = co.check_collapse(tag, X, co.system_order(system), co.self_theta(tag, X), carrier)
    assert report.ok and report.violations == ()


def _carrier(system, bound=3):
    return enumerate_terms(EnumSpec(system, FIN2, bound))


def test_fake_w_theta_fails_support_clause():
    base = co.self_theta("W", FIN2)
    fake = lambda e: e.right if isinstance(e, co.Pair) and e.left is None else base(e)
    report = co.check_collapse("W", FIN2, co.system_order("w2"), fake, _carrier("w2"))
    assert "ii" in report.clauses
    assert co.Violation("ii", co.Pair(None, cnf.ZERO2)) in report.violations


def test_fake_e_theta_fails_clause_i():
    base = co.self_theta("E", FIN2)
    fake = lambda e: epsilon.ZERO if isinstance(e, (co.Bot, co.Base)) else base(e)
    report = co.check_collapse("E", FIN2, co.system_order("eps"), fake, _carrier("eps"))
    assert "i" in report.clauses
    assert co.Violation("i", co.BOT, co.Base(0)) in report.violations


def test_mutant_reports_clause_ii():
    report = co.check_collapse("E", FIN2, co.system_order("eps"), co.mutant_theta_eps(FIN2),
                               _carrier("eps"))
    assert not report.ok and "ii" in report.clauses
    assert len(report.violations) <= co.DEFAULT_MAX_WITNESSES


def test_partial_theta_and_bad_carrier():
    def partial(e):
        if isinstance(e, co.Base):
            raise KeyError(e)
        return epsilon.ZERO

    with pytest.raises(PartialTheta):
        co.check_collapse("E", FIN2, co.system_order("eps"), partial, [epsilon.ZERO])
    with pytest.raises(MalformedElement):
        co.check_collapse("E", FIN2, co.system_order("eps"), partial, [epsilon.Eps(1), epsilon.Eps(0)])


def test_collapse_on_finite_order():
    # [DERIVED] over the carrier {0} of Y = 4, the map ⊥ ↦ 0, ⟨⊥,0⟩ ↦ 1,
    # ⟨1+x,0⟩ ↦ 2+x is strictly increasing and puts 0 below every pair value
    def theta4(e):
        if isinstance(e, co.Bot):
            return 0
        return (1 if e.left is None else 2 + e.left) + e.right

    report = co.check_collapse("W", BaseOrder.finite(2), FiniteOrder(4), theta4, [0])
    assert report.ok


# --- embeddings ---------------------------------------------------------------------

def test_embed_examples():
    assert co.embed("W", FIN2, co.self_theta("W", FIN2), cnf.ZERO2) == cnf.ZERO2
    f = co.self_embedding("P", FIN2)
    assert f(veblen.ONE) == term("phi", "p[_](p[_](p[_](0)))")
    # [DERIVED] ω₂(1) = ω^(ω^(ω^0)) via the ω-power map
    one = veblen.ONE
    assert f(one) == veblen.omega_pow(veblen.omega_pow(one))


def test_remark_identity_w():
    f = co.self_embedding("W", FIN2)
    for eta in _carrier("w2", 3):
        if eta == cnf.ZERO2:
            continue
        for x in (0, 1):
            t = cnf.mul_principal(FIN2, cnf.omega_power(x), eta)
            if cnf.len_L(FIN2, t) > 5:
                continue
            rhs = cnf.mul_principal(FIN2, cnf.omega_power(x), cnf.add_cnf2(FIN2, f(eta), cnf.ONE2))
            if cnf.decompose_limit(FIN2, t) == (x, eta):
                assert f(t) == rhs


@pytest.mark.parametrize("tag", list(co.Tag))
def test_self_embeddings_monotone(tag):
    system = co.get_system(co.SYSTEM_OF[tag])
    f = co.self_embedding(tag, FIN2)
    terms = enumerate_terms(EnumSpec(system.name, FIN2, 3))
    images = [f(t) for t in terms]
    for a, b in zip(images, images[1:]):
        assert system.compare(a, b) < 0


def test_embed_collapse_failure():
    def broken(e):
        raise ValueError("no")

    with pytest.raises(CollapseFailure):
        co.embed("G", FIN2, broken, gamma.ZERO)


def test_morphism_examples():
    X = FIN2
    th = co.self_theta("W", X)
    carrier = _carrier("w2", 2)
    report = co.check_morphism("W", X, lambda t: t, th, th, carrier)
    assert report.ok and report.checked == len(co.t_elements("W", X, carrier))
    f = co.self_embedding("W", X)
    assert not co.check_morphism("W", X, f, th, th, carrier).ok
    empty = co.check_morphism("W", X, f, th, th, [])
    assert empty.ok and empty.checked == 1
