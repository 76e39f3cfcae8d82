from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from bhfix import gamma as G
from bhfix.base import LESS, BaseOrder
from bhfix.enumeration import EnumSpec, enumerate_terms
from bhfix.errors import ArityViolation, BetaZeroViolation, HViolation, InvalidTerm, NotASum
from bhfix.syntax import parse_term

FIN2 = BaseOrder.finite(2)


def g(text):
    return parse_term("gamma", FIN2, text)


def test_h_examples():
    assert G.h_gamma(FIN2, g("G0")) == g("G0")
    assert G.h_gamma(FIN2, g("p[G0](p[0](0))")) == g("G0")
    assert G.h_gamma(FIN2, G.ZERO) == G.ZERO
    assert G.h_gamma(FIN2, g("p[0](0)+p[0](0)")) == G.ZERO


def test_validate_examples():
    with pytest.raises(BetaZeroViolation):
        G.validate_gamma(FIN2, ("phi", ("G", 0), "0"))
    t = G.validate_gamma(FIN2, ("phi", ("G", 0), ("phi", "0", "0")))
    assert t == g("p[G0](p[0](0))")
    with pytest.raises(HViolation):
        G.validate_gamma(FIN2, ("phi", ("phi", "0", "0"), ("G", 0)))
    with pytest.raises(ArityViolation):
        G.validate_gamma(FIN2, ("sum", ("G", 0)))
    with pytest.raises(InvalidTerm):
        G.validate_gamma(FIN2, ("psi", "0"))


def test_cmp_examples():
    assert G.cmp_gamma(FIN2, g("G0"), g("p[G0](p[0](0))")) == LESS
    assert G.cmp_gamma(FIN2, g("p[G0](p[0](0))"), g("G1")) == LESS
    assert G.cmp_gamma(FIN2, g("G0"), g("G1")) == LESS


def test_arithmetic_examples():
    assert G.omega_pow_gamma(FIN2, g("G0")) == g("G0")
    assert G.omega_pow_gamma(FIN2, G.ZERO) == g("p[0](0)")
    assert G.succ_gamma(FIN2, g("G0")) == g("G0+p[0](0)")
    assert G.add_gamma(FIN2, g("p[0](0)"), g("G1")) == g("G1")


def test_decompose_examples():
    assert G.decompose_head(FIN2, g("G0+p[0](0)")) == (g("G0"), g("p[0](0)"))
    t = g("p[0](0)+p[0](0)+p[0](0)")
    assert G.decompose_head(FIN2, t) == (g("p[0](0)"), g("p[0](0)+p[0](0)"))
    with pytest.raises(NotASum):
        G.decompose_head(FIN2, g("G0"))


def test_len_examples():
    assert G.len_gamma(FIN2, g("G1")) == 0
    assert G.len_gamma(FIN2, g("p[G0](p[0](0))")) == 2
    assert G.len_gamma(FIN2, g("G0+p[0](0)")) == 3


TERMS = enumerate_terms(EnumSpec("gamma", FIN2, 3))
terms = st.sampled_from(TERMS)


@given(terms)
def test_subterm_lemma(t):
    for s in G.subterms(t):
        assert G._cmp(s, t) < 0


@given(terms, terms, st.integers(0, 1))
def test_gamma_closure(a, b, x):
    top = G.Gam(x)
    if G._cmp(a, top) < 0 and G._cmp(b, top) < 0:
        assert G._cmp(G.omega_pow(a), top) < 0
        try:
            p = G.Phi(a, b)
        except InvalidTerm:
            return
        assert G._cmp(p, top) < 0


@given(terms, terms)
def test_principal_absorbs_smaller(c, a):
    if G.is_principal(a) and G._cmp(c, a) < 0:
        assert G._add(c, a) == a


@given(terms, terms, terms)
def test_addition_laws(a, b, c):
    assert G._add(G._add(a, b), c) == G._add(a, G._add(b, c))
    if G._cmp(b, c) < 0:
        assert G._cmp(G._add(a, b), G._add(a, c)) < 0


def test_gamma_numbers_increase():
    assert G._cmp(G.Gam(0), G.Gam(1)) < 0


@given(terms)
def test_head_decomposition_shrinks(t):
    if not isinstance(t, G.Sum):
        return
    a, b = G.decompose_head(FIN2, t)
    assert G.is_principal(a) and G._add(a, b) == t
    assert G._cmp(a, t) < 0 and G._cmp(b, t) < 0
    assert G._len(a) < G._len(t) and G._len(b) < G._len(t)
