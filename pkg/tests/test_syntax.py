from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from bhfix import cnf, collapse as co, epsilon, gamma, veblen
from bhfix.base import BaseOrder
from bhfix.enumeration import EnumSpec, enumerate_terms
from bhfix.errors import (
    ElementOutOfRange, HViolation, ParseError, SumOrderViolation, BetaZeroViolation,
)
from bhfix.syntax import parse_telem, parse_term, parse_term_with_notices, print_telem, print_term

FIN1, FIN2 = BaseOrder.finite(1), BaseOrder.finite(2)


def test_parse_examples():
    with pytest.raises(HViolation):
        parse_term("phi", FIN2, "p[0](p[1](0))")
    t, notices = parse_term_with_notices("eps", FIN1, "w^(e0)")
    assert t == epsilon.Eps(0) and len(notices) == 1
    assert "normalized" in notices[0]
    assert parse_term("w", FIN2, "w^1+w^0") == cnf.CnfTerm((1, 0))


def test_print_examples():
    assert print_term("w", cnf.ZERO) == "0"
    assert print_term("phi", veblen.ONE) == "p[_](0)"
    assert print_term("gamma", gamma.succ_gamma(FIN2, gamma.Gam(1))) == "G1+p[0](0)"
    assert print_term("eps", epsilon.ZERO) == "0"


def test_whitespace_is_ignored():
    assert parse_term("w2", FIN2, " w^( w^1 + w^0 ) + w^(0) ") == parse_term("w2", FIN2, "w^(w^1+w^0)+w^(0)")
    _, notices = parse_term_with_notices("w", FIN2, " w^1 ")
    assert notices == []


@pytest.mark.parametrize("system,text,pos", [
    ("w", "w^", 2), ("w", "w^0+", 4), ("w", "x", 0), ("phi", "p[0](0", 6),
    ("gamma", "G", 1), ("w2", "w^(0))", 5),
])
def test_syntax_errors_carry_positions(system, text, pos):
    with pytest.raises(ParseError) as info:
        parse_term(system, FIN2, text)
    assert info.value.position == pos and info.value.code == "syntax-error"


def test_validity_errors_forwarded():
    with pytest.raises(SumOrderViolation):
        parse_term("w", FIN2, "w^0+w^1")
    with pytest.raises(ElementOutOfRange):
        parse_term("w", FIN2, "w^2")
    with pytest.raises(BetaZeroViolation):
        parse_term("gamma", FIN2, "p[G0](0)")


@pytest.mark.parametrize("system", ["w", "w2", "eps", "phi", "gamma"])
def test_round_trip_enumerated(system):
    for t in enumerate_terms(EnumSpec(system, FIN2, 4 if system != "gamma" else 3)):
        s = print_term(system, t)
        assert parse_term(system, FIN2, s) == t
        assert print_term(system, parse_term(system, FIN2, s)) == s


def test_telem_forms():
    assert parse_telem("W", FIN2, "bot") == co.BOT
    assert parse_telem("W", FIN2, "pair(_,w^(0))") == co.Pair(None, cnf.ONE2)
    assert parse_telem("W", FIN2, "pair(1,0)") == co.Pair(1, cnf.ZERO2)
    assert parse_telem("E", FIN2, "base(1)") == co.Base(1)
    assert parse_telem("G", FIN2, "tri(1,G0,0)") == co.Triple(1, gamma.Gam(0), gamma.ZERO)
    with pytest.raises(ParseError):
        parse_telem("W", FIN2, "base(0)")
    with pytest.raises(ParseError):
        parse_telem("E", FIN2, "xpair(0,0)")


def test_phi_alternative_forms():
    # ⟨⟨0,y⟩,y′⟩ ↦ ⟨y,y′⟩ and ⟨⟨1,x⟩,y′⟩ ↦ ⟨x,y′⟩
    one = veblen.ONE
    canon = co.Pair(veblen.ZERO, one)
    assert parse_telem("P", FIN2, "pair(inl(0),p[_](0))") == canon
    assert parse_telem("P", FIN2, "pair((0,0),p[_](0))") == canon
    assert parse_telem("P", FIN2, "pair(inr(1),0)") == co.XPair(1, veblen.ZERO)
    assert parse_telem("P", FIN2, "pair((1,1),0)") == co.XPair(1, veblen.ZERO)


@pytest.mark.parametrize("tag", list(co.Tag))
def test_telem_round_trip(tag):
    system = co.SYSTEM_OF[tag]
    ys = enumerate_terms(EnumSpec(system, FIN2, 1))
    for e in co.t_elements(tag, FIN2, ys):
        s = print_telem(tag, e)
        assert parse_telem(tag, FIN2, s) == e


def test_print_telem_finite_show():
    assert print_telem("G", co.Triple(0, 1, 2), show=str) == "tri(0,1,2)"


texts = st.lists(st.integers(0, 1), min_size=1, max_size=6).map(
    lambda xs: "+".join(f"w^{x}" for x in sorted(xs, reverse=True)))


@given(texts)
def test_canonical_w_strings_round_trip(s):
    assert print_term("w", parse_term("w", FIN2, s)) == s
