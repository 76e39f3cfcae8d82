from __future__ import annotations

import json

import pytest

from bhfix import harness as H
from bhfix.base import BaseOrder
from bhfix.collapse import self_theta, Pair
from bhfix.enumeration import EnumSpec, enumerate_terms
from bhfix.errors import ERROR_CODES
from bhfix.syntax import parse_term
from bhfix.systems import get_system

FIN1, FIN2 = BaseOrder.finite(1), BaseOrder.finite(2)


def test_order_axioms_pass():
    res = H.check_order_axioms(EnumSpec("w", FIN2, 4))
    assert res.ok and res.checked > 0


def test_order_axioms_empty_enumeration():
    res = H.check_order_axioms(EnumSpec("w", FIN2, 0), terms=[])
    assert res.ok and res.checked == 0


def test_corrupted_comparator_gives_triple_witness():
    spec = EnumSpec("w", FIN2, 3)
    terms = enumerate_terms(spec)
    index = {t: i for i, t in enumerate(terms)}
    first, last = 0, len(terms) - 1
    system = get_system("w")

    def corrupted(a, b):
        # flip the extreme pair only, keeping the relation antisymmetric
        if {index[a], index[b]} == {first, last}:
            return -system.compare(a, b)
        return system.compare(a, b)

    res = H.check_order_axioms(spec, compare=corrupted)
    assert not res.ok
    kinds = {w.check for w in res.failures}
    assert "transitivity" in kinds and "antisymmetry" not in kinds
    assert all(len(w.items) == 3 for w in res.failures if w.check == "transitivity")


@pytest.mark.parametrize("system,bound", [("w2", 5), ("phi", 4)])
def test_lemma_suite_pass(system, bound):
    res = H.check_lemma_suite(EnumSpec(system, FIN2, bound))
    assert res.ok, res.lines()


def test_uniqueness_scan_finds_one_candidate():
    spec = EnumSpec("w2", FIN2, 4)
    t = parse_term("w2", FIN2, "w^(w^1+w^0)")
    cands = H.decomposition_candidates(spec, t)
    assert cands == [(1, parse_term("w2", FIN2, "w^(w^0)"))]


@pytest.mark.parametrize("system,text", [("eps", "w^(e0)+w^(0)"), ("phi", "p[0](0)+p[_](0)"),
                                         ("gamma", "G0+p[0](0)")])
def test_uniqueness_scan_other_systems(system, text):
    cands = H.decomposition_candidates(EnumSpec(system, FIN2, 3), parse_term(system, FIN2, text))
    assert len(cands) == 1


@pytest.mark.parametrize("tag,base,bound", [("W", FIN2, 4), ("G", FIN1, 3)])
def test_collapse_suite_pass(tag, base, bound):
    assert H.check_collapse_suite(tag, base, bound).ok


def test_collapse_suite_broken_theta_lists_clause_ii():
    good = self_theta("W", FIN2)
    broken = lambda e: e.right if isinstance(e, Pair) and e.left is None else good(e)  # noqa: E731
    res = H.check_collapse_suite("W", FIN2, 3, theta=broken)
    assert not res.ok
    assert "clause (ii)" in {w.check for w in res.failures}


@pytest.mark.parametrize("tag,max_y", [("W", 4), ("G", 3), ("E", 0), ("P", 0)])
def test_supports_suite_pass(tag, max_y):
    assert H.check_supports_suite(tag, max_y).ok


@pytest.mark.parametrize("tag", ["W", "E", "P", "G"])
def test_embedding_suite_pass(tag):
    assert H.check_embedding_suite(tag, FIN2, 3).ok


def test_cross_embedding_and_round_trip():
    assert H.check_cross_embedding(FIN2, 4).ok
    for system in ("w", "w2", "eps", "phi", "gamma"):
        assert H.check_round_trip(EnumSpec(system, FIN2, 3)).ok


def test_diagnostics_cover_every_code():
    res = H.check_diagnostics()
    assert res.ok, res.lines()
    codes = {code for code, _, _ in H._fixture_calls()}
    assert codes == set(ERROR_CODES)


def test_deterministic():
    runs = [H.format_report([H.check_lemma_suite(EnumSpec("eps", FIN2, 3)),
                             H.check_collapse_suite("E", FIN2, 2, theta=None)], "structured")
            for _ in range(2)]
    assert runs[0] == runs[1]


def test_report_formats():
    ok = H.SuiteResult("demo", "inst", checked=3)
    bad = H.SuiteResult("demo", "inst")
    bad.expect(False, "check", "a", "b")
    text = H.format_report([ok, bad])
    assert text.splitlines() == [
        "PASS demo [inst] checked=3",
        "FAIL demo [inst] checked=1 failures=1",
        "  check: a | b",
        "summary: 2 suites, 1 passed, 1 failed",
    ]
    lines = [json.loads(s) for s in H.format_report([ok, bad], "structured").splitlines()]
    assert lines[1]["status"] == "fail" and lines[1]["witnesses"] == [["check", "a", "b"]]
    assert lines[-1] == {"summary": {"suites": 2, "passed": 1, "failed": 1}}


def test_failure_cap():
    res = H.SuiteResult("demo", "inst")
    for i in range(H.MAX_FAILURES + 5):
        res.fail("x", str(i))
    assert len(res.failures) == H.MAX_FAILURES and res.failure_count == H.MAX_FAILURES + 5
