"""The acceptance criteria, each run at its stated bound.

Every test prints one ``PASS``/``FAIL`` line for its criterion; the lines
are repeated in the terminal summary.
"""

from __future__ import annotations

import time

from bhfix import harness as H
from bhfix import veblen
from bhfix.base import BaseOrder
from bhfix.collapse import Tag, mutant_theta_eps, self_embedding
from bhfix.enumeration import EnumSpec, enumerate_terms, largest_len_within
from bhfix.syntax import print_term

from conftest import ACCEPTANCE_LINES

FIN1, FIN2, FIN3 = BaseOrder.finite(1), BaseOrder.finite(2), BaseOrder.finite(3)
SYSTEMS = ("w", "w2", "eps", "phi", "gamma")
TAGS = list(Tag)


def report(number: int, title: str, results, extra: bool = True, detail: str = "") -> bool:
    ok = extra and all(r.ok for r in results)
    checked = sum(r.checked for r in results)
    failures = sum(r.failure_count for r in results)
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} (checked={checked}, failures={failures}"
    line += f", {detail})" if detail else ")"
    ACCEPTANCE_LINES[number] = line
    print(line)
    for r in results:
        if not r.ok:
            print("\n".join(r.lines()))
    return ok


def test_criterion_1_order_axioms():
    start = time.perf_counter()
    results = []
    for system in SYSTEMS:
        for X in (FIN1, FIN2):
            n = largest_len_within(system, X, 400)
            spec = EnumSpec(system, X, n)
            assert len(enumerate_terms(spec)) <= 400
            results.append(H.check_order_axioms(spec))
    elapsed = time.perf_counter() - start
    bounds = ", ".join(r.instance for r in results)
    assert report(1, "order axioms", results, elapsed <= 120.0, f"{elapsed:.1f}s; {bounds}")


def test_criterion_2_oracle():
    results = [H.check_oracle(EnumSpec(s, FIN3, 6)) for s in ("w", "w2")]
    assert report(2, "oracle agreement, fin:3 L<=6", results)


def test_criterion_3_decompositions():
    results = [H.check_decompositions(EnumSpec(s, FIN2, 5)) for s in ("w2", "eps", "phi", "gamma")]
    assert report(3, "decomposition lemmas, fin:2 L<=5", results)


def test_criterion_4_subterms():
    results = [H.check_subterms(EnumSpec(s, FIN2, 5)) for s in ("phi", "gamma")]
    assert report(4, "subterm lemmas, fin:2 L<=5", results)


def test_criterion_5_collapse():
    results = [H.check_collapse_suite(tag, FIN2, 4) for tag in TAGS]
    mutant = H.check_collapse_suite("E", FIN2, 4, theta=mutant_theta_eps(FIN2))
    cites_ii = not mutant.ok and any(w.check == "clause (ii)" for w in mutant.failures)
    assert report(5, "collapse conditions, fin:2 L<=4", results, cites_ii,
                  f"mutant: {mutant.failure_count} violations, clause (ii) cited={cites_ii}")


def test_criterion_6_embeddings():
    results = [H.check_embedding_suite(tag, FIN2, 4) for tag in TAGS]
    f1 = self_embedding("P", FIN2)(veblen.ONE)
    expected = "p[_](p[_](p[_](0)))"
    good = print_term("phi", f1) == expected
    assert report(6, "minimality embeddings, fin:2 L<=4", results, good, f"P f(1)={print_term('phi', f1)}")


def test_criterion_7_supports():
    results = [H.check_supports_suite(tag, 4, FIN2) for tag in TAGS]
    assert report(7, "supports, |Y|<=4, X=fin:2", results)


def test_criterion_8_cross_embedding():
    results = [H.check_cross_embedding(FIN2, 6)]
    assert report(8, "cross-embedding w -> w2, fin:2 L<=6", results)


def test_criterion_9_round_trip():
    results = [H.check_round_trip(EnumSpec(s, FIN2, 4)) for s in SYSTEMS]
    results.append(H.check_diagnostics())
    assert report(9, "round trip L<=4 and diagnostics", results)
