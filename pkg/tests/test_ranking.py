from __future__ import annotations

from functools import cmp_to_key

import pytest
from hypothesis import given, settings, strategies as st

from bhfix.base import BaseOrder
from bhfix.enumeration import EnumSpec, enumerate_terms
from bhfix.ranking import rank_terms
from bhfix.systems import get_system

FIN2 = BaseOrder.finite(2)
POOLS = {s: enumerate_terms(EnumSpec(s, FIN2, 4 if s != "gamma" else 3))
         for s in ("w", "w2", "eps", "phi", "gamma")}


def sort_ranks(system, values):
    # [DERIVED] dense ranks from a plain comparison sort
    ordered = sorted(set(values), key=cmp_to_key(system.compare))
    return {v: i for i, v in enumerate(ordered)}


@pytest.mark.parametrize("name", sorted(POOLS))
def test_ranks_whole_pool(name):
    system = get_system(name)
    pool = POOLS[name]
    assert rank_terms(system, pool) == sort_ranks(system, pool)


@pytest.mark.parametrize("name", sorted(POOLS))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_ranks_random_subsets(name, data):
    system = get_system(name)
    values = data.draw(st.lists(st.sampled_from(POOLS[name]), max_size=30))
    assert rank_terms(system, values) == sort_ranks(system, values)


def test_empty():
    assert rank_terms(get_system("phi"), []) == {}
