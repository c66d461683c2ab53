import random

import pytest
from hypothesis import given, settings, strategies as st

from lsspmd import hypergraph as hg
from lsspmd.errors import BudgetExceeded, NotATree
from lsspmd.pmd import (
    PmdDecomposition,
    greedy_pmd,
    pmd_bounds,
    pmd_exact,
    pmd_tree,
    tree_positive_matching,
    verify_decomposition,
)
from lsspmd.positive import WeightCertificate

from oracles import brute_pmd, random_clutter, random_uniform

CYCLE = hg.validate(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def test_star_needs_delta_parts():
    S = hg.star(3, 4)
    dec = pmd_tree(S)
    assert dec.p == 4 and dec.verify(S)


def test_path_of_triples():
    P = hg.validate(7, [[1, 2, 3], [3, 4, 5], [5, 6, 7]])
    dec = pmd_tree(P)
    assert dec.p == 2 and dec.verify(P)
    assert sorted(len(part) for part in dec.parts) == [1, 2]


def test_pmd_tree_rejects_cycle():
    with pytest.raises(NotATree):
        pmd_tree(hg.validate(6, [[1, 2, 3], [3, 4, 5], [5, 6, 1]]))


def test_tree_matching_stage_structure():
    H = hg.random_tree(3, 12, 3)
    tm = tree_positive_matching(H)
    assert WeightCertificate(tm.weights).verify(H, tm.matching)
    assert not tm.used_fallback


def test_cycle_exact_and_bounds():
    p, dec = pmd_exact(CYCLE)
    assert p == 3 and dec.verify(CYCLE)
    bounds, _ = pmd_bounds(CYCLE, budget=10_000)
    assert (bounds.lower, bounds.upper, bounds.exact) == (2, 3, 3)


def test_cycle_brute_force_agrees():
    assert brute_pmd(CYCLE) == 3


def test_complete_triples_on_five_vertices():
    # every two triples of [5] meet, so each part is a single edge
    K = hg.complete_uniform(5, 3)
    p, dec = pmd_exact(K)
    assert p == 10 and dec.verify(K)


def test_budget_exceeded_reports_bounds():
    K = hg.complete_uniform(6, 3)
    with pytest.raises(BudgetExceeded) as info:
        pmd_exact(K, budget=200)
    b = info.value.bounds
    assert b.lower <= b.upper and b.exact is None
    assert info.value.to_dict()["bounds"]["upper"] == b.upper


def test_tampered_decomposition_rejected():
    dec = pmd_tree(hg.star(2, 3))
    S = hg.star(2, 3)
    swapped = PmdDecomposition(dec.parts, list(reversed(dec.certificates)))
    assert dec.verify(S)
    assert not verify_decomposition(S, swapped)
    merged = PmdDecomposition([dec.parts[0] + dec.parts[1]] + dec.parts[2:], dec.certificates[1:])
    assert not verify_decomposition(S, merged)


def test_decomposition_json_round_trip():
    H = hg.random_tree(3, 8, 11)
    dec = pmd_tree(H)
    back = PmdDecomposition.from_dict(H, dec.to_dict(H))
    assert back.parts == dec.parts and back.verify(H)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(1, 20), st.integers(0, 10**6))
def test_tree_pmd_equals_max_degree(k, m, seed):
    H = hg.random_tree(k, m, seed)
    dec = pmd_tree(H)
    assert dec.p == hg.max_degree(H)
    assert dec.verify(H)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_exact_matches_brute_force(seed):
    rng = random.Random(seed)
    H = random_clutter(rng, rng.randint(2, 6), rng.randint(1, 5))
    p, dec = pmd_exact(H)
    assert dec.verify(H)
    assert p == brute_pmd(H)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_bounds_sandwich(seed):
    rng = random.Random(seed)
    H = random_uniform(rng, rng.randint(3, 6), 3, rng.randint(1, 7))
    bounds, dec = pmd_bounds(H, budget=20_000)
    assert bounds.lower >= hg.max_degree(H)
    assert bounds.lower <= dec.p == bounds.upper
    assert dec.verify(H)
    g = greedy_pmd(H)
    assert g.verify(H) and g.p >= bounds.upper


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**9))
def test_cold_and_warm_exact_agree(seed):
    rng = random.Random(seed)
    H = random_clutter(rng, rng.randint(3, 7), rng.randint(1, 7))
    assert pmd_exact(H, warm_start=False)[0] == pmd_exact(H, warm_start=True)[0]
