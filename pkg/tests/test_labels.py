from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lsspmd import hypergraph as hg
from lsspmd import labels
from lsspmd.errors import NTooSmall
from lsspmd.positive import NotPositive

# label counts for n = 3..10, enumerated by hand-checkable brute force
KNOWN_COUNTS = [1, 4, 10, 19, 31, 46, 64, 85]


def test_label_of():
    assert labels.label_of((1, 2, 3)) == (3, 5)
    assert labels.label_of((3, 1, 4)) == (4, 7)


def test_small_partition():
    t = labels.build_partition(4)
    assert list(t.classes) == [(3, 5), (3, 6), (4, 7), (5, 7)]
    assert t.classes[(3, 5)] == [(1, 2, 3)]


def test_counts_match_known_values():
    assert [labels.count_labels(n) for n in range(3, 11)] == KNOWN_COUNTS
    assert [labels.closed_formula(n) for n in range(3, 11)] == KNOWN_COUNTS


def test_n_too_small():
    with pytest.raises(NTooSmall):
        labels.count_labels(2)
    with pytest.raises(NTooSmall):
        labels.build_partition(1)


@given(st.integers(3, 30))
def test_count_report_consistent(n):
    r = labels.count_report(n)
    assert r["match"] and r["increment"] == r["increment_formula"] == 3 * n - 6


def test_classes_of_n6_with_negative_verdict():
    # two complementary triples sharing a label: positive weight on both
    # forces positive total weight, but other edges cover [6] evenly
    t = labels.scan_conjecture(6, mode="full")
    assert (5, 9) in t.counterexamples()
    assert t.classes[(5, 9)] == [(1, 4, 5), (2, 3, 6)]
    assert isinstance(t.verdicts[(5, 9)], NotPositive)
    assert labels.verify_scan(t)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_small_n_all_positive(n):
    t = labels.scan_conjecture(n)
    assert t.counterexamples() == []
    assert labels.verify_scan(t)


@pytest.mark.parametrize("n", [6, 7])
def test_residual_mode_positive(n):
    t = labels.scan_conjecture(n, mode="residual")
    assert t.counterexamples() == []
    assert labels.verify_scan(t)


def test_parallel_scan_identical():
    a = labels.scan_conjecture(7, workers=1)
    b = labels.scan_conjecture(7, workers=2)
    assert a.to_dict() == b.to_dict()


@pytest.mark.parametrize("n", range(3, 9))
def test_peel_bound_certified(n):
    K = hg.complete_uniform(n, 3)
    r = labels.peel_bound(K)
    assert r["decomposition"].verify(K)
    assert r["within_formula"]


def test_peel_bound_on_subhypergraph():
    K = hg.complete_uniform(7, 3)
    H = hg.validate(7, [e for i, e in enumerate(K.edges) if i % 3])
    r = labels.peel_bound(H)
    assert r["decomposition"].verify(H)


def test_classes_are_matchings_brute():
    for n in range(3, 9):
        t = labels.build_partition(n)
        for cls in t.classes.values():
            for a, b in combinations(cls, 2):
                assert not set(a) & set(b)
