import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from lsspmd import hypergraph as hg
from lsspmd import lss
from lsspmd.errors import ContradictionDetected, InvalidD, NotUniform, PivotIsolated, TOutOfRange
from lsspmd.lss import Monomial, Polynomial

from oracles import brute_obstruction, leibniz, random_uniform

PATH = hg.validate(7, [[1, 2, 3], [3, 4, 5], [5, 6, 7]])


def y(i, j):
    return Polynomial.monomial(Monomial.of([(i, j)]))


def test_generator_explicit():
    f = lss.generator((1, 2, 3), 2)
    assert f == y(1, 1) * y(2, 1) * y(3, 1) + y(1, 2) * y(2, 2) * y(3, 2)


def test_polynomial_arithmetic():
    a = y(1, 1) + y(2, 1)
    assert a * a == y(1, 1) * y(1, 1) + y(2, 1) * y(2, 1) + y(1, 1) * y(2, 1) * Polynomial.constant(2)
    assert (a - a).is_zero()
    pt = {(1, 1): Fraction(2), (2, 1): Fraction(3)}
    assert (a * a).evaluate(pt) == 25


def test_presentation_matrix_example():
    A = lss.presentation_matrix(PATH, pivot=3, d=2)
    assert A.rows == ((1, 2), (4, 5))
    minor = lss.leading_minor(A, 2)
    expected = y(1, 1) * y(2, 1) * y(4, 2) * y(5, 2) - y(1, 2) * y(2, 2) * y(4, 1) * y(5, 1)
    assert minor == expected
    assert lss.support_check(minor, 3, 2)


def test_matrix_errors():
    with pytest.raises(PivotIsolated):
        lss.presentation_matrix(hg.validate(4, [[1, 2]]), pivot=4)
    with pytest.raises(InvalidD):
        lss.presentation_matrix(PATH, d=0)
    with pytest.raises(NotUniform):
        lss.presentation_matrix(hg.validate(3, [[1], [2, 3]]))
    with pytest.raises(TOutOfRange):
        lss.leading_minor(lss.presentation_matrix(PATH, pivot=3, d=2), 3)


def test_support_check_rejects():
    assert not lss.support_check(Polynomial(), 3, 1)
    assert not lss.support_check(y(1, 1) * y(1, 1), 2, 1)
    assert not lss.support_check(y(1, 1) * y(2, 2), 2, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_minor_equals_leibniz(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 4)
    u = rng.randint(1, 5)
    d = rng.randint(1, 5)
    n = 1 + (k - 1) * u + rng.randint(0, 2)
    pool = list(combinations(range(2, n + 1), k - 1))
    rows = rng.sample(pool, u)
    H = hg.validate(n, [sorted(r + (1,)) for r in rows])
    A = lss.presentation_matrix(H, pivot=1, d=d)
    for t in range(1, min(u, d) + 1):
        assert lss.leading_minor(A, t) == leibniz(A.matrix(), t)


def test_obstruction_examples():
    assert lss.obstruction_search(hg.validate(3, [[1, 2, 3]])).value == 2
    assert lss.obstruction_search(hg.complete_uniform(5, 3)).value == 7
    w = lss.obstruction_search(PATH)
    assert w.holds_in(PATH) and w.value == 3


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_obstruction_equals_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 6)
    k = rng.choice([k for k in range(2, n + 1) if comb(n - 1, k - 1) <= 10])
    H = random_uniform(rng, n, k)
    w = lss.obstruction_search(H, n - k + 1)
    assert w.holds_in(H)
    assert w.value == brute_obstruction(H, n - k + 1)


def test_status_on_path():
    r = lss.status_report(PATH, 3)
    assert r.ci_known and r.prime_known and not r.not_prime_known
    assert r.irreducible_range == (3, comb(9, 3) - 7)
    r2 = lss.status_report(PATH, 2)
    assert r2.ci_known and not r2.prime_known


def test_status_star_not_prime():
    S = hg.star(3, 4)
    r = lss.status_report(S, 3)
    assert r.not_prime_known and not r.prime_known and not r.ci_known


@pytest.mark.parametrize("d", range(1, 8))
def test_status_never_contradicts_on_complete(d):
    K = hg.complete_uniform(5, 3)
    try:
        r = lss.status_report(K, d, budget=50_000)
    except ContradictionDetected:  # pragma: no cover
        pytest.fail("contradiction")
    assert not (r.prime_known and r.not_prime_known)


@pytest.mark.parametrize("dialect", lss.DIALECTS)
def test_cas_script(dialect):
    text = lss.emit_cas_script(PATH, 2, dialect, characteristic=32003)
    assert "32003" in text
    assert text.count("y_") or text.count("y(")
    if dialect == "macaulay2":
        assert "ideal(" in text
    else:
        assert "ideal I" in text


def test_cas_script_bad_dialect():
    with pytest.raises(ValueError):
        lss.emit_cas_script(PATH, 2, "maple")


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_generators_shape_and_identity(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    k = rng.randint(1, min(4, n))
    H = random_uniform(rng, n, k, rng.randint(1, 6))
    d = rng.randint(1, 5)
    for e, f in zip(H.edges, lss.generators(H, d)):
        assert len(f.terms) == d
        assert all(m.degree == len(e) and c == 1 for m, c in f.terms.items())
    if k >= 2:
        for v in H.covered_vertices():
            assert lss.matrix_identity_holds(H, lss.presentation_matrix(H, v, d))
