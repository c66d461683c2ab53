import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from lsspmd import exactlp
from lsspmd.errors import NotHomogeneousStrict, ShapeMismatch
from lsspmd.exactlp import Feasible, Infeasible, LinearSystem, Row, solve, verify


def feasible_float(sys: LinearSystem) -> bool:
    """Independent floating-point decision: maximize a common slack on the
    strict rows inside a large box."""
    n = sys.num_vars
    A, b = [], []
    for r in sys.rows:
        a, strict, rhs = r.oriented()
        row = [0.0] * (n + 1)
        for i, c in a.items():
            row[i] = float(c)
        row[n] = 1.0 if strict else 0.0
        A.append(row)
        b.append(float(rhs))
    res = linprog(
        c=[0.0] * n + [-1.0],
        A_ub=np.array(A),
        b_ub=np.array(b),
        bounds=[(-1e4, 1e4)] * n + [(None, 1)],
        method="highs",
    )
    if res.status != 0:
        return False
    has_strict = any(r.strict for r in sys.rows)
    return -res.fun > 1e-7 if has_strict else True


def random_system(rng: random.Random) -> LinearSystem:
    n = rng.randint(1, 4)
    rows = []
    for _ in range(rng.randint(1, 6)):
        coeffs = [rng.randint(-3, 3) for _ in range(n)]
        rows.append(Row.make(coeffs, rng.choice(exactlp.RELATIONS), rng.choice([0, 0, rng.randint(-3, 3)])))
    return LinearSystem.build(n, rows)


def test_simple_feasible():
    sys = LinearSystem.build(2, [Row.make([1, 1], ">", 1), Row.make([1, -1], "<=", 0)])
    v = solve(sys)
    assert isinstance(v, Feasible) and verify(sys, v)


def test_simple_infeasible_with_farkas():
    sys = LinearSystem.build(1, [Row.make([1], ">", 0), Row.make([1], "<", 0)])
    v = solve(sys)
    assert isinstance(v, Infeasible) and verify(sys, v)
    assert all(y >= 0 for y in v.farkas)


def test_four_cycle_perfect_matching_system():
    # x1+x2 > 0, x3+x4 > 0, x2+x3 < 0, x1+x4 < 0
    rows = [
        Row.make({0: 1, 1: 1}, ">", 0),
        Row.make({0: 1, 3: 1}, "<", 0),
        Row.make({1: 1, 2: 1}, "<", 0),
        Row.make({2: 1, 3: 1}, ">", 0),
    ]
    sys = LinearSystem.build(4, rows)
    v = solve(sys)
    assert isinstance(v, Infeasible)
    assert verify(sys, v)
    assert v.farkas == tuple(Fraction(1, 4) for _ in range(4))


def test_empty_system_is_feasible():
    v = solve(LinearSystem.build(3, []))
    assert isinstance(v, Feasible) and v.point == (0, 0, 0)


def test_verify_rejects_tampered_certificates():
    sys = LinearSystem.build(1, [Row.make([1], ">", 0), Row.make([1], "<", 0)])
    assert not verify(sys, Infeasible((Fraction(1), Fraction(2))))
    assert not verify(sys, Infeasible((Fraction(-1), Fraction(-1))))
    assert not verify(sys, Feasible((Fraction(0),)))
    with pytest.raises(ShapeMismatch):
        verify(sys, Infeasible((Fraction(1),)))


def test_shape_mismatch_on_build():
    with pytest.raises(ShapeMismatch):
        LinearSystem.build(1, [Row.make({3: 1}, "<", 0)])


def test_unknown_relation():
    with pytest.raises(ValueError):
        Row.make([1], "==", 0)


def test_normalize_strict_homogeneous():
    sys = LinearSystem.build(2, [Row.make([1, 0], ">", 0), Row.make([0, 1], "<", 0)])
    norm = exactlp.strict_homogeneous_normalize(sys)
    assert [r.relation for r in norm.rows] == [">=", "<="]
    assert [r.rhs for r in norm.rows] == [1, -1]
    with pytest.raises(NotHomogeneousStrict):
        exactlp.strict_homogeneous_normalize(LinearSystem.build(1, [Row.make([1], ">=", 0)]))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_solve_always_verifies(seed):
    sys = random_system(random.Random(seed))
    assert verify(sys, solve(sys))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_verdict_matches_float_oracle(seed):
    sys = random_system(random.Random(seed))
    assert solve(sys).feasible == feasible_float(sys)


def test_fraction_fallback_gives_identical_verdicts(monkeypatch):
    rng = random.Random(5)
    systems = [random_system(rng) for _ in range(150)]
    fast = [solve(s) for s in systems]
    monkeypatch.setattr(exactlp, "_Q", Fraction)
    monkeypatch.setattr(exactlp, "_to_fraction", lambda x: x)
    slow = [solve(s) for s in systems]
    assert fast == slow


def test_solve_is_deterministic():
    rng = random.Random(9)
    for _ in range(50):
        s = random_system(rng)
        assert solve(s) == solve(s)
