"""Exact feasibility for systems of strict and weak linear inequalities.

Every number is a :class:`fractions.Fraction`; nothing is ever rounded.  A call
to :func:`solve` returns either a feasible point or a Farkas certificate, and
:func:`verify` re-checks either kind from scratch.

Strict rows are handled by homogenization.  The system ``a.x REL b`` is lifted
to the cone ``a.x - b*t REL 0`` with an extra strict row ``t > 0``; a cone
with strict rows is feasible iff the same cone with every strict row tightened
to slack 1 is feasible (scale any solution).  That weak system is decided by
a phase-1 simplex with Bland's rule, and the certificate of infeasibility is
obtained by solving the Farkas alternative explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .errors import NotHomogeneousStrict, ShapeMismatch

Rational = Fraction
RELATIONS = (">", "<", ">=", "<=")
_STRICT = {">", "<"}

Number = Union[int, Fraction]

try:  # gmpy2 rationals are much faster inside the tableau; results stay Fraction
    from gmpy2 import mpq as _Q

    def _to_fraction(x) -> Fraction:
        return Fraction(int(x.numerator), int(x.denominator))

except ImportError:  # pragma: no cover
    _Q = Fraction

    def _to_fraction(x) -> Fraction:
        return x


@dataclass(frozen=True)
class Row:
    coeffs: tuple[tuple[int, Fraction], ...]  # sparse, sorted by variable index
    relation: str
    rhs: Fraction = Fraction(0)

    @classmethod
    def make(cls, coeffs: Union[Mapping[int, Number], Sequence[Number]], relation: str, rhs: Number = 0) -> "Row":
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        sparse = tuple(sorted((int(i), Fraction(c)) for i, c in items if c != 0))
        return cls(sparse, relation, Fraction(rhs))

    @property
    def strict(self) -> bool:
        return self.relation in _STRICT

    def lhs(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * point[i] for i, c in self.coeffs), Fraction(0))

    def holds(self, point: Sequence[Fraction]) -> bool:
        lhs = self.lhs(point)
        return {
            ">": lhs > self.rhs,
            "<": lhs < self.rhs,
            ">=": lhs >= self.rhs,
            "<=": lhs <= self.rhs,
        }[self.relation]

    def oriented(self) -> tuple[dict[int, Fraction], bool, Fraction]:
        """Return ``(coeffs, strict, rhs)`` rewritten as ``<`` or ``<=``."""
        sign = -1 if self.relation in (">", ">=") else 1
        return {i: sign * c for i, c in self.coeffs}, self.strict, sign * self.rhs

    def __str__(self) -> str:
        terms = " ".join(f"{'+' if c > 0 else '-'} {abs(c)}*x{i}" for i, c in self.coeffs) or "0"
        return f"{terms.lstrip('+ ')} {self.relation} {self.rhs}"


@dataclass(frozen=True)
class LinearSystem:
    num_vars: int
    rows: tuple[Row, ...]

    def __post_init__(self):
        for r in self.rows:
            for i, _ in r.coeffs:
                if not 0 <= i < self.num_vars:
                    raise ShapeMismatch(f"coefficient index {i} >= num_vars {self.num_vars}")

    @classmethod
    def build(cls, num_vars: int, rows: Sequence[Row]) -> "LinearSystem":
        return cls(num_vars, tuple(rows))

    def dump(self) -> str:
        """Human-readable listing, one row per line."""
        lines = [f"# {self.num_vars} variables, {len(self.rows)} rows"]
        lines += [f"r{k}: {row}" for k, row in enumerate(self.rows)]
        return "\n".join(lines)

    def is_homogeneous_strict(self) -> bool:
        return all(r.strict and r.rhs == 0 for r in self.rows)


@dataclass(frozen=True)
class Feasible:
    point: tuple[Fraction, ...]

    feasible = True

    def to_dict(self) -> dict:
        return {"kind": "feasible", "point": [str(x) for x in self.point]}


@dataclass(frozen=True)
class Infeasible:
    """Nonnegative multipliers, one per row of the original system."""

    farkas: tuple[Fraction, ...]

    feasible = False

    def to_dict(self) -> dict:
        return {"kind": "infeasible", "farkas": [str(y) for y in self.farkas]}


FeasibilityVerdict = Union[Feasible, Infeasible]


# -- simplex ------------------------------------------------------------------


def _nonneg_solution(
    A: list[dict[int, Fraction]],
    b: list[Fraction],
    ncols: int,
    unit_cols: Optional[list[Optional[int]]] = None,
) -> Optional[list[Fraction]]:
    """Find ``z >= 0`` with ``A z = b`` (rows given sparse), or None.

    Phase-1 simplex on a dense tableau with Bland's smallest-index rule for
    both entering and leaving choices.  ``unit_cols[i]``, when given, names a
    column that is +1 in row ``i`` and zero elsewhere; it starts in the basis
    if ``b[i] >= 0``.  Every other row gets an artificial column.
    """
    m = len(A)
    if m == 0:
        return [Fraction(0)] * ncols
    unit_cols = unit_cols or [None] * m
    artificial = [i for i in range(m) if unit_cols[i] is None or b[i] < 0]
    width = ncols + len(artificial)
    T: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    zero = _Q(0)
    basis = [0] * m
    for i, row in enumerate(A):
        sign = -1 if b[i] < 0 else 1
        dense = [zero] * width
        for j, a in row.items():
            dense[j] = sign * _Q(a)
        T.append(dense)
        rhs.append(sign * _Q(b[i]))
    for slot, i in enumerate(artificial):
        T[i][ncols + slot] = _Q(1)
        basis[i] = ncols + slot
    for i in range(m):
        if i not in artificial:
            basis[i] = unit_cols[i]
    # reduced costs for minimizing the sum of artificials
    cost = [zero] * width
    for i in artificial:
        for j in range(ncols):
            if T[i][j]:
                cost[j] -= T[i][j]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen: phase-1 objective is bounded below
            raise ArithmeticError("unbounded phase-1 problem")
        _pivot(T, rhs, cost, leave, enter)
        basis[leave] = enter
    if any(rhs[i] != 0 for i in range(m) if basis[i] >= ncols):
        return None
    z = [Fraction(0)] * ncols
    for i, j in enumerate(basis):
        if j < ncols:
            z[j] = _to_fraction(rhs[i])
    return z


def _pivot(T, rhs, cost, r, c):
    prow = T[r]
    p = prow[c]
    if p != 1:
        inv = 1 / p
        for j, a in enumerate(prow):
            if a:
                prow[j] = a * inv
        rhs[r] *= inv
    nz = [j for j, a in enumerate(prow) if a]
    for i, row in enumerate(T):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]
            rhs[i] -= f * rhs[r]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]


def _weak_feasible(rows: list[tuple[dict[int, Fraction], Fraction]], nvars: int):
    """Decide ``{y : a_i . y <= b_i}`` with free ``y``.

    Returns ``("point", y)`` or ``("farkas", lam)`` with ``lam >= 0``,
    ``sum lam_i a_i = 0`` and ``sum lam_i b_i = -1``.
    """
    m = len(rows)
    # y = y+ - y-, plus one slack per row
    A = []
    for i, (a, _) in enumerate(rows):
        row = {}
        for j, c in a.items():
            row[j] = c
            row[nvars + j] = -c
        row[2 * nvars + i] = Fraction(1)
        A.append(row)
    z = _nonneg_solution(A, [b for _, b in rows], 2 * nvars + m, [2 * nvars + i for i in range(m)])
    if z is not None:
        return "point", [z[j] - z[nvars + j] for j in range(nvars)]
    # alternative: lam >= 0, A^T lam = 0, b . lam = -1
    alt = []
    for j in range(nvars):
        alt.append({i: a[j] for i, (a, _) in enumerate(rows) if a.get(j)})
    alt.append({i: b for i, (_, b) in enumerate(rows) if b})
    lam = _nonneg_solution(alt, [Fraction(0)] * nvars + [Fraction(-1)], m)
    if lam is None:
        raise ArithmeticError("neither the system nor its Farkas alternative is feasible")
    return "farkas", lam


def solve(sys: LinearSystem) -> FeasibilityVerdict:
    """Exact verdict with a self-verifying certificate.

    Deterministic given the row order.  An empty system is feasible at the
    origin.
    """
    n = sys.num_vars
    if not sys.rows:
        return Feasible(tuple([Fraction(0)] * n))
    oriented = [r.oriented() for r in sys.rows]
    homogeneous = all(b == 0 for _, _, b in oriented)
    t = n  # index of the homogenizing variable
    weak = []
    for a, strict, b in oriented:
        a = dict(a)
        if not homogeneous and b:
            a[t] = -b
        weak.append((a, Fraction(-1) if strict else Fraction(0)))
    nv = n
    if not homogeneous:
        weak.append(({t: Fraction(-1)}, Fraction(-1)))
        nv = n + 1
    kind, vec = _weak_feasible(weak, nv)
    if kind == "point":
        if homogeneous:
            return Feasible(tuple(vec))
        scale = vec[t]
        return Feasible(tuple(x / scale for x in vec[:n]))
    return Infeasible(tuple(vec[: len(sys.rows)]))


def verify(sys: LinearSystem, verdict: FeasibilityVerdict) -> bool:
    """Re-check a verdict using rational arithmetic only."""
    if isinstance(verdict, Feasible):
        if len(verdict.point) != sys.num_vars:
            raise ShapeMismatch(f"point has {len(verdict.point)} coordinates, expected {sys.num_vars}")
        point = [Fraction(x) for x in verdict.point]
        return all(r.holds(point) for r in sys.rows)
    if isinstance(verdict, Infeasible):
        if len(verdict.farkas) != len(sys.rows):
            raise ShapeMismatch(f"{len(verdict.farkas)} multipliers for {len(sys.rows)} rows")
        lam = [Fraction(y) for y in verdict.farkas]
        if any(y < 0 for y in lam):
            return False
        combo: dict[int, Fraction] = {}
        total = Fraction(0)
        strict_used = False
        for y, row in zip(lam, sys.rows):
            if not y:
                continue
            a, strict, b = row.oriented()
            for i, c in a.items():
                combo[i] = combo.get(i, Fraction(0)) + y * c
            total += y * b
            strict_used = strict_used or strict
        if any(combo.values()):
            return False
        # combined row reads 0 <= total (or 0 < total when a strict row is used)
        return total < 0 or (total == 0 and strict_used)
    raise TypeError(f"not a verdict: {verdict!r}")


def strict_homogeneous_normalize(sys: LinearSystem) -> LinearSystem:
    """Rewrite ``> 0`` as ``>= 1`` and ``< 0`` as ``<= -1``.

    Valid because a homogeneous strict system is invariant under positive
    scaling.
    """
    if not sys.is_homogeneous_strict():
        raise NotHomogeneousStrict("every row must be strict with right-hand side 0")
    rows = []
    for r in sys.rows:
        if r.relation == ">":
            rows.append(Row(r.coeffs, ">=", Fraction(1)))
        else:
            rows.append(Row(r.coeffs, "<=", Fraction(-1)))
    return LinearSystem(sys.num_vars, tuple(rows))
