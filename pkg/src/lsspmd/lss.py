"""The algebraic side: LSS generators, the presentation matrix, its minors,
the ``H_{W,c}`` obstruction, and the status reporter that chains the known
implications together.

Polynomials live in ``K[y_ij : i in [n], j in [d]]``.  Variables are pairs
``(i, j)`` (vertex, slot); the field only enters through emitted CAS scripts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ContradictionDetected, InvalidD, NoEdges, NotUniform, PivotIsolated, TOutOfRange
from .hypergraph import Hypergraph, degrees, max_degree
from .pmd import PmdBounds, pmd_bounds

Var = tuple[int, int]


@dataclass(frozen=True, order=True)
class Monomial:
    """Sorted ``((i, j), exponent)`` pairs with positive exponents."""

    powers: tuple[tuple[Var, int], ...] = ()

    @classmethod
    def of(cls, factors: Iterable[Var] | Mapping[Var, int]) -> "Monomial":
        exps: dict[Var, int] = {}
        if isinstance(factors, Mapping):
            for v, e in factors.items():
                if e:
                    exps[v] = exps.get(v, 0) + e
        else:
            for v in factors:
                exps[v] = exps.get(v, 0) + 1
        return cls(tuple(sorted(exps.items())))

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self.powers)
        for v, e in other.powers:
            exps[v] = exps.get(v, 0) + e
        return Monomial(tuple(sorted(exps.items())))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def variables(self) -> list[Var]:
        return [v for v, _ in self.powers]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.powers)

    def order_key(self):
        # graded lex with y_11 > y_12 > ... > y_21 > ...; ascending key = descending order
        return (-self.degree, tuple((v, -e) for v, e in self.powers) + (((1 << 60, 0), 0),))

    def evaluate(self, point: Mapping[Var, Fraction]) -> Fraction:
        out = Fraction(1)
        for v, e in self.powers:
            out *= Fraction(point[v]) ** e
        return out

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(f"y_{i},{j}" + (f"^{e}" if e > 1 else "") for (i, j), e in self.powers)


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    Zero coefficients are never stored.  Iteration and printing follow graded
    lexicographic order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Fraction]] = None):
        self.terms: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            if c:
                self.terms[mono] = Fraction(c)

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "Polynomial":
        return cls({mono: Fraction(coeff)})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({Monomial(): Fraction(c)})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].order_key())

    def evaluate(self, point: Mapping[Var, Fraction]) -> Fraction:
        return sum((c * m.evaluate(point) for m, c in self.terms.items()), Fraction(0))

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v in m.variables}

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            mag = abs(c)
            if not mono.powers:
                body = str(mag)
            else:
                body = str(mono) if mag == 1 else f"{mag}*{mono}"
            out.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# -- generators ---------------------------------------------------------------


def generator(edge: Sequence[int], d: int) -> Polynomial:
    """``sum_j prod_{i in edge} y_ij`` for slots ``j = 1..d``."""
    return Polynomial({Monomial.of((i, j) for i in edge): Fraction(1) for j in range(1, d + 1)})


def generators(H: Hypergraph, d: int) -> list[Polynomial]:
    """One generator per edge, in canonical edge order."""
    if d < 1:
        raise InvalidD(f"d must be >= 1, got {d}", d=d)
    return [generator(e, d) for e in H.edges]


# -- presentation matrix ------------------------------------------------------


@dataclass(frozen=True)
class PresentationMatrix:
    """``u x d`` matrix with entry ``(r, j) = prod_{l in rows[r]} y_{l j}``.

    ``rows`` are the (k-1)-sets completing ``pivot`` to an edge, in
    lexicographic order.
    """

    pivot: int
    rows: tuple[tuple[int, ...], ...]
    d: int
    k: int

    @property
    def u(self) -> int:
        return len(self.rows)

    def entry(self, r: int, j: int) -> Monomial:
        """Entry for row index ``r`` (0-based) and slot ``j`` (1-based)."""
        return Monomial.of((l, j) for l in self.rows[r])

    def matrix(self) -> list[list[Monomial]]:
        return [[self.entry(r, j) for j in range(1, self.d + 1)] for r in range(self.u)]


def _require_uniform(H: Hypergraph) -> int:
    k = H.uniformity()
    if k is None:
        raise NotUniform("hypergraph must be k-uniform with at least one edge")
    return k


def default_pivot(H: Hypergraph) -> int:
    """Smallest vertex of maximum degree."""
    deg = degrees(H)
    top = max(deg.values())
    return min(v for v, x in deg.items() if x == top)


def presentation_matrix(H: Hypergraph, pivot: Optional[int] = None, d: int = 2) -> PresentationMatrix:
    if d < 1:
        raise InvalidD(f"d must be >= 1, got {d}", d=d)
    k = _require_uniform(H)
    if pivot is None:
        pivot = default_pivot(H)
    if not 1 <= pivot <= H.n:
        raise PivotIsolated(f"pivot {pivot} is not a vertex", pivot=pivot)
    rows = sorted(tuple(v for v in e if v != pivot) for e in H.edges if pivot in e)
    if not rows:
        raise PivotIsolated(f"pivot {pivot} lies in no edge", pivot=pivot)
    return PresentationMatrix(pivot, tuple(rows), d, k)


def matrix_identity_holds(H: Hypergraph, A: PresentationMatrix) -> bool:
    """Check ``sum_j A[r][j] * y_{pivot, j} == f_{row_r + pivot}`` for every row."""
    for r, link in enumerate(A.rows):
        lhs = Polynomial()
        for j in range(1, A.d + 1):
            lhs = lhs + Polynomial.monomial(A.entry(r, j) * Monomial.of([(A.pivot, j)]))
        if lhs != generator(sorted(link + (A.pivot,)), A.d):
            return False
    return True


def leading_minor(A: PresentationMatrix, t: int) -> Polynomial:
    """Determinant of the top-left ``t x t`` block.

    Laplace expansion along rows, memoized on the set of columns still
    available, so the cost is ``O(t * 2^t)`` polynomial products.
    """
    if not 1 <= t <= min(A.u, A.d):
        raise TOutOfRange(f"t must lie in 1..{min(A.u, A.d)}, got {t}", t=t)
    entries = A.matrix()

    @lru_cache(maxsize=None)
    def det(r: int, cols: frozenset) -> Polynomial:
        # determinant of rows r..t-1 against the columns in ``cols``
        if r == t:
            return Polynomial.constant(1)
        out = Polynomial()
        for pos, c in enumerate(sorted(cols)):
            sub = det(r + 1, cols - {c})
            if sub.is_zero():
                continue
            term = Polynomial.monomial(entries[r][c]) * sub
            out = out + term if pos % 2 == 0 else out - term
        return out

    return det(0, frozenset(range(t)))


def support_check(minor: Polynomial, k: int, t: int) -> bool:
    """Nonzero, and each support monomial squarefree with exactly ``k - 1``
    variables in every slot ``1..t`` and none elsewhere.

    Every monomial of the LSS ideal is divisible by ``k`` variables sharing a
    slot, so such a polynomial cannot lie in it.
    """
    if minor.is_zero():
        return False
    for mono in minor.terms:
        if not mono.is_squarefree():
            return False
        per_slot: dict[int, int] = {}
        for _, j in mono.variables:
            per_slot[j] = per_slot.get(j, 0) + 1
        if per_slot != {j: k - 1 for j in range(1, t + 1)}:
            return False
    return True


# -- obstruction --------------------------------------------------------------


@dataclass(frozen=True)
class ObstructionWitness:
    """Apex set ``C`` and base sets ``W`` with every ``w + {x}`` an edge."""

    c: int
    C: tuple[int, ...]
    W: tuple[tuple[int, ...], ...]

    @property
    def value(self) -> int:
        return len(self.W) + self.c

    def holds_in(self, H: Hypergraph) -> bool:
        edges = set(H.edges)
        k = _require_uniform(H)
        if not self.W or len(self.C) != self.c or k - 1 > H.n - self.c:
            return False
        for w in self.W:
            if len(w) != k - 1 or set(w) & set(self.C):
                return False
            for x in self.C:
                if tuple(sorted(w + (x,))) not in edges:
                    return False
        return True

    def to_dict(self) -> dict:
        return {"c": self.c, "C": list(self.C), "W": [list(w) for w in self.W], "value": self.value}


def obstruction_search(H: Hypergraph, max_c: Optional[int] = None) -> ObstructionWitness:
    """Largest ``|W| + c`` over apex sets of size ``1..max_c``.

    For a fixed apex set the best ``W`` is everything in the common link, so
    the search is over apex sets only.  An apex set with nonempty ``W`` lies
    inside ``{x : w + {x} in E}`` for each of its base sets ``w``, so only
    subsets of those codegree sets are tried.  Ties go to the
    lexicographically smallest apex set.  Raises NoEdges on an edgeless input.
    """
    k = _require_uniform(H)
    if max_c is None:
        max_c = H.n - k + 1
    max_c = min(max_c, H.n - k + 1)
    links: dict[int, set[tuple[int, ...]]] = {v: set() for v in H.vertices}
    apexes: dict[tuple[int, ...], list[int]] = {}
    for e in H.edges:
        for x in e:
            w = tuple(v for v in e if v != x)
            links[x].add(w)
            apexes.setdefault(w, []).append(x)
    candidates: set[tuple[int, ...]] = set()
    for xs in apexes.values():
        xs = sorted(xs)
        for c in range(1, min(max_c, len(xs)) + 1):
            candidates.update(combinations(xs, c))
    best: Optional[ObstructionWitness] = None
    for C in sorted(candidates, key=lambda C: (len(C), C)):
        common = set.intersection(*(links[x] for x in C))
        W = tuple(sorted(w for w in common if not set(w) & set(C)))
        if not W:
            continue
        cand = ObstructionWitness(len(C), C, W)
        if best is None or cand.value > best.value or (cand.value == best.value and C < best.C):
            best = cand
    if best is None:
        raise NoEdges("hypergraph has no edges")
    return best


# -- status -------------------------------------------------------------------


@dataclass
class StatusReport:
    n: int
    k: int
    d: int
    pmd_bounds: PmdBounds
    obstruction: ObstructionWitness
    ci_known: bool
    prime_known: bool
    not_prime_known: bool
    rank_bound: int
    irreducible_range: Optional[tuple[int, int]]
    notes: list[str] = field(default_factory=list)

    @property
    def pmd_upper(self) -> int:
        return self.pmd_bounds.upper

    @property
    def obstruction_value(self) -> int:
        return self.obstruction.value

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "pmd": self.pmd_bounds.to_dict(),
            "pmd_upper": self.pmd_upper,
            "obstruction_value": self.obstruction_value,
            "obstruction": self.obstruction.to_dict(),
            "ci_known": self.ci_known,
            "prime_known": self.prime_known,
            "not_prime_known": self.not_prime_known,
            "rank_bound": self.rank_bound,
            "irreducible_range": list(self.irreducible_range) if self.irreducible_range else None,
            "notes": self.notes,
        }


def status_report(H: Hypergraph, d: int, budget: Optional[int] = None) -> StatusReport:
    """Combine pmd bounds and the obstruction into what is *known* at ``d``.

    * ``pmd <= d`` gives a complete intersection,
    * ``pmd <= d - 1`` gives a complete intersection at ``d - 1`` and hence a
      prime ideal at ``d``, so the coordinate section is irreducible,
    * an ``H_{W,c}`` with ``|W| + c > d`` rules primality out.

    A flag that is False means "not established", never "false".
    """
    if d < 1:
        raise InvalidD(f"d must be >= 1, got {d}", d=d)
    k = _require_uniform(H)
    bounds, _ = pmd_bounds(H, budget=budget)
    witness = obstruction_search(H, H.n - k + 1)
    ci_known = bounds.upper <= d
    prime_known = d >= 2 and bounds.upper <= d - 1
    not_prime_known = witness.value > d
    if prime_known and not_prime_known:
        raise ContradictionDetected(
            f"pmd upper bound {bounds.upper} <= d - 1 but obstruction value {witness.value} > d = {d}",
            d=d,
        )
    if prime_known and not ci_known:
        raise ContradictionDetected("prime without complete intersection")
    rank_bound = comb(H.n + k - 1, k) - H.n
    lo = bounds.upper + 1
    irreducible_range = (lo, rank_bound) if lo <= rank_bound else None
    notes = []
    if bounds.exact is None:
        notes.append("pmd upper bound is not known to be optimal")
    if prime_known and irreducible_range and d <= rank_bound:
        notes.append(f"coordinate section at d={d} is irreducible")
    if not ci_known and not not_prime_known:
        notes.append("primality at this d is undecided by the available criteria")
    return StatusReport(
        H.n, k, d, bounds, witness, ci_known, prime_known, not_prime_known, rank_bound, irreducible_range, notes
    )


# -- CAS scripts --------------------------------------------------------------

DIALECTS = ("macaulay2", "singular")


def _poly_text(p: Polynomial, var) -> str:
    parts = []
    for mono, c in p.sorted_terms():
        body = "*".join(var(i, j) + (f"^{e}" if e > 1 else "") for (i, j), e in mono.powers)
        mag = abs(c)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        parts.append(("-" if c < 0 else "+") + body)
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def emit_cas_script(H: Hypergraph, d: int, dialect: str = "macaulay2", characteristic: int = 0) -> str:
    """Ring, ideal and check lines for an external computer algebra system.

    Output is byte-for-byte deterministic for a given input.
    """
    if d < 1:
        raise InvalidD(f"d must be >= 1, got {d}", d=d)
    if dialect not in DIALECTS:
        raise ValueError(f"dialect must be one of {DIALECTS}, got {dialect!r}")
    if characteristic < 0:
        raise ValueError("characteristic must be 0 or a prime")
    gens = generators(H, d)
    n = H.n
    if dialect == "macaulay2":
        field_ = "QQ" if characteristic == 0 else f"ZZ/{characteristic}"
        def var(i, j):
            return f"y_({i},{j})"
        ring = f"R = {field_}[y_(1,1)..y_({n},{d})];"
        ideal = "I = ideal(" + (", ".join(_poly_text(g, var) for g in gens) or "0_R") + ");"
        check = 'print("prime: " | toString isPrime I); print("complete intersection: " | toString(codim I == numgens I));'
    else:
        def var(i, j):
            return f"y({i})({j})"
        ring = f"ring R = {characteristic}, (y(1..{n})(1..{d})), dp;"
        ideal = "ideal I = " + (", ".join(_poly_text(g, var) for g in gens) or "0") + ";"
        check = (
            'LIB "primdec.lib"; ideal G = std(I); list P = primdecGTZ(I); '
            '"prime:"; (size(P) == 1) && (size(reduce(P[1][2], G, 1)) == 0); '
            '"complete intersection:"; (nvars(basering) - dim(G)) == ncols(I);'
        )
    header = f"-- LSS ideal: n={n}, d={d}, edges={len(H.edges)}" if dialect == "macaulay2" else f"// LSS ideal: n={n}, d={d}, edges={len(H.edges)}"
    return "\n".join([header, ring, ideal, check]) + "\n"
