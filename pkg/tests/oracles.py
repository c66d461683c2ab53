"""Brute-force reference implementations used only by the tests.

Each one re-derives a quantity from its definition with no shared code paths
beyond the data types, so agreement with the library is meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np
from scipy.optimize import linprog

from lsspmd import hypergraph as hg
from lsspmd.lss import Monomial, Polynomial


# -- trees --------------------------------------------------------------------


def _admissible(edges, seq, v, w) -> bool:
    if v not in edges[seq[0]] or w not in edges[seq[-1]]:
        return False
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            meet = len(set(edges[seq[a]]) & set(edges[seq[b]]))
            if b == a + 1 and meet != 1:
                return False
            if b > a + 1 and meet != 0:
                return False
    if any(v in edges[s] for s in seq[1:]) or any(w in edges[s] for s in seq[:-1]):
        return False
    return True


def brute_sequence_count(H: hg.Hypergraph, v: int, w: int) -> int:
    """Number of admissible edge sequences from v to w, by listing every
    ordered selection of distinct edges."""
    count = 0
    for r in range(1, H.m + 1):
        for seq in permutations(range(H.m), r):
            if _admissible(H.edges, seq, v, w):
                count += 1
    return count


def brute_is_tree(H: hg.Hypergraph) -> bool:
    k = H.uniformity()
    if k is None:
        return False
    for a, b in combinations(H.edges, 2):
        if len(set(a) & set(b)) > 1:
            return False
    return all(brute_sequence_count(H, v, w) == 1 for v, w in combinations(range(1, H.n + 1), 2))


def random_uniform(rng: random.Random, n: int, k: int, m: int | None = None) -> hg.Hypergraph:
    pool = list(combinations(range(1, n + 1), k))
    if m is None:
        m = rng.randint(1, len(pool))
    return hg.validate(n, rng.sample(pool, min(m, len(pool))))


def random_clutter(rng: random.Random, n: int, max_edges: int) -> hg.Hypergraph:
    """Random clutter with mixed edge sizes (inclusion-comparable picks are skipped)."""
    edges: list[frozenset] = []
    for _ in range(4 * max_edges):
        if len(edges) >= max_edges:
            break
        size = rng.randint(1, min(4, n))
        e = frozenset(rng.sample(range(1, n + 1), size))
        if any(e <= f or f <= e for f in edges):
            continue
        edges.append(e)
    return hg.validate(n, [sorted(e) for e in edges])


def random_matching(rng: random.Random, H: hg.Hypergraph, maximal: bool = False) -> list[int]:
    order = list(range(H.m))
    rng.shuffle(order)
    used: set[int] = set()
    out = []
    for i in order if maximal else order[: rng.randint(0, H.m)]:
        if not used & set(H.edges[i]):
            out.append(i)
            used.update(H.edges[i])
    return sorted(out)


def tree_corpus(count: int = 50, seed: int = 2024) -> list[hg.Hypergraph]:
    """Seeded k-uniform trees, k in {2, 3, 4}, 1..25 edges."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        k = (2, 3, 4)[i % 3]
        m = rng.randint(1, 25) if i % 2 else rng.randint(1, 10)
        out.append(hg.random_tree(k, m, rng.randrange(2**32)))
    return out


# -- linear feasibility (floating point, independent solver) ------------------


def strict_feasible_float(rows) -> bool:
    """Feasibility of a homogeneous strict system ``a.x < 0 / a.x > 0``.

    Maximize s subject to ``a.x + s <= 0`` (sign-flipped for ``>``),
    ``s <= 1``, box ``|x| <= 1000``; feasible iff s > 0.
    """
    nv = len(rows[0][0])
    A, b = [], []
    for coeffs, rel in rows:
        a = np.array(coeffs, dtype=float)
        if rel == ">":
            a = -a
        A.append(list(a) + [1.0])
        b.append(0.0)
    res = linprog(
        c=[0.0] * nv + [-1.0],
        A_ub=A,
        b_ub=b,
        bounds=[(-1000, 1000)] * nv + [(None, 1)],
        method="highs",
    )
    return res.status == 0 and -res.fun > 1e-7


def positive_float(H: hg.Hypergraph, matching) -> bool:
    chosen = set(matching)
    rows = []
    for i, e in enumerate(H.edges):
        rows.append(([1 if v in e else 0 for v in range(1, H.n + 1)], ">" if i in chosen else "<"))
    return strict_feasible_float(rows)


# -- pmd ----------------------------------------------------------------------


def brute_pmd(H: hg.Hypergraph) -> int:
    """Minimum number of parts over all ordered set partitions of the edges."""
    from lsspmd.positive import Positive, certify_edges

    cache: dict = {}

    def positive(part, residual):
        key = (part, residual)
        if key not in cache:
            edges = [H.edges[i] for i in residual]
            local = [residual.index(i) for i in part]
            cache[key] = isinstance(certify_edges(edges, local), Positive)
        return cache[key]

    for p in range(1, H.m + 1):
        for labels in product(range(p), repeat=H.m):
            if set(labels) != set(range(p)):
                continue
            ok = True
            residual = tuple(range(H.m))
            for j in range(p):
                part = tuple(i for i in range(H.m) if labels[i] == j)
                if not positive(part, residual):
                    ok = False
                    break
                residual = tuple(i for i in residual if labels[i] != j)
            if ok:
                return p
    raise AssertionError("unreachable: singletons always work")


# -- determinants -------------------------------------------------------------


def _sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def leibniz(entries: list[list[Monomial]], t: int) -> Polynomial:
    """Determinant of the leading t x t block as a signed sum over permutations."""
    out: dict[Monomial, Fraction] = {}
    for perm in permutations(range(t)):
        mono = Monomial.of({})
        for r in range(t):
            mono = mono * entries[r][perm[r]]
        out[mono] = out.get(mono, Fraction(0)) + _sign(perm)
    return Polynomial({m: c for m, c in out.items() if c})


# -- obstruction --------------------------------------------------------------


def brute_obstruction(H: hg.Hypergraph, max_c: int) -> int:
    """max |W| + c over every apex set C (1 <= c <= max_c) and every family W
    of (k-1)-subsets of [n] \\ C whose join with C lies inside E(H)."""
    k = H.uniformity()
    E = set(H.edges)
    best = 0
    for c in range(1, max_c + 1):
        if k - 1 > H.n - c:
            break
        for C in combinations(range(1, H.n + 1), c):
            rest = [v for v in range(1, H.n + 1) if v not in C]
            pool = list(combinations(rest, k - 1))
            for r in range(len(pool), 0, -1):
                if r + c <= best:
                    break
                hit = False
                for W in combinations(pool, r):
                    joined = {tuple(sorted(w + (a,))) for w in W for a in C}
                    if joined <= E:
                        hit = True
                        break
                if hit:
                    best = max(best, r + c)
                    break
    return best
