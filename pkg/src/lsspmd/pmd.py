"""Positive matching decompositions.

A pmd of ``H`` is an ordered partition ``E_1, ..., E_p`` of the edges where
each ``E_i`` is a positive matching of the residual hypergraph left after
removing ``E_1, ..., E_{i-1}``.  ``pmd(H)`` is the least such ``p``; it is at
least the maximum degree.

Three producers live here:

* :func:`pmd_tree` - the constructive Delta-part decomposition for k-uniform
  trees, certified with explicit +1/-1 weights,
* :func:`greedy_pmd` - repeatedly strip a greedy positive matching,
* :func:`pmd_exact` - iterative deepening search for the true minimum.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import positive
from .errors import BudgetExceeded, NoEdges, NotATree, StarDecompositionViolation
from .hypergraph import (
    Edge,
    Hypergraph,
    check_tree,
    connected_components,
    delete_edges,
    find_leaf,
    matching_number,
    max_degree,
)
from .positive import WeightCertificate

log = logging.getLogger(__name__)


@dataclass
class PmdDecomposition:
    """Ordered parts (edge indices into the owning hypergraph) and, for each
    part, a weight certificate valid against the residual hypergraph."""

    parts: list[list[int]]
    certificates: list[WeightCertificate]
    mode: str = "exact"
    stats: dict = field(default_factory=dict)

    @property
    def p(self) -> int:
        return len(self.parts)

    def verify(self, H: Hypergraph) -> bool:
        return verify_decomposition(H, self)

    def to_dict(self, H: Hypergraph) -> dict:
        return {
            "p": self.p,
            "parts": [[list(H.edges[i]) for i in part] for part in self.parts],
            "certificates": [c.to_dict() for c in self.certificates],
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, H: Hypergraph, data: dict) -> "PmdDecomposition":
        parts = [[H.index_of(e) for e in part] for part in data["parts"]]
        certs = [WeightCertificate.from_dict(c) for c in data["certificates"]]
        return cls(parts, certs, data.get("mode", "exact"))


@dataclass(frozen=True)
class PmdBounds:
    lower: int
    upper: int
    exact: Optional[int] = None

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def verify_decomposition(H: Hypergraph, dec: PmdDecomposition) -> bool:
    """Partition, matching and residual-positivity checks, all exact."""
    if len(dec.certificates) != len(dec.parts):
        return False
    seen: list[int] = [i for part in dec.parts for i in part]
    if any(not part for part in dec.parts):
        return False
    if sorted(seen) != list(range(H.m)):
        return False
    removed: set[int] = set()
    for part, cert in zip(dec.parts, dec.certificates):
        used: set[int] = set()
        for i in part:
            if used & set(H.edges[i]):
                return False
            used.update(H.edges[i])
        inside = set(part)
        for i, e in enumerate(H.edges):
            if i in removed:
                continue
            w = cert.weight(e)
            if (i in inside and w <= 0) or (i not in inside and w >= 0):
                return False
        removed |= inside
    return True


def _merge(pieces: Sequence[tuple[list[list[int]], list[dict[int, Fraction]]]]) -> tuple[list[list[int]], list[dict[int, Fraction]]]:
    """Union per-component decompositions part by part.

    Components share no vertices, so the union of their weightings certifies
    the union of their i-th parts against the union of their residuals.
    """
    p = max((len(parts) for parts, _ in pieces), default=0)
    parts: list[list[int]] = [[] for _ in range(p)]
    weights: list[dict[int, Fraction]] = [{} for _ in range(p)]
    for comp_parts, comp_weights in pieces:
        for j, (part, w) in enumerate(zip(comp_parts, comp_weights)):
            parts[j].extend(part)
            weights[j].update(w)
    return [sorted(x) for x in parts], weights


# -- trees --------------------------------------------------------------------


@dataclass
class TreeStage:
    """One round of the construction: the candidate set, its stars (keyed by
    the shared vertex) and the edges chosen into the matching."""

    candidates: list[int]
    stars: dict[int, list[int]]
    chosen: list[int]


@dataclass
class TreeMatching:
    """Result of the matching construction on one connected tree."""

    graph: Hypergraph
    leaf: int
    matching: list[int]
    rest: list[int]
    weights: dict[int, Fraction]
    stages: list[TreeStage]
    used_fallback: bool = False


def tree_positive_matching(G: Hypergraph) -> TreeMatching:
    """Positive matching of a connected tree covering every vertex of degree >= 2.

    Starting from the edge at a leaf, the matching ``M`` and the set ``M'`` of
    edges meeting it grow outward level by level.  At each level the edges
    just beyond ``M'`` split into vertex-disjoint stars; one edge per star
    (the smallest) joins ``M``.  Vertices first reached through ``M`` weigh
    +1 and those first reached through ``M'`` weigh -1, which makes ``M``
    positive when k >= 3.  For k = 2 that weighting ties at zero, so the
    exact LP supplies the certificate instead.
    """
    sets = [frozenset(e) for e in G.edges]
    m = G.m
    leaf = find_leaf(G, check=False)
    start = next(i for i, e in enumerate(sets) if leaf in e)
    M = [start]
    in_M = {start}
    in_Mp = {j for j in range(m) if j != start and sets[j] & sets[start]}
    weights: dict[int, Fraction] = {}

    def assign_weights():
        vm = {v for j in in_M for v in sets[j]}
        vmp = {v for j in in_Mp for v in sets[j]}
        for v in vm:
            weights.setdefault(v, Fraction(1))
        for v in vmp:
            weights.setdefault(v, Fraction(-1))

    assign_weights()
    stages: list[TreeStage] = []
    while len(in_M) + len(in_Mp) < m:
        touched = {v for j in in_Mp for v in sets[j]}
        candidates = [j for j in range(m) if j not in in_M and j not in in_Mp and sets[j] & touched]
        if not candidates:
            raise StarDecompositionViolation("construction stalled; the input is not a connected tree")
        vm = {v for j in in_M for v in sets[j]}
        frontier = touched - vm
        stars: dict[int, list[int]] = {}
        for j in candidates:
            hub = sets[j] & frontier
            if len(hub) != 1:
                raise StarDecompositionViolation(f"edge {G.edges[j]} meets the frontier in {sorted(hub)}")
            stars.setdefault(next(iter(hub)), []).append(j)
        _check_stars(G, stars)
        chosen = sorted(min(group) for group in stars.values())
        M.extend(chosen)
        in_M.update(chosen)
        # M' gains the unchosen star edges and everything touching the new M edges
        in_Mp.update(j for j in candidates if j not in in_M)
        new_vm = {v for j in chosen for v in sets[j]}
        in_Mp.update(j for j in range(m) if j not in in_M and j not in in_Mp and sets[j] & new_vm)
        assign_weights()
        stages.append(TreeStage(candidates, {v: sorted(g) for v, g in sorted(stars.items())}, chosen))

    M.sort()
    result = TreeMatching(G, leaf, M, sorted(in_Mp), weights, stages)
    if not WeightCertificate(weights).certifies(G.edges, M):
        verdict = positive.certify_edges(G.edges, M)
        if not isinstance(verdict, positive.Positive):
            raise StarDecompositionViolation("constructed matching is not positive")
        result.weights = dict(verdict.certificate.weights)
        result.used_fallback = True
        if G.uniformity() != 2:
            log.warning("tree weights failed to certify on %s; used LP certificate", G)
    return result


def _check_stars(G: Hypergraph, stars: dict[int, list[int]]) -> None:
    sets = [frozenset(e) for e in G.edges]
    for hub, group in stars.items():
        for a in group:
            for b in group:
                if a < b and sets[a] & sets[b] != {hub}:
                    raise StarDecompositionViolation(f"star at {hub}: {G.edges[a]} and {G.edges[b]} overlap beyond the hub")
    hubs = sorted(stars)
    for x in hubs:
        for y in hubs:
            if x < y:
                vx = {v for j in stars[x] for v in sets[j]}
                vy = {v for j in stars[y] for v in sets[j]}
                if vx & vy:
                    raise StarDecompositionViolation(f"stars at {x} and {y} share vertices {sorted(vx & vy)}")


def _forest_parts(H: Hypergraph, trace: Optional[list]) -> tuple[list[list[int]], list[dict[int, Fraction]], int]:
    pieces = []
    fallbacks = 0
    for comp in connected_components(H):
        parts, weights, fb = _tree_parts(comp.graph, trace)
        fallbacks += fb
        pieces.append((
            [[comp.edge_map[i] for i in part] for part in parts],
            [{comp.lift_vertex(v): w for v, w in wt.items()} for wt in weights],
        ))
    parts, weights = _merge(pieces)
    return parts, weights, fallbacks


def _tree_parts(G: Hypergraph, trace: Optional[list]) -> tuple[list[list[int]], list[dict[int, Fraction]], int]:
    delta = max_degree(G)
    if delta == 1:
        # connected with maximum degree one: a single edge
        return [list(range(G.m))], [{v: Fraction(1) for e in G.edges for v in e}], 0
    tm = tree_positive_matching(G)
    if trace is not None:
        trace.append(tm)
    rest = delete_edges(G, tm.matching)
    keep = [i for i in range(G.m) if i not in set(tm.matching)]
    sub_parts, sub_weights, fallbacks = _forest_parts(rest, trace)
    if len(sub_parts) > delta - 1:
        raise StarDecompositionViolation(f"residual needs {len(sub_parts)} parts, expected at most {delta - 1}")
    parts = [tm.matching] + [[keep[i] for i in part] for part in sub_parts]
    return parts, [tm.weights] + sub_weights, fallbacks + int(tm.used_fallback)


def pmd_tree(H: Hypergraph, check: bool = True, trace: Optional[list] = None) -> PmdDecomposition:
    """Decomposition of a k-uniform tree into exactly Delta(H) parts.

    Take a positive matching covering all vertices of degree >= 2, remove
    it, and recurse on the components of what is left (each a tree of
    strictly smaller maximum degree).  Component decompositions are merged
    part by part.  Pass a list as ``trace`` to collect every intermediate
    :class:`TreeMatching`.
    """
    if H.m == 0:
        raise NoEdges("hypergraph has no edges")
    if check:
        res = check_tree(H)
        if not res.is_tree:
            raise NotATree("hypergraph is not a k-uniform tree", violation=res.violation)
    parts, weights, fallbacks = _forest_parts(H, trace)
    dec = PmdDecomposition(parts, [WeightCertificate(w) for w in weights], "tree", {"fallbacks": fallbacks})
    delta = max_degree(H)
    if dec.p != delta:
        raise StarDecompositionViolation(f"tree decomposition has {dec.p} parts, Delta = {delta}")
    return dec


# -- greedy -------------------------------------------------------------------


def greedy_pmd(H: Hypergraph) -> PmdDecomposition:
    """Strip greedy positive matchings off the residual until nothing is left."""
    if H.m == 0:
        raise NoEdges("hypergraph has no edges")
    remaining = list(range(H.m))
    parts, certs = [], []
    while remaining:
        edges = [H.edges[i] for i in remaining]
        chosen, cert = positive.greedy_on_edges(edges)
        part = [remaining[i] for i in chosen]
        parts.append(part)
        certs.append(cert)
        remaining = [i for i in remaining if i not in set(part)]
    return PmdDecomposition(parts, certs, "greedy")


# -- exact search -------------------------------------------------------------


class _Search:
    """Depth-first assignment of edges to ``p`` ordered parts.

    Part ``r`` must be positive against every edge that ends up in parts
    ``r, r+1, ...``.  During the search only the already-assigned part of that
    residual is known, and positivity against a subset of the final residual
    is necessary, so failing it prunes soundly.
    """

    def __init__(self, edges: Sequence[Edge], p: int, hint: Optional[list[int]], budget: Optional[int], spent: int):
        self.edges = edges
        self.p = p
        self.hint = hint
        self.budget = budget
        self.nodes = spent
        self.assign = [-1] * len(edges)
        self.edge_sets = [frozenset(e) for e in edges]
        self.used: list[set[int]] = [set() for _ in range(p)]
        self.size = [0] * p
        self.cache: dict[tuple, Optional[dict]] = {}
        self.lp_calls = 0

    def _positive(self, part: tuple[int, ...], residual: tuple[int, ...]) -> Optional[dict]:
        key = (part, residual)
        if key not in self.cache:
            self.lp_calls += 1
            sub = [self.edges[i] for i in residual]
            pos = {residual.index(i) for i in part}
            verdict = positive.certify_edges(sub, pos)
            self.cache[key] = dict(verdict.certificate.weights) if isinstance(verdict, positive.Positive) else None
        return self.cache[key]

    def _consistent(self, upto: int) -> bool:
        for r in range(upto + 1):
            if not self.size[r]:
                continue
            part = tuple(i for i, a in enumerate(self.assign) if a == r)
            residual = tuple(i for i, a in enumerate(self.assign) if a >= r)
            if len(residual) == len(part):
                continue  # nothing to separate from; a matching alone is positive
            if self._positive(part, residual) is None:
                return False
        return True

    def run(self, t: int = 0) -> bool:
        m = len(self.edges)
        if t == m:
            return all(self.size)
        empty = sum(1 for s in self.size if s == 0)
        if empty > m - t:
            return False
        # forward check: every unassigned edge still needs a part it fits in
        for u in range(t, m):
            eu = self.edge_sets[u]
            if all(self.used[r] & eu for r in range(self.p)):
                return False
        order = list(range(self.p))
        if self.hint is not None and self.hint[t] < self.p:
            order.remove(self.hint[t])
            order.insert(0, self.hint[t])
        e = set(self.edges[t])
        for r in order:
            if self.used[r] & e:
                continue
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise _OutOfBudget
            self.assign[t] = r
            self.used[r] |= e
            self.size[r] += 1
            if self._consistent(r) and self.run(t + 1):
                return True
            self.assign[t] = -1
            self.used[r] -= e
            self.size[r] -= 1
        return False

    def decomposition(self) -> tuple[list[list[int]], list[dict[int, Fraction]]]:
        parts = [[i for i, a in enumerate(self.assign) if a == r] for r in range(self.p)]
        weights = []
        for r in range(self.p):
            residual = tuple(i for i, a in enumerate(self.assign) if a >= r)
            w = self._positive(tuple(parts[r]), residual)
            if w is None:
                raise AssertionError("search accepted a part that is not positive")
            weights.append(w)
        return parts, weights


class _OutOfBudget(Exception):
    pass


def _exact_connected(
    G: Hypergraph, budget: Optional[int], warm_start: bool, stats: dict
) -> tuple[list[list[int]], list[dict[int, Fraction]]]:
    # each part is a matching, so at least ceil(m / nu) parts are needed
    start = max(max_degree(G), -(-G.m // matching_number(G)))
    hint = None
    upper_dec = None
    if warm_start:
        upper_dec = greedy_pmd(G)
        if upper_dec.p == start:
            stats["greedy_hits"] = stats.get("greedy_hits", 0) + 1
            return upper_dec.parts, [dict(c.weights) for c in upper_dec.certificates]
        hint = [0] * G.m
        for r, part in enumerate(upper_dec.parts):
            for i in part:
                hint[i] = r
    p = start
    spent = 0
    while True:
        if upper_dec is not None and p >= upper_dec.p:
            return upper_dec.parts, [dict(c.weights) for c in upper_dec.certificates]
        search = _Search(G.edges, p, hint, budget, spent)
        try:
            found = search.run()
        except _OutOfBudget:
            stats["nodes"] = stats.get("nodes", 0) + search.nodes
            # every p below this one was refuted, so a greedy result of size p is optimal
            fallback = upper_dec or greedy_pmd(G)
            if fallback.p <= p:
                return fallback.parts, [dict(c.weights) for c in fallback.certificates]
            raise BudgetExceeded(
                f"node budget {budget} exhausted at p = {p}",
                bounds=PmdBounds(p, fallback.p),
            ) from None
        spent = search.nodes
        stats["nodes"] = stats.get("nodes", 0) + search.nodes
        stats["lp_calls"] = stats.get("lp_calls", 0) + search.lp_calls
        if found:
            return search.decomposition()
        p += 1


def pmd_exact(H: Hypergraph, budget: Optional[int] = 200_000, warm_start: bool = True) -> tuple[int, PmdDecomposition]:
    """Minimum number of parts, with a certified optimal decomposition.

    Components are solved separately (pmd of a disjoint union is the
    maximum over the pieces).  For each, ``p`` runs upward from Delta; with
    ``warm_start`` a greedy decomposition orders the search and is returned
    directly whenever it already meets the lower bound.  ``budget`` caps the
    number of search nodes across all depths; on exhaustion BudgetExceeded
    carries the best bounds known.
    """
    if H.m == 0:
        raise NoEdges("hypergraph has no edges")
    stats: dict = {}
    pieces = []
    lowers, uppers = [], []
    for comp in connected_components(H):
        try:
            parts, weights = _exact_connected(comp.graph, budget, warm_start, stats)
        except BudgetExceeded as exc:
            lowers.append(exc.bounds.lower)
            uppers.append(exc.bounds.upper)
            raise BudgetExceeded(
                str(exc), bounds=PmdBounds(max([max_degree(H), *lowers]), max([*uppers, greedy_pmd(H).p]))
            ) from None
        lowers.append(len(parts))
        uppers.append(len(parts))
        pieces.append((
            [[comp.edge_map[i] for i in part] for part in parts],
            [{comp.lift_vertex(v): w for v, w in wt.items()} for wt in weights],
        ))
    parts, weights = _merge(pieces)
    dec = PmdDecomposition(parts, [WeightCertificate(w) for w in weights], "exact", stats)
    return dec.p, dec


def pmd_bounds(H: Hypergraph, budget: Optional[int] = None) -> tuple[PmdBounds, PmdDecomposition]:
    """Delta lower bound, best certified upper bound, and optionally the exact
    value.  Returns the bounds and the decomposition realizing ``upper``."""
    if H.m == 0:
        raise NoEdges("hypergraph has no edges")
    lower = max_degree(H)
    if check_tree(H).is_tree:
        # the tree construction meets the degree bound, nothing to improve
        best = pmd_tree(H, check=False)
        return PmdBounds(lower, best.p, best.p), best
    best = greedy_pmd(H)
    exact = None
    if budget is not None:
        try:
            exact, dec = pmd_exact(H, budget=budget)
            if dec.p < best.p:
                best = dec
        except BudgetExceeded as exc:
            lower = max(lower, exc.bounds.lower)
    if best.p == lower:
        exact = lower
    return PmdBounds(lower, best.p, exact), best
