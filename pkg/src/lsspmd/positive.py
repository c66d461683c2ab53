"""Positive matchings: certify, refute, and greedily extract them.

A matching ``M`` of ``H`` is positive when some vertex weighting makes every
edge of ``M`` sum to a positive value and every other edge sum to a negative
one.  The question is a homogeneous strict linear system with one variable per
vertex, so :mod:`lsspmd.exactlp` decides it exactly and every verdict carries
a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import exactlp
from .errors import NoEdges
from .hypergraph import Edge, Hypergraph, _check_indices, is_matching


@dataclass(frozen=True)
class WeightCertificate:
    """A vertex weighting; vertices not listed weigh zero."""

    weights: dict[int, Fraction]

    def weight(self, edge: Iterable[int]) -> Fraction:
        return sum((self.weights.get(v, Fraction(0)) for v in edge), Fraction(0))

    def certifies(self, edges: Sequence[Edge], matching: Iterable[int]) -> bool:
        """True iff the sign pattern holds on ``edges`` for the given indices."""
        chosen = set(matching)
        for i, e in enumerate(edges):
            w = self.weight(e)
            if (i in chosen and w <= 0) or (i not in chosen and w >= 0):
                return False
        return True

    def verify(self, H: Hypergraph, matching: Iterable[int]) -> bool:
        return self.certifies(H.edges, matching)

    def to_dict(self) -> dict:
        return {str(v): str(w) for v, w in sorted(self.weights.items())}

    @classmethod
    def from_dict(cls, data: dict) -> "WeightCertificate":
        return cls({int(v): Fraction(w) for v, w in data.items()})


@dataclass(frozen=True)
class Positive:
    certificate: WeightCertificate

    kind = "positive"

    def to_dict(self) -> dict:
        return {"verdict": self.kind, "weights": self.certificate.to_dict()}


@dataclass(frozen=True)
class NotPositive:
    """Farkas multipliers over the induced system, one per edge of ``H``."""

    farkas: exactlp.Infeasible
    system: exactlp.LinearSystem

    kind = "not_positive"

    def to_dict(self) -> dict:
        return {"verdict": self.kind, "farkas": [str(y) for y in self.farkas.farkas]}


@dataclass(frozen=True)
class NotAMatching:
    witness: tuple[Edge, Edge]

    kind = "not_a_matching"

    def to_dict(self) -> dict:
        return {"verdict": self.kind, "witness": [list(e) for e in self.witness]}


PositivityVerdict = Union[Positive, NotPositive, NotAMatching]


def positivity_system(edges: Sequence[Edge], matching: Iterable[int]) -> tuple[exactlp.LinearSystem, list[int]]:
    """Strict system for the sign pattern, over the covered vertices only.

    Returns the system and the vertex for each variable index.
    """
    chosen = set(matching)
    verts = sorted({v for e in edges for v in e})
    col = {v: j for j, v in enumerate(verts)}
    rows = [
        exactlp.Row.make({col[v]: 1 for v in e}, ">" if i in chosen else "<", 0)
        for i, e in enumerate(edges)
    ]
    return exactlp.LinearSystem.build(len(verts), rows), verts


def certify_edges(edges: Sequence[Edge], matching: Iterable[int]) -> PositivityVerdict:
    """Like :func:`certify_positive` but on a bare edge list (no index checks)."""
    chosen = sorted(set(matching))
    owner: dict[int, int] = {}
    for i in chosen:
        for v in edges[i]:
            if v in owner:
                return NotAMatching((edges[owner[v]], edges[i]))
            owner[v] = i
    system, verts = positivity_system(edges, chosen)
    verdict = exactlp.solve(system)
    if isinstance(verdict, exactlp.Feasible):
        return Positive(WeightCertificate(dict(zip(verts, verdict.point))))
    return NotPositive(verdict, system)


def certify_positive(H: Hypergraph, matching: Iterable[int]) -> PositivityVerdict:
    """Decide whether the edges with the given indices form a positive matching.

    >>> from lsspmd.hypergraph import validate
    >>> cycle = validate(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    >>> certify_positive(cycle, [0]).kind
    'positive'
    >>> certify_positive(cycle, [0, 3]).kind
    'not_positive'
    """
    idx = _check_indices(H, matching)
    return certify_edges(H.edges, idx)


def verify_verdict(H: Hypergraph, matching: Iterable[int], verdict: PositivityVerdict) -> bool:
    """Re-check any verdict from scratch."""
    idx = _check_indices(H, matching)
    if isinstance(verdict, Positive):
        return is_matching(H, idx)[0] and verdict.certificate.verify(H, idx)
    if isinstance(verdict, NotAMatching):
        a, b = verdict.witness
        return a in H.edges and b in H.edges and a != b and bool(set(a) & set(b)) and {
            H.index_of(a),
            H.index_of(b),
        } <= set(idx)
    if isinstance(verdict, NotPositive):
        system, _ = positivity_system(H.edges, idx)
        return system == verdict.system and exactlp.verify(system, verdict.farkas)
    raise TypeError(f"not a positivity verdict: {verdict!r}")


def greedy_positive_matching(H: Hypergraph) -> tuple[list[int], WeightCertificate]:
    """Inclusion-maximal positive matching built in canonical edge order."""
    if H.m == 0:
        raise NoEdges("hypergraph has no edges")
    return greedy_on_edges(H.edges)


def greedy_on_edges(edges: Sequence[Edge], order: Optional[Sequence[int]] = None) -> tuple[list[int], WeightCertificate]:
    """Grow a positive matching edge by edge.

    Positivity is not inherited by supersets or subsets, so an edge rejected
    early may fit later; passes repeat until none adds an edge, which makes
    the result maximal under single-edge extension.
    """
    order = list(order) if order is not None else list(range(len(edges)))
    chosen: list[int] = []
    used: set[int] = set()
    cert: Optional[WeightCertificate] = None
    grew = True
    while grew:
        grew = False
        for i in order:
            if i in chosen or used & set(edges[i]):
                continue
            verdict = certify_edges(edges, chosen + [i])
            if isinstance(verdict, Positive):
                chosen.append(i)
                used.update(edges[i])
                cert = verdict.certificate
                grew = True
    assert cert is not None, "a single edge of a clutter is always positive"
    return sorted(chosen), cert
