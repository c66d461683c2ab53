"""Hypergraphs on the vertex set 1..n whose edge set is a clutter.

The :class:`Hypergraph` value is immutable and canonical: vertices inside an
edge are sorted, and the edge list is sorted lexicographically.  Everything
that builds a hypergraph goes through :func:`validate`.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    ClutterViolation,
    DuplicateEdge,
    EmptyEdge,
    IndexOutOfRange,
    NoEdges,
    NotATree,
    ParseError,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A clutter on ``[n] = {1, ..., n}``.

    Do not build instances directly from untrusted data; use :func:`validate`
    (or :meth:`from_edges`) so the invariants hold.
    """

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return validate(n, [list(e) for e in edges])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def uniformity(self) -> Optional[int]:
        """Common edge size, or None if edgeless or mixed."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def index_of(self, edge: Iterable[int]) -> int:
        key = tuple(sorted(edge))
        try:
            return self.edges.index(key)
        except ValueError:
            raise IndexOutOfRange(f"edge {list(key)} is not in the hypergraph", edge=key) from None

    def covered_vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"H(n={self.n}; {body})"


def validate(raw_vertex_count: int, raw_edges: Sequence[Sequence[int]]) -> Hypergraph:
    """Canonicalize raw input into a :class:`Hypergraph`.

    Raises VertexOutOfRange, EmptyEdge, DuplicateEdge or ClutterViolation.
    """
    n = int(raw_vertex_count)
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}", n=n)
    edges = []
    for raw in raw_edges:
        if len(raw) == 0:
            raise EmptyEdge("edges must be nonempty")
        vs = set()
        for v in raw:
            if isinstance(v, bool) or int(v) != v:
                raise VertexOutOfRange(f"vertex {v!r} is not an integer", vertex=v)
            v = int(v)
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"vertex {v} outside 1..{n}", vertex=v, n=n)
            if v in vs:
                raise DuplicateEdge(f"vertex {v} repeated inside edge {list(raw)}", edge=list(raw))
            vs.add(v)
        edges.append(tuple(sorted(vs)))
    edges.sort()
    for a, b in zip(edges, edges[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {list(a)} appears twice", edge=a)
    sets = [frozenset(e) for e in edges]
    for i, j in combinations(range(len(edges)), 2):
        small, big = (i, j) if len(sets[i]) <= len(sets[j]) else (j, i)
        if sets[small] <= sets[big]:
            raise ClutterViolation(
                f"{set(edges[small])} is contained in {set(edges[big])}",
                subset=edges[small],
                superset=edges[big],
            )
    return Hypergraph(n, tuple(edges))


# -- structural queries -------------------------------------------------------


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 1 <= v <= H.n:
        raise VertexOutOfRange(f"vertex {v} outside 1..{H.n}", vertex=v, n=H.n)


def _check_indices(H: Hypergraph, edge_indices: Iterable[int]) -> list[int]:
    idx = sorted(set(edge_indices))
    for i in idx:
        if not 0 <= i < H.m:
            raise IndexOutOfRange(f"edge index {i} outside 0..{H.m - 1}", index=i)
    return idx


def degree(H: Hypergraph, v: int) -> int:
    _check_vertex(H, v)
    return sum(1 for e in H.edges if v in e)


def degrees(H: Hypergraph) -> dict[int, int]:
    deg = dict.fromkeys(H.vertices, 0)
    for e in H.edges:
        for v in e:
            deg[v] += 1
    return deg


def max_degree(H: Hypergraph) -> int:
    """Delta(H); 0 for an edgeless hypergraph."""
    return max(degrees(H).values(), default=0)


def is_matching(H: Hypergraph, edge_indices: Iterable[int]) -> tuple[bool, Optional[tuple[Edge, Edge]]]:
    """Return ``(True, None)`` or ``(False, (e, e'))`` for an overlapping pair."""
    idx = _check_indices(H, edge_indices)
    owner: dict[int, int] = {}
    for i in idx:
        for v in H.edges[i]:
            if v in owner:
                return False, (H.edges[owner[v]], H.edges[i])
            owner[v] = i
    return True, None


def matching_number(H: Hypergraph) -> int:
    """Size of a largest matching, by branch and bound over edges."""
    sets = [frozenset(e) for e in H.edges]
    best = 0

    def grow(i: int, used: frozenset, size: int) -> None:
        nonlocal best
        if size + (H.m - i) <= best:
            return
        if i == H.m:
            best = size
            return
        if not sets[i] & used:
            grow(i + 1, used | sets[i], size + 1)
        grow(i + 1, used, size)

    grow(0, frozenset(), 0)
    return best


def delete_edges(H: Hypergraph, edge_indices: Iterable[int]) -> Hypergraph:
    drop = set(_check_indices(H, edge_indices))
    return Hypergraph(H.n, tuple(e for i, e in enumerate(H.edges) if i not in drop))


@dataclass(frozen=True)
class Component:
    """A connected piece of a hypergraph, relabeled onto 1..len(vertex_map).

    ``vertex_map[i - 1]`` is the parent vertex of local vertex ``i`` and
    ``edge_map[j]`` is the parent edge index of local edge ``j``.
    """

    graph: Hypergraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def lift_vertex(self, v: int) -> int:
        return self.vertex_map[v - 1]


def connected_components(H: Hypergraph) -> list[Component]:
    """Split the edge set by vertex connectivity.

    Isolated vertices belong to no component.  Components are ordered by
    their smallest parent edge index, and local labels preserve parent order.
    """
    parent = {v: v for v in H.covered_vertices()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            s = find(v)
            if s != r:
                parent[s] = r
    groups: dict[int, list[int]] = {}
    for i, e in enumerate(H.edges):
        groups.setdefault(find(e[0]), []).append(i)
    out = []
    for idx in sorted(groups.values()):
        verts = sorted({v for i in idx for v in H.edges[i]})
        local = {v: j + 1 for j, v in enumerate(verts)}
        g = Hypergraph(len(verts), tuple(sorted(tuple(local[v] for v in H.edges[i]) for i in idx)))
        # local edges are sorted the same way as parent edges since relabeling is monotone
        out.append(Component(g, tuple(verts), tuple(idx)))
    return out


# -- trees --------------------------------------------------------------------


@dataclass(frozen=True)
class TreeCheckResult:
    """Outcome of :func:`check_tree`.

    ``violation`` is None when ``is_tree`` holds.  Otherwise it is a dict with
    ``kind`` one of ``"not_uniform"``, ``"T1"`` (with ``edges``) or ``"T2"``
    (with ``vertices`` and the offending ``sequences``).
    """

    is_k_uniform: bool
    k: Optional[int]
    is_tree: bool
    violation: Optional[dict] = None
    isolated: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "is_k_uniform": self.is_k_uniform,
            "k": self.k,
            "is_tree": self.is_tree,
            "violation": self.violation,
            "isolated": list(self.isolated),
        }


def _sequences_from(H: Hypergraph, v: int, cap: int = 2) -> dict[int, list[list[int]]]:
    """Enumerate connecting edge sequences that start at ``v``.

    A sequence e_1..e_r is admissible when consecutive edges meet in exactly
    one vertex, non-consecutive edges are disjoint, ``v`` lies only in e_1 and
    the endpoint ``x`` lies only in e_r.  Returns, for each endpoint ``x``, up
    to ``cap`` sequences as lists of edge indices.
    """
    sets = [frozenset(e) for e in H.edges]
    found: dict[int, list[list[int]]] = {}
    path: list[int] = []
    seen: set[int] = set()  # vertices of path edges

    def record(last: int, before: frozenset):
        for x in H.edges[last]:
            if x != v and x not in before:
                bucket = found.setdefault(x, [])
                if len(bucket) < cap:
                    bucket.append(list(path))

    def extend():
        last = sets[path[-1]]
        for j, e in enumerate(sets):
            if j in path or v in e:
                continue
            if len(e & last) != 1:
                continue
            # (c): disjoint from every non-adjacent earlier edge
            if any(sets[i] & e for i in path[:-1]):
                continue
            before = frozenset(seen)
            path.append(j)
            added = e - seen
            seen.update(added)
            record(j, before)
            extend()
            seen.difference_update(added)
            path.pop()

    for i, e in enumerate(sets):
        if v in e:
            path.append(i)
            record(i, frozenset())
            seen.update(e)
            extend()
            seen.clear()
            path.pop()
    return found


def check_tree(H: Hypergraph) -> TreeCheckResult:
    """Decide whether ``H`` is a k-uniform tree.

    Two conditions are checked exhaustively: any two edges share at most one
    vertex, and every pair of distinct vertices is joined by exactly one
    admissible edge sequence (see :func:`_sequences_from`).  For a pair inside
    a common edge that edge is the sequence, so a second route (as in a graph
    triangle) is a violation.  Each violation carries a witness that can be
    re-verified with :func:`count_sequences`.
    """
    k = H.uniformity()
    isolated = tuple(v for v in H.vertices if v not in H.covered_vertices())
    if k is None or k < 2:
        return TreeCheckResult(False, k, False, {"kind": "not_uniform", "sizes": sorted({len(e) for e in H.edges})}, isolated)
    sets = [frozenset(e) for e in H.edges]
    for i, j in combinations(range(H.m), 2):
        if len(sets[i] & sets[j]) >= 2:
            return TreeCheckResult(True, k, False, {"kind": "T1", "edges": [list(H.edges[i]), list(H.edges[j])]}, isolated)
    for v in H.vertices:
        seqs = _sequences_from(H, v)
        for w in range(v + 1, H.n + 1):
            got = seqs.get(w, [])
            if len(got) != 1:
                return TreeCheckResult(
                    True,
                    k,
                    False,
                    {
                        "kind": "T2",
                        "vertices": [v, w],
                        "count": len(got),
                        "sequences": [[list(H.edges[i]) for i in s] for s in got],
                    },
                    isolated,
                )
    return TreeCheckResult(True, k, True, None, isolated)


def count_sequences(H: Hypergraph, v: int, w: int, cap: int = 2) -> int:
    """Number of connecting sequences from v to w, saturating at ``cap``."""
    _check_vertex(H, v)
    _check_vertex(H, w)
    return len(_sequences_from(H, v, cap).get(w, []))


def find_leaf(H: Hypergraph, check: bool = True) -> int:
    """Smallest vertex of degree one in a tree."""
    if H.m == 0:
        raise NoEdges("hypergraph has no edges")
    if check:
        res = check_tree(H)
        if not res.is_tree:
            raise NotATree("hypergraph is not a k-uniform tree", violation=res.violation)
    deg = degrees(H)
    for v in H.vertices:
        if deg[v] == 1:
            return v
    raise NotATree("no vertex of degree one")


def star(k: int, m: int) -> Hypergraph:
    """k-uniform star with ``m`` edges and center 1."""
    edges = []
    nxt = 2
    for _ in range(m):
        edges.append([1, *range(nxt, nxt + k - 1)])
        nxt += k - 1
    return validate(nxt - 1, edges)


def random_tree(k: int, m: int, rng: random.Random | int | None = None, shuffle: bool = True) -> Hypergraph:
    """Grow a k-uniform tree with ``m`` edges.

    Each new edge glues ``k - 1`` fresh vertices onto one existing vertex, so
    the result satisfies both tree conditions by construction.  Labels are
    permuted when ``shuffle`` is set.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if m < 1:
        raise NoEdges("need at least one edge")
    edges = [list(range(1, k + 1))]
    n = k
    for _ in range(m - 1):
        anchor = rng.randint(1, n)
        edges.append([anchor, *range(n + 1, n + k)])
        n += k - 1
    if shuffle:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        edges = [[perm[v - 1] for v in e] for e in edges]
    return validate(n, edges)


def complete_uniform(n: int, k: int) -> Hypergraph:
    return validate(n, [list(c) for c in combinations(range(1, n + 1), k)])


# -- serialization ------------------------------------------------------------


def to_json(H: Hypergraph) -> str:
    return json.dumps(H.to_dict())


def from_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
        return validate(data["n"], data["edges"])
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad hypergraph JSON: {exc}") from exc


def to_text(H: Hypergraph) -> str:
    lines = [f"# n {H.n}"]
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def from_text(text: str, n: Optional[int] = None) -> Hypergraph:
    """Parse one edge per line.  A ``# n <int>`` comment fixes the vertex
    count; otherwise ``n`` defaults to the largest vertex seen."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n" and n is None:
                n = int(parts[1])
            continue
        try:
            edges.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if n is None:
        n = max((v for e in edges for v in e), default=1)
    return validate(n, edges)


def load(path: str) -> Hypergraph:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return from_json(text)
    return from_text(text)
