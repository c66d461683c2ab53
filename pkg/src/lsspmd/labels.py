"""The label partition of the complete 3-uniform hypergraph.

Every triple ``a < b < c`` of ``[n]`` gets the label ``(a + b, b + c)``.  Each
label class is a matching, the classes cover all triples, and the number of
realized labels is ``3/2 n^2 - 15/2 n + 10``.  :func:`scan_conjecture` tests
each class for positivity, either against all triples or against the triples
left over by earlier classes, and certifies every verdict.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from . import positive
from .errors import NTooSmall, NotUniform
from .hypergraph import Hypergraph, complete_uniform, is_matching, validate
from .pmd import PmdDecomposition
from .positive import PositivityVerdict, WeightCertificate

Label = tuple[int, int]


def label_of(triple) -> Label:
    a, b, c = sorted(triple)
    return a + b, b + c


def _need(n: int) -> None:
    if n < 3:
        raise NTooSmall(f"need n >= 3, got {n}", n=n)


@dataclass
class PartitionTable:
    n: int
    classes: dict[Label, list[tuple[int, int, int]]]
    verdicts: Optional[dict[Label, PositivityVerdict]] = None
    mode: str = "full"
    stats: dict = field(default_factory=dict)

    def counterexamples(self) -> list[Label]:
        if self.verdicts is None:
            return []
        return [lab for lab, v in self.verdicts.items() if v.kind != "positive"]

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "mode": self.mode,
            "classes": [{"label": list(lab), "edges": [list(e) for e in edges]} for lab, edges in self.classes.items()],
        }
        if self.verdicts is not None:
            out["verdicts"] = [{"label": list(lab), **v.to_dict()} for lab, v in self.verdicts.items()]
            out["counterexamples"] = [list(lab) for lab in self.counterexamples()]
        return out


def build_partition(n: int) -> PartitionTable:
    """Group all triples of ``[n]`` by label, checking the matching and
    covering properties on the way.  Classes are in lexicographic label order."""
    _need(n)
    classes: dict[Label, list[tuple[int, int, int]]] = {}
    for t in combinations(range(1, n + 1), 3):
        classes.setdefault(label_of(t), []).append(t)
    classes = dict(sorted(classes.items()))
    total = sum(len(c) for c in classes.values())
    if total != comb(n, 3):
        raise AssertionError(f"classes cover {total} triples, expected {comb(n, 3)}")
    for lab, edges in classes.items():
        seen: set[int] = set()
        for e in edges:
            if seen & set(e):
                raise AssertionError(f"class {lab} is not a matching")
            seen.update(e)
    return PartitionTable(n, classes)


def count_labels(n: int) -> int:
    """Number of distinct labels, by enumeration."""
    _need(n)
    return len({(a + b, b + c) for a, b, c in combinations(range(1, n + 1), 3)})


def closed_formula(n: int) -> int:
    value = Fraction(3, 2) * n * n - Fraction(15, 2) * n + 10
    if value.denominator != 1:
        raise AssertionError(f"formula is not an integer at n = {n}")
    return int(value)


def increment(n: int) -> int:
    """Labels realized for ``n + 1`` but not for ``n``."""
    return 3 * n - 6


def count_report(n: int) -> dict:
    count = count_labels(n)
    formula = closed_formula(n)
    return {
        "n": n,
        "count": count,
        "formula": formula,
        "match": count == formula,
        "increment": count_labels(n + 1) - count,
        "increment_formula": increment(n),
    }


def _certify_class(args):
    edges, idx = args
    return positive.certify_edges(edges, idx)


def scan_conjecture(n: int, mode: str = "full", workers: int = 1) -> PartitionTable:
    """Certify each label class as a positive matching.

    ``mode="full"`` tests every class against all triples of ``[n]``.
    ``mode="residual"`` tests class ``i`` only against the triples not in
    classes ``1..i-1`` (lexicographic label order), the weaker decomposition
    form.  Classes are independent, so ``workers > 1`` fans out to processes;
    results are identical to a sequential run.
    """
    if mode not in ("full", "residual"):
        raise ValueError(f"mode must be 'full' or 'residual', got {mode!r}")
    table = build_partition(n)
    K = complete_uniform(n, 3)
    jobs = []
    removed: set[int] = set()
    for lab, cls in table.classes.items():
        idx = [K.index_of(e) for e in cls]
        if mode == "full":
            jobs.append((K.edges, idx))
        else:
            keep = [i for i in range(K.m) if i not in removed]
            pos = {i: j for j, i in enumerate(keep)}
            jobs.append((tuple(K.edges[i] for i in keep), [pos[i] for i in idx]))
            removed.update(idx)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_certify_class, jobs))
    else:
        results = [_certify_class(job) for job in jobs]
    table.verdicts = dict(zip(table.classes, results))
    table.mode = mode
    table.stats["jobs"] = [(list(lab), len(edges)) for lab, (edges, _) in zip(table.classes, jobs)]
    return table


def verify_scan(table: PartitionTable) -> bool:
    """Re-verify every stored verdict with exact arithmetic."""
    if table.verdicts is None:
        return False
    K = complete_uniform(table.n, 3)
    removed: set[int] = set()
    for lab, cls in table.classes.items():
        idx = [K.index_of(e) for e in cls]
        if table.mode == "full":
            H, local = K, idx
        else:
            keep = [i for i in range(K.m) if i not in removed]
            H = Hypergraph(K.n, tuple(K.edges[i] for i in keep))
            local = [keep.index(i) for i in idx]
            removed.update(idx)
        if not positive.verify_verdict(H, local, table.verdicts[lab]):
            return False
    return True


def peel_bound(H: Hypergraph) -> dict:
    """Upper bound for pmd of a 3-uniform ``H`` by peeling label classes.

    Classes restricted to ``E(H)`` are taken in lexicographic label order.
    A class that is positive against the current residual becomes one part;
    otherwise it is split by greedy positive matchings inside the class.  The
    result is always a certified decomposition, whatever the truth of the
    positivity question, and is reported next to the quadratic formula.
    """
    if H.uniformity() != 3:
        raise NotUniform("peel_bound needs a 3-uniform hypergraph")
    groups: dict[Label, list[int]] = {}
    for i, e in enumerate(H.edges):
        groups.setdefault(label_of(e), []).append(i)
    remaining = list(range(H.m))
    parts, certs = [], []
    split = []
    for lab in sorted(groups):
        todo = list(groups[lab])
        first = True
        while todo:
            edges = [H.edges[i] for i in remaining]
            pos = {i: j for j, i in enumerate(remaining)}
            verdict = positive.certify_edges(edges, [pos[i] for i in todo]) if first else None
            if isinstance(verdict, positive.Positive):
                part, cert = todo, verdict.certificate
            else:
                if first:
                    split.append(list(lab))
                chosen, cert = positive.greedy_on_edges(edges, order=[pos[i] for i in todo])
                part = [remaining[j] for j in chosen]
            first = False
            parts.append(sorted(part))
            certs.append(cert)
            gone = set(part)
            remaining = [i for i in remaining if i not in gone]
            todo = [i for i in todo if i not in gone]
    dec = PmdDecomposition(parts, certs, "greedy")
    return {
        "n": H.n,
        "p": dec.p,
        "formula": closed_formula(H.n) if H.n >= 3 else None,
        "within_formula": H.n >= 3 and dec.p <= closed_formula(H.n),
        "split_classes": split,
        "decomposition": dec,
    }
