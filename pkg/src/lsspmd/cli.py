"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (a JSON error object is
printed), 2 on a usage error.  Structured output is always JSON; ``--pretty``
indents it.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import hypergraph as hg
from . import labels, lss, pmd, positive
from .errors import PmdError

log = logging.getLogger("lsspmd")


def _parse_matching(H: hg.Hypergraph, indices: Optional[str], edges: Optional[str]) -> list[int]:
    if indices is not None and edges is not None:
        raise SystemExit("use either --matching or --matching-edges, not both")
    if edges is not None:
        out = []
        for chunk in edges.split(";"):
            chunk = chunk.strip()
            if chunk:
                out.append(H.index_of(int(v) for v in chunk.replace(",", " ").split()))
        return out
    if indices is None or not indices.strip():
        return []
    return [int(x) for x in indices.split(",")]


def _emit(args, payload) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2 if args.pretty else None, sort_keys=False) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    H = hg.load(args.input)
    res = hg.check_tree(H)
    return {
        "hypergraph": H.to_dict(),
        "m": H.m,
        "max_degree": hg.max_degree(H),
        "uniformity": H.uniformity(),
        "tree": res.to_dict(),
    }


def cmd_pmd(args):
    H = hg.load(args.input)
    mode = args.mode
    if mode == "auto":
        mode = "tree" if hg.check_tree(H).is_tree else "exact"
    if mode == "tree":
        dec = pmd.pmd_tree(H)
    elif mode == "greedy":
        dec = pmd.greedy_pmd(H)
    else:
        _, dec = pmd.pmd_exact(H, budget=args.budget, warm_start=not args.cold)
    out = dec.to_dict(H)
    out["max_degree"] = hg.max_degree(H)
    out["verified"] = dec.verify(H)
    return out


def cmd_tree_pmd(args):
    H = hg.load(args.input)
    trace: list = []
    dec = pmd.pmd_tree(H, trace=trace)
    out = dec.to_dict(H)
    out["max_degree"] = hg.max_degree(H)
    out["verified"] = dec.verify(H)
    out["rounds"] = len(trace)
    out["lp_fallbacks"] = dec.stats.get("fallbacks", 0)
    return out


def cmd_certify(args):
    H = hg.load(args.input)
    idx = _parse_matching(H, args.matching, args.matching_edges)
    verdict = positive.certify_positive(H, idx)
    out = {"matching": [list(H.edges[i]) for i in sorted(set(idx))]}
    out.update(verdict.to_dict())
    out["verified"] = positive.verify_verdict(H, idx, verdict)
    return out


def cmd_scan(args):
    table = labels.scan_conjecture(args.n, mode=args.mode, workers=args.jobs)
    out = table.to_dict()
    out["verified"] = labels.verify_scan(table)
    return out


def cmd_count(args):
    return labels.count_report(args.n)


def cmd_ideal(args):
    H = hg.load(args.input)
    if args.matrix:
        A = lss.presentation_matrix(H, args.pivot, args.d)
        minors = []
        for t in range(1, min(A.u, A.d) + 1):
            f = lss.leading_minor(A, t)
            minors.append({"t": t, "minor": str(f), "support_check": lss.support_check(f, A.k, t)})
        return {
            "pivot": A.pivot,
            "rows": [list(r) for r in A.rows],
            "d": A.d,
            "matrix": [[str(e) for e in row] for row in A.matrix()],
            "leading_minors": minors,
        }
    return lss.emit_cas_script(H, args.d, args.dialect, args.characteristic)


def cmd_status(args):
    H = hg.load(args.input)
    return lss.status_report(H, args.d, budget=args.budget).to_dict()


def cmd_obstruct(args):
    H = hg.load(args.input)
    k = H.uniformity() or 1
    w = lss.obstruction_search(H, args.max_c if args.max_c is not None else H.n - k + 1)
    out = w.to_dict()
    if args.d is not None:
        out["d"] = args.d
        out["not_prime_known"] = w.value > args.d
    return out


def cmd_random_tree(args):
    return hg.random_tree(args.k, args.m, args.seed).to_dict()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lsspmd", description="Positive matching decompositions and LSS ideals.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--input", "-i", required=True, help="hypergraph file (.json or edge-per-line text)")
        sp.add_argument("--out", "-o", help="write output here instead of stdout")
        sp.add_argument("--pretty", action="store_true", help="indent JSON output")
        return sp

    sp = common(sub.add_parser("validate", help="canonicalize a hypergraph and run the tree check"))
    sp.set_defaults(func=cmd_validate)

    sp = common(sub.add_parser("pmd", help="positive matching decomposition"))
    sp.add_argument("--mode", choices=["auto", "tree", "exact", "greedy"], default="auto")
    sp.add_argument("--budget", type=int, default=200_000, help="node budget for exact search")
    sp.add_argument("--cold", action="store_true", help="exact search without the greedy warm start")
    sp.set_defaults(func=cmd_pmd)

    sp = common(sub.add_parser("tree-pmd", help="Delta-part decomposition of a k-uniform tree"))
    sp.set_defaults(func=cmd_tree_pmd)

    sp = common(sub.add_parser("certify", help="decide whether a matching is positive"))
    sp.add_argument("--matching", help="comma-separated edge indices (0-based, canonical order)")
    sp.add_argument("--matching-edges", help="explicit edges, e.g. '1 2 3; 4 5 6'")
    sp.set_defaults(func=cmd_certify)

    sp = common(sub.add_parser("scan", help="positivity scan of the label classes of the complete 3-uniform hypergraph"), False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=["full", "residual"], default="full")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.set_defaults(func=cmd_scan)

    sp = common(sub.add_parser("count", help="number of labels versus the closed formula"), False)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_count)

    sp = common(sub.add_parser("ideal", help="CAS script for the LSS ideal, or the presentation matrix"))
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--dialect", choices=list(lss.DIALECTS), default="macaulay2")
    sp.add_argument("--characteristic", type=int, default=0)
    sp.add_argument("--matrix", action="store_true", help="emit the presentation matrix and its leading minors as JSON")
    sp.add_argument("--pivot", type=int, help="pivot vertex for --matrix (default: a vertex of maximum degree)")
    sp.set_defaults(func=cmd_ideal)

    sp = common(sub.add_parser("status", help="what is known about primality / complete intersection at d"))
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--budget", type=int, help="also run exact pmd search with this node budget")
    sp.set_defaults(func=cmd_status)

    sp = common(sub.add_parser("obstruct", help="largest H_{W,c} contained in the hypergraph"))
    sp.add_argument("--max-c", type=int)
    sp.add_argument("--d", type=int)
    sp.set_defaults(func=cmd_obstruct)

    sp = common(sub.add_parser("random-tree", help="seeded random k-uniform tree"), False)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_random_tree)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        payload = args.func(args)
    except PmdError as exc:
        sys.stdout.write(json.dumps(exc.to_dict()) + "\n")
        return 1
    except (OSError, ValueError) as exc:
        sys.stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    _emit(args, payload)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
