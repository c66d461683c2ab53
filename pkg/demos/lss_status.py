"""
LSS ideals, presentation matrices and status reports
====================================================

The ideal generated by f_e = sum_j prod_{i in e} y_{ij} is a complete
intersection once pmd(H) <= d, and prime once pmd(H) <= d - 1.  Large
"joins" H_{W,c} inside H rule primality out.  This script walks through the
algebraic objects and the combined report, and writes CAS scripts for the
facts that need a computer algebra system.
"""

from lsspmd import hypergraph as hg
from lsspmd import lss

path = hg.validate(7, [[1, 2, 3], [3, 4, 5], [5, 6, 7]])

for e, f in zip(path.edges, lss.generators(path, 2)):
    print("f", e, "=", f)

###############################################################################
# Presentation matrix at the pivot 3: rows are the pairs completing 3 to an
# edge.  Its leading minors have a support that no element of the ideal can
# have, which is checked term by term.

A = lss.presentation_matrix(path, pivot=3, d=2)
for row in A.matrix():
    print("  ", [str(m) for m in row])
print("identity holds:", lss.matrix_identity_holds(path, A))
for t in (1, 2):
    minor = lss.leading_minor(A, t)
    print(f"minor t={t}: {minor}  support ok: {lss.support_check(minor, A.k, t)}")

###############################################################################
# Obstructions.  In the complete 3-uniform hypergraph on [5], one apex joined
# to all six pairs of the remaining vertices gives |W| + c = 7.

K = hg.complete_uniform(5, 3)
print("K5 obstruction:", lss.obstruction_search(K).to_dict())
print("path obstruction:", lss.obstruction_search(path).to_dict())

###############################################################################
# Status reports combine the two sides.  A flag that is False means the
# available criteria do not settle the question.

for H, name in ((path, "path"), (hg.star(3, 4), "star of 4 triples"), (K, "K5")):
    for d in (2, 3, 4):
        r = lss.status_report(H, d)
        print(f"{name:18s} d={d} ci={r.ci_known!s:5} prime={r.prime_known!s:5} "
              f"not_prime={r.not_prime_known!s:5} irreducible for d in {r.irreducible_range}")

print(lss.emit_cas_script(path, 2, "macaulay2"))
print(lss.emit_cas_script(path, 2, "singular", characteristic=32003))
