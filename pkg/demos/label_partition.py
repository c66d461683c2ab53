"""
Label classes of the complete 3-uniform hypergraph
==================================================

Each triple a < b < c gets the label (a + b, b + c).  Every label class is a
matching and the classes cover all triples, which yields a decomposition of
size quadratic in n.  Here we count labels, scan the classes for positivity
and peel a certified decomposition.
"""

from lsspmd import hypergraph as hg
from lsspmd import labels

for n in range(3, 11):
    r = labels.count_report(n)
    print(f"n={n:2d} labels={r['count']:3d} formula={r['formula']:3d} next increment={r['increment']}")

###############################################################################
# Positivity scan.  In ``full`` mode each class is tested against all triples;
# in ``residual`` mode only against triples not yet removed by earlier
# classes.  Every verdict carries a certificate that is re-checked.

for n in (5, 6, 7):
    for mode in ("full", "residual"):
        t = labels.scan_conjecture(n, mode=mode)
        print(f"n={n} {mode:8s} classes={len(t.classes):2d} verified={labels.verify_scan(t)} "
              f"not positive={t.counterexamples()}")

###############################################################################
# The first negative class in full mode: two complementary triples of [6].
# The Farkas multipliers name the edge inequalities whose sum is absurd.

t = labels.scan_conjecture(6)
lab = t.counterexamples()[0]
K = hg.complete_uniform(6, 3)
v = t.verdicts[lab]
used = [(K.edges[i], str(y)) for i, y in enumerate(v.farkas.farkas) if y]
print("class", lab, "=", t.classes[lab])
print("multipliers:", used)

###############################################################################
# Peeling classes in label order always gives a certified decomposition; a
# class that is not positive against the residual is split greedily.

for n in range(4, 9):
    r = labels.peel_bound(hg.complete_uniform(n, 3))
    print(f"n={n} parts={r['p']} formula={r['formula']} split={r['split_classes']} "
          f"verified={r['decomposition'].verify(hg.complete_uniform(n, 3))}")
