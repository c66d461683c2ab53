"""
Exact feasibility and Farkas certificates
=========================================

Positivity of a matching is a strict linear system.  The solver works over
the rationals and answers with either a feasible point or nonnegative
multipliers proving infeasibility; both can be re-checked independently.
"""

from lsspmd import exactlp
from lsspmd import hypergraph as hg
from lsspmd.positive import certify_positive, verify_verdict

# A tiny general system: x + y > 1, x - y <= 0, x >= 0.
sys_ = exactlp.LinearSystem.build(2, [
    exactlp.Row.make([1, 1], ">", 1),
    exactlp.Row.make([1, -1], "<=", 0),
    exactlp.Row.make([1, 0], ">=", 0),
])
print(sys_.dump())
v = exactlp.solve(sys_)
print("verdict:", v.to_dict(), "verified:", exactlp.verify(sys_, v))

###############################################################################
# The perfect matching of the 4-cycle is not positive: adding the four edge
# inequalities with weight 1/4 gives 0 < 0.

cycle = hg.validate(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
M = [cycle.index_of((1, 2)), cycle.index_of((3, 4))]
verdict = certify_positive(cycle, M)
print(verdict.kind, verdict.to_dict())
print(verdict.system.dump())
print("re-verified:", verify_verdict(cycle, M, verdict))

###############################################################################
# A single edge, by contrast, is positive, and the certificate is a plain
# vertex weighting.

single = certify_positive(cycle, [M[0]])
print(single.kind, single.to_dict())
for e in cycle.edges:
    print("  weight of", e, "=", single.certificate.weight(e))
