"""Positive matching decompositions of hypergraphs and the LSS ideals they
control.

The public surface is re-exported here; see the submodules for details.
"""

from .errors import PmdError
from .exactlp import Feasible, Infeasible, LinearSystem, Row, solve, strict_homogeneous_normalize, verify
from .hypergraph import (
    Hypergraph,
    TreeCheckResult,
    check_tree,
    complete_uniform,
    connected_components,
    degree,
    delete_edges,
    find_leaf,
    is_matching,
    max_degree,
    random_tree,
    star,
    validate,
)
from .labels import PartitionTable, build_partition, closed_formula, count_labels, peel_bound, scan_conjecture
from .lss import (
    ObstructionWitness,
    Polynomial,
    PresentationMatrix,
    StatusReport,
    emit_cas_script,
    generators,
    leading_minor,
    obstruction_search,
    presentation_matrix,
    status_report,
    support_check,
)
from .pmd import PmdBounds, PmdDecomposition, greedy_pmd, pmd_bounds, pmd_exact, pmd_tree
from .positive import WeightCertificate, certify_positive, greedy_positive_matching

__version__ = "0.1.0"
