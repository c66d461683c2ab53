"""Exception hierarchy shared by every module.

All domain errors derive from :class:`PmdError` so callers (and the CLI) can
catch one type and still inspect ``code`` for the specific failure.
"""


class PmdError(Exception):
    """Base class for domain errors."""

    code = "PmdError"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        out = {"error": self.code, "message": str(self)}
        out.update({k: _jsonable(v) for k, v in self.details.items()})
        return out


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# hypergraph-core
class VertexOutOfRange(PmdError):
    code = "VertexOutOfRange"


class EmptyEdge(PmdError):
    code = "EmptyEdge"


class ClutterViolation(PmdError):
    code = "ClutterViolation"


class DuplicateEdge(PmdError):
    code = "DuplicateEdge"


class IndexOutOfRange(PmdError):
    code = "IndexOutOfRange"


class NotUniform(PmdError):
    code = "NotUniform"


class NotATree(PmdError):
    code = "NotATree"


class NoEdges(PmdError):
    code = "NoEdges"


class ParseError(PmdError):
    code = "ParseError"


# exact-lp
class ShapeMismatch(PmdError):
    code = "ShapeMismatch"


class NotHomogeneousStrict(PmdError):
    code = "NotHomogeneousStrict"


# pmd-solver
class BudgetExceeded(PmdError):
    """Raised when exact search runs out of node expansions.

    ``bounds`` carries the best :class:`~lsspmd.pmd.PmdBounds` known so far.
    """

    code = "BudgetExceeded"

    def __init__(self, message="", bounds=None, **details):
        super().__init__(message, **details)
        self.bounds = bounds

    def to_dict(self):
        out = super().to_dict()
        if self.bounds is not None:
            out["bounds"] = self.bounds.to_dict()
        return out

    def to_dict(self):
        out = super().to_dict()
        if self.bounds is not None:
            out["bounds"] = self.bounds.to_dict()
        return out


class StarDecompositionViolation(PmdError):
    code = "StarDecompositionViolation"


# complete-uniform-family
class NTooSmall(PmdError):
    code = "NTooSmall"


# lss-algebra
class InvalidD(PmdError):
    code = "InvalidD"


class PivotIsolated(PmdError):
    code = "PivotIsolated"


class TOutOfRange(PmdError):
    code = "TOutOfRange"


class ContradictionDetected(PmdError):
    code = "ContradictionDetected"
