"""JSON Schemas for every structured CLI output.

Plain dicts, so they can be fed to any draft-2020-12 validator.
"""

_rational = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_edge = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1}
_edges = {"type": "array", "items": _edge}
_weights = {"type": "object", "patternProperties": {r"^\d+$": _rational}, "additionalProperties": False}

HYPERGRAPH = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {"n": {"type": "integer", "minimum": 0}, "edges": _edges},
    "additionalProperties": False,
}

TREE_CHECK = {
    "type": "object",
    "required": ["is_k_uniform", "k", "is_tree", "violation", "isolated"],
    "properties": {
        "is_k_uniform": {"type": "boolean"},
        "k": {"type": ["integer", "null"]},
        "is_tree": {"type": "boolean"},
        "violation": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind"],
                    "properties": {"kind": {"enum": ["not_uniform", "T1", "T2"]}},
                },
            ]
        },
        "isolated": {"type": "array", "items": {"type": "integer"}},
    },
}

VALIDATE = {
    "type": "object",
    "required": ["hypergraph", "m", "max_degree", "uniformity", "tree"],
    "properties": {
        "hypergraph": HYPERGRAPH,
        "m": {"type": "integer"},
        "max_degree": {"type": "integer"},
        "uniformity": {"type": ["integer", "null"]},
        "tree": TREE_CHECK,
    },
}

PMD = {
    "type": "object",
    "required": ["p", "parts", "certificates", "mode", "max_degree", "verified"],
    "properties": {
        "p": {"type": "integer", "minimum": 0},
        "parts": {"type": "array", "items": _edges},
        "certificates": {"type": "array", "items": _weights},
        "mode": {"enum": ["tree", "exact", "greedy"]},
        "max_degree": {"type": "integer"},
        "verified": {"const": True},
        "rounds": {"type": "integer"},
        "lp_fallbacks": {"type": "integer"},
    },
}

CERTIFY = {
    "type": "object",
    "required": ["matching", "verdict", "verified"],
    "properties": {
        "matching": _edges,
        "verdict": {"enum": ["positive", "not_positive", "not_a_matching"]},
        "weights": _weights,
        "farkas": {"type": "array", "items": _rational},
        "witness": _edges,
        "verified": {"const": True},
    },
}

_label = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

SCAN = {
    "type": "object",
    "required": ["n", "mode", "classes", "verdicts", "counterexamples", "verified"],
    "properties": {
        "n": {"type": "integer", "minimum": 3},
        "mode": {"enum": ["full", "residual"]},
        "classes": {
            "type": "array",
            "items": {"type": "object", "required": ["label", "edges"], "properties": {"label": _label, "edges": _edges}},
        },
        "verdicts": {
            "type": "array",
            "items": {"type": "object", "required": ["label", "verdict"], "properties": {"label": _label}},
        },
        "counterexamples": {"type": "array", "items": _label},
        "verified": {"const": True},
    },
}

COUNT = {
    "type": "object",
    "required": ["n", "count", "formula", "match", "increment", "increment_formula"],
    "properties": {
        "n": {"type": "integer"},
        "count": {"type": "integer"},
        "formula": {"type": "integer"},
        "match": {"type": "boolean"},
        "increment": {"type": "integer"},
        "increment_formula": {"type": "integer"},
    },
    "additionalProperties": False,
}

MATRIX = {
    "type": "object",
    "required": ["pivot", "rows", "d", "matrix", "leading_minors"],
    "properties": {
        "pivot": {"type": "integer"},
        "rows": _edges,
        "d": {"type": "integer"},
        "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "leading_minors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["t", "minor", "support_check"],
                "properties": {"t": {"type": "integer"}, "minor": {"type": "string"}, "support_check": {"type": "boolean"}},
            },
        },
    },
}

OBSTRUCTION = {
    "type": "object",
    "required": ["c", "C", "W", "value"],
    "properties": {
        "c": {"type": "integer", "minimum": 1},
        "C": {"type": "array", "items": {"type": "integer"}},
        "W": _edges,
        "value": {"type": "integer"},
        "d": {"type": "integer"},
        "not_prime_known": {"type": "boolean"},
    },
}

_bounds = {
    "type": "object",
    "required": ["lower", "upper", "exact"],
    "properties": {"lower": {"type": "integer"}, "upper": {"type": "integer"}, "exact": {"type": ["integer", "null"]}},
}

STATUS = {
    "type": "object",
    "required": [
        "n", "k", "d", "pmd", "pmd_upper", "obstruction_value", "obstruction",
        "ci_known", "prime_known", "not_prime_known", "rank_bound", "irreducible_range", "notes",
    ],
    "properties": {
        "pmd": _bounds,
        "obstruction": OBSTRUCTION,
        "ci_known": {"type": "boolean"},
        "prime_known": {"type": "boolean"},
        "not_prime_known": {"type": "boolean"},
        "rank_bound": {"type": "integer"},
        "irreducible_range": {
            "oneOf": [{"type": "null"}, {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}]
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}

ERROR = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
}

BY_COMMAND = {
    "validate": VALIDATE,
    "pmd": PMD,
    "tree-pmd": PMD,
    "certify": CERTIFY,
    "scan": SCAN,
    "count": COUNT,
    "ideal --matrix": MATRIX,
    "status": STATUS,
    "obstruct": OBSTRUCTION,
    "random-tree": HYPERGRAPH,
}
