"""JSON schemas (draft 2020-12) for every report the command line emits."""
from __future__ import annotations

_POLY = {"type": "string", "minLength": 1}
_NULLABLE_POLY = {"type": ["string", "null"]}

WITNESS = {
    "type": ["object", "null"],
    "required": ["kind", "value"],
    "additionalProperties": False,
    "properties": {
        "kind": {
            "enum": [
                "residue",
                "monic_residue_poly",
                "residue_poly",
                "residue_matrix",
                "ok_residue",
                "charpoly",
                "field_element",
            ]
        },
        "value": {"type": "string"},
    },
}

VERDICT = {
    "type": "object",
    "required": ["member", "witness"],
    "properties": {
        "ring": {"type": "string"},
        "candidate": _POLY,
        "member": {"type": "boolean"},
        "witness": WITNESS,
    },
    "additionalProperties": False,
}

GENERATE = {
    "type": "object",
    "required": ["n", "den", "degree", "candidate"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "den": {"type": "integer", "minimum": 1},
        "degree": {"type": "integer", "minimum": 0},
        "candidate": _POLY,
    },
    "additionalProperties": False,
}

NULL_IDEAL = {
    "type": "object",
    "required": ["modulus", "degree_bound", "generators"],
    "properties": {
        "modulus": {"type": "integer", "minimum": 2},
        "degree_bound": {"type": "integer", "minimum": 0},
        "generators": {"type": "array", "items": _POLY},
    },
    "additionalProperties": False,
}

INTEGRALIZE = {
    "type": "object",
    "required": ["candidate", "minpoly", "phi", "degree", "composition_in_r_alpha"],
    "properties": {
        "candidate": _POLY,
        "minpoly": _POLY,
        "phi": _POLY,
        "degree": {"type": "integer", "minimum": 1},
        "composition_in_r_alpha": {"type": "boolean"},
    },
    "additionalProperties": False,
}

COVERAGE = {
    "type": "object",
    "required": ["order", "modulus", "classes"],
    "properties": {
        "order": _POLY,
        "modulus": {"type": "integer", "minimum": 2},
        "exclude_generators": {"type": "boolean"},
        "k_bound": {"type": "integer", "minimum": 0},
        "not_found": {"type": "integer", "minimum": 0},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["class", "representative", "k"],
                "properties": {
                    "class": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "representative": _NULLABLE_POLY,
                    "k": {"type": ["integer", "null"], "minimum": 0},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_UPPER = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["D", "member"],
        "properties": {"D": {"type": "integer"}, "member": {"type": "boolean"}},
        "additionalProperties": False,
    },
}

SANDWICH = {
    "type": "object",
    "required": ["candidate", "lower", "upper"],
    "properties": {
        "candidate": _POLY,
        "lower": VERDICT,
        "upper": _UPPER,
        "consistent": {"type": "boolean"},
    },
    "additionalProperties": False,
}

SANDWICH_SAMPLE = {
    "type": "object",
    "required": ["seed", "count", "family", "violations"],
    "properties": {
        "seed": {"type": "integer"},
        "count": {"type": "integer", "minimum": 0},
        "family": {"type": "array", "items": {"type": "integer"}},
        "violations": {"type": "array", "items": SANDWICH},
    },
    "additionalProperties": False,
}

FALSIFIER = {
    "type": "object",
    "required": ["space", "survivors"],
    "properties": {
        "space": {
            "type": "object",
            "required": ["denominators", "max_degree", "coeff_bound", "alpha_bound"],
            "properties": {
                "denominators": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                "max_degree": {"type": "integer", "minimum": 0},
                "coeff_bound": {"type": "integer", "minimum": 0},
                "alpha_bound": {"type": "integer", "minimum": 0},
            },
            "additionalProperties": False,
        },
        "alpha_sample": {"type": "integer", "minimum": 0},
        "examined": {"type": "integer", "minimum": 0},
        "survivors": {"type": "array", "items": _POLY},
    },
    "additionalProperties": False,
}

ALGINT = {
    "type": "object",
    "required": ["minpoly"],
    "properties": {
        "minpoly": _POLY,
        "field_D": {"type": "integer"},
        "index": {"type": "integer", "minimum": 1},
        "candidate": _POLY,
        "coordinates": {"type": "array", "items": {"type": "string"}},
        "element": {"type": "string"},
        "preimage": _POLY,
    },
    "additionalProperties": False,
}

ERROR = {
    "type": "object",
    "required": ["error"],
    "properties": {
        "error": {
            "type": "object",
            "required": ["kind", "message"],
            "properties": {"kind": {"type": "string"}, "message": {"type": "string"}},
            "additionalProperties": False,
        }
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "verdict": VERDICT,
    "generate": GENERATE,
    "nullideal": NULL_IDEAL,
    "integralize": INTEGRALIZE,
    "coverage": COVERAGE,
    "sandwich": SANDWICH,
    "sandwich_sample": SANDWICH_SAMPLE,
    "falsifier": FALSIFIER,
    "algint": ALGINT,
    "error": ERROR,
}
