"""JSON schemas for the documents the CLI emits."""

_ints = {"type": "array", "items": {"type": "integer"}}

SEMIGROUP = {
    "type": "object",
    "properties": {
        "msg": _ints,
        "frobenius": {"type": "integer", "minimum": -1},
        "genus": {"type": "integer", "minimum": 0},
        "gaps": _ints,
    },
    "required": ["msg", "frobenius", "genus", "gaps"],
    "additionalProperties": False,
}

FAMILY = {
    "type": "object",
    "properties": {
        "minimum": SEMIGROUP,
        "members": {"type": "array", "items": SEMIGROUP},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
    },
    "required": ["minimum", "members", "edges"],
    "additionalProperties": False,
}

INFO = {
    "type": "object",
    "properties": {
        **SEMIGROUP["properties"],
        "multiplicity": {"type": "integer"},
        "embedding_dimension": {"type": "integer"},
        "type": {"type": "integer"},
        "pseudo_frobenius": _ints,
        "special_gaps": _ints,
    },
    "required": SEMIGROUP["required"] + ["multiplicity", "embedding_dimension", "type"],
    "additionalProperties": False,
}

GENERATORS = {
    "type": "object",
    "properties": {"generators": _ints, "rank": {"type": "integer", "minimum": 0}},
    "required": ["generators", "rank"],
    "additionalProperties": False,
}

RANK1 = {
    "type": "object",
    "properties": {"members": {"type": "array", "items": SEMIGROUP}, "gaps": _ints},
    "required": ["members"],
    "additionalProperties": False,
}

COE_CHECK = {
    "type": "object",
    "properties": {
        "coe": {"type": "boolean"},
        "frobenius": {"type": "integer"},
        "member": {"type": ["boolean", "null"]},
    },
    "required": ["coe", "frobenius", "member"],
    "additionalProperties": False,
}
