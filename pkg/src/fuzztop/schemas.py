"""JSON Schemas for the documents emitted by the command-line front end.

Plain dictionaries, so no validator is needed at run time; the test suite
validates every emitted document against them.
"""

GRADE = {"type": "string", "pattern": r"^(0|1|[1-9][0-9]*/[1-9][0-9]*)$"}
GRADES = {"type": "array", "items": GRADE}

INSTANCE_FILE = {
    "type": "object",
    "required": ["carrier", "f"],
    "additionalProperties": False,
    "properties": {
        "carrier": {
            "oneOf": [
                {"type": "integer", "minimum": 1},
                {"type": "array", "items": {"type": "string"}, "minItems": 1},
            ]
        },
        "f": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
        "window": {"type": "integer", "minimum": 1},
        "tau3": {
            "type": "object",
            "required": ["x0", "k"],
            "additionalProperties": False,
            "properties": {
                "x0": {"type": "integer", "minimum": 0},
                "k": {"type": "integer", "minimum": 1},
            },
        },
    },
}

BASIS = {
    "type": "object",
    "required": ["space", "carrier", "rows"],
    "properties": {
        "space": {"enum": ["tau1", "tau1c", "tau2", "tau3"]},
        "window": {"type": ["integer", "null"]},
        "carrier": {"type": "array", "items": {"type": "string"}},
        "laws": {"type": "array", "items": {"type": "string"}},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "grades"],
                "properties": {"name": {"type": "string"}, "grades": GRADES},
            },
        },
    },
}

PROPERTIES = {
    "type": "object",
    "required": ["space", "window", "compact", "connected", "t0", "regular", "normal", "lindelof"],
    "properties": {
        "space": {"type": "string"},
        "window": {"type": ["integer", "null"]},
        "compact": {"type": "boolean"},
        "connected": {"type": "boolean"},
        "t0": {
            "type": "object",
            "required": ["crisp", "paper_fuzzy_pair", "fuzzy_full"],
            "additionalProperties": {"type": "boolean"},
        },
        "regular": {"type": "boolean"},
        "normal": {"type": "boolean"},
        "lindelof": {"type": "boolean"},
        "witnesses": {"type": "object"},
        "justifications": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}

MAP_WITNESS = {
    "type": "object",
    "required": ["set", "result"],
    "properties": {"set": GRADES, "result": GRADES, "index": {"type": "integer", "minimum": 1}},
}

MAP = {
    "type": "object",
    "required": ["space", "window", "open_map", "continuous", "witnesses"],
    "properties": {
        "space": {"type": "string"},
        "window": {"type": ["integer", "null"]},
        "open_map": {"type": "boolean"},
        "continuous": {"type": "boolean"},
        "witnesses": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"open_map": MAP_WITNESS, "continuous": MAP_WITNESS},
        },
    },
}

EQUAL = {
    "type": "object",
    "required": ["left", "right", "window", "equal", "witness"],
    "properties": {
        "left": {"type": "string"},
        "right": {"type": "string"},
        "window": {"type": ["integer", "null"]},
        "equal": {"type": "boolean"},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["open", "only_in"],
                    "properties": {"open": GRADES, "only_in": {"enum": ["left", "right"]}},
                },
            ]
        },
    },
}

_INSTANCE = {
    "type": "object",
    "required": ["size", "f", "space", "window"],
    "properties": {
        "size": {"type": "integer", "minimum": 1},
        "f": {"type": "array", "items": {"type": "integer"}},
        "space": {"enum": ["tau1", "tau2", "tau3"]},
        "window": {"type": "integer"},
        "x0": {"type": "integer"},
        "k": {"type": "integer"},
    },
}

_RECORD = {
    "type": "object",
    "required": ["instance", "hypothesis", "conclusion", "evidence"],
    "properties": {
        "instance": _INSTANCE,
        "hypothesis": {"type": "boolean"},
        "conclusion": {"type": "boolean"},
        "evidence": {"type": "object"},
    },
}

SWEEP = {
    "type": "object",
    "required": ["params", "claims", "summary"],
    "properties": {
        "params": {
            "type": "object",
            "required": ["max_size", "k_values", "window", "instances"],
            "properties": {
                "max_size": {"type": "integer"},
                "k_values": {"type": "array", "items": {"type": "integer"}},
                "window": {"type": "integer"},
                "instances": {"type": "integer"},
            },
        },
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "id", "description", "direction", "expectation",
                    "instances", "hypothesis_true", "agreements", "counterexample",
                ],
                "properties": {
                    "id": {"type": "string"},
                    "direction": {"enum": ["iff", "implies", "exists"]},
                    "expectation": {"enum": ["asserted", "report_only"]},
                    "instances": {"type": "integer"},
                    "hypothesis_true": {"type": "integer"},
                    "agreements": {"type": "integer"},
                    "counterexample": {
                        "oneOf": [
                            {"type": "null"},
                            _RECORD,
                            {"type": "object", "required": ["reason"]},
                        ]
                    },
                    "witness": {"oneOf": [{"type": "null"}, _RECORD]},
                    "by_k": {"type": "object"},
                    "note": {"type": "string"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["asserted_failures", "report_only_divergences"],
        },
    },
}

BY_COMMAND = {
    "basis": BASIS,
    "check": PROPERTIES,
    "map": MAP,
    "equal": EQUAL,
    "verify": SWEEP,
}
