"""JSON Schemas for ``cantorkit --json`` output, keyed by subcommand.

Keys are ``"ord"``, ``"card"`` or ``"<command> <op>"``; failures of any
command use ``ERROR``.  Exact rationals that are not integers appear as
strings such as ``"4/3"``.
"""

_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}
_STR = {"type": "string"}
_SCALAR = {"oneOf": [_INT, {"type": "string", "pattern": r"^-?\d+/\d+$"}]}
_INTS = {"type": "array", "items": _INT}
_INT_MATRIX = {"type": "array", "items": _INTS}
_SCALAR_MATRIX = {"type": "array", "items": {"type": "array", "items": _SCALAR}}
_GROUP = {
    "type": "object",
    "properties": {"torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
                   "rank": {"type": "integer", "minimum": 0}},
    "required": ["torsion", "rank"],
    "additionalProperties": False,
}
_MODE = {"enum": ["base", "ch", "gch"]}


def _obj(**props):
    return {"type": "object", "properties": props, "required": sorted(props), "additionalProperties": False}


# an ordinal is a list of [exponent, coefficient] pairs, exponents again ordinals
_CNF = {"type": "array", "items": {"type": "array", "prefixItems": [{"$ref": "#/$defs/cnf"},
                                                                    {"type": "integer", "minimum": 1}],
                                   "minItems": 2, "maxItems": 2}}

SCHEMAS = {
    "ord": _obj(ordinal=_STR, cardinality=_STR, cnf={"$ref": "#/$defs/cnf"}) | {"$defs": {"cnf": _CNF}},
    "card": {"oneOf": [
        _obj(cardinal=_STR, kind={"enum": ["finite", "aleph", "beth"]},
             value={"type": "integer", "minimum": 0}, mode=_MODE),
        _obj(cmp={"enum": ["less", "equal", "greater", "undetermined"]}, mode=_MODE),
    ]},
    "set kind": _obj(injective=_BOOL, surjective=_BOOL, bijective=_BOOL),
    "set invert": _obj(map=_STR),
    "set sb": _obj(map=_STR),
    "set sbn": _obj(x={"type": "integer", "minimum": 0}, h={"type": "integer", "minimum": 0}, in_E=_BOOL),
    "set powerset": _obj(count={"type": "integer", "minimum": 1}, subsets={"type": "array", "items": _STR}),
    "set chi": _obj(map=_STR),
    "set order": _obj(partial=_BOOL, linear=_BOOL, well=_BOOL),
    "set iso": _obj(map={"type": ["string", "null"]}),
    "abgroup classify": _GROUP,
    "abgroup cyclic": _GROUP,
    "abgroup snf": _obj(diag=_INTS, U=_INT_MATRIX, D=_INT_MATRIX, V=_INT_MATRIX),
    "abgroup iso": _obj(isomorphic=_BOOL),
    "abgroup divisors": _obj(elementary_divisors=_INTS),
    "abgroup cosets": _obj(count={"type": "integer", "minimum": 1}, moduli=_INTS, representatives=_INT_MATRIX),
    "abgroup order": _obj(order={"oneOf": [{"type": "integer", "minimum": 1}, {"const": "infinite"}]}),
    "abgroup kernel": _obj(kernel=_INT_MATRIX, image=_INT_MATRIX, cokernel=_GROUP, first_iso=_BOOL),
    "poly add": _obj(polynomial=_STR, coeffs={"type": "array", "items": _SCALAR}),
    "poly sub": _obj(polynomial=_STR, coeffs={"type": "array", "items": _SCALAR}),
    "poly mul": _obj(polynomial=_STR, coeffs={"type": "array", "items": _SCALAR}),
    "poly deg": _obj(degree={"type": ["integer", "null"]}),
    "poly divmod": _obj(quotient=_STR, remainder=_STR),
    "poly series-add": _obj(series=_STR, precision={"type": "integer", "minimum": 1},
                            coeffs={"type": "array", "items": _SCALAR}),
    "poly series-mul": _obj(series=_STR, precision={"type": "integer", "minimum": 1},
                            coeffs={"type": "array", "items": _SCALAR}),
    "ideal gen": _obj(generator=_STR),
    "ideal member": _obj(member=_BOOL),
    "ideal acc": _obj(stabilizes_at={"type": "integer", "minimum": 0}),
    "ideal maximal": _obj(n=_INT, maximal=_INTS),
    "ideal units": _obj(units=_INTS, zero_divisors=_INTS),
    "ideal field": _obj(n=_INT, inverses={"type": "object", "additionalProperties": _INT}),
    "lin independent": _obj(independent=_BOOL),
    "lin span": _obj(member=_BOOL),
    "lin sieve": _obj(basis=_SCALAR_MATRIX),
    "lin extend": _obj(basis=_SCALAR_MATRIX),
    "lin ranknull": _obj(kernel=_SCALAR_MATRIX, image=_SCALAR_MATRIX,
                         nullity={"type": "integer", "minimum": 0}, rank={"type": "integer", "minimum": 0}),
    "lin stacked": _obj(basis=_INT_MATRIX, multipliers=_INTS),
    "lin projective": _obj(projective=_BOOL),
    "lin section": _obj(section=_SCALAR_MATRIX, retraction=_SCALAR_MATRIX, decomposition=_BOOL),
}

ERROR = {
    "type": "object",
    "properties": {
        "error": _STR,
        "message": _STR,
        "offset": {"type": ["integer", "null"]},
        "expected": {"type": "array", "items": _STR},
        "witness": _INTS,
        "collision": {"type": ["array", "null"]},
        "unhit": {},
        "map": _STR,
    },
    "required": ["error", "message"],
}
