"""JSON (de)serialization of field, code and construction specs.

Field: {"p": int, "m": int, "modulus": [int, ...]} with an optional "base"
entry when the field is an extension of a non-prime field (m and the
modulus coefficients are then relative to the base).  Elements serialize as
integers in [0, q) (base-p digit packing, little-endian coefficients).

Codes: {"kind": "rs" | "generic", "field": ..., "n": ..., "k": ...,
"generator": [[...]] (generic only), "d": int | null}.

Constructions: concatenated {"outer": code, "inner": code, "s": int};
generalized {"outers": [code...], "s": [int...], "inner_generator": [[...]],
"field": ...}; matrix-product {"outers": [code...], "B": [[...]],
"field": ...}.  Words and matrices travel as row-major integer sequences.
"""

from __future__ import annotations

import json

from .block_codes import LinearCode, generic_code, rs_code
from .concat import ConcatCode
from .errors import ConfigError
from .galois import Field, extend_field, make_field
from .gcc import GccSpec, gcc_spec
from .mpc import MpcSpec, mpc_spec


def field_to_json(f: Field) -> dict:
    if f.base is None:
        return {"p": f.p, "m": 1, "modulus": list(f.modulus)}
    if f.base.base is None:
        return {"p": f.p, "m": f.degree, "modulus": list(f.modulus)}
    return {
        "p": f.p,
        "m": f.degree,
        "modulus": list(f.modulus),
        "base": field_to_json(f.base),
    }


def field_from_json(d: dict) -> Field:
    if "base" in d:
        base = field_from_json(d["base"])
        return extend_field(base, int(d["m"]), d.get("modulus", "auto"))
    return make_field(int(d["p"]), int(d["m"]), d.get("modulus", "auto"))


def code_to_json(code: LinearCode) -> dict:
    out = {
        "kind": code.kind,
        "field": field_to_json(code.field),
        "n": code.n,
        "k": code.k,
        "d": code.declared_distance(),
    }
    if code.kind != "rs":
        out["generator"] = [list(row) for row in code.generator]
    return out


def code_from_json(d: dict) -> LinearCode:
    field = field_from_json(d["field"])
    if d.get("kind") == "rs":
        return rs_code(field, int(d["n"]), int(d["k"]))
    return generic_code(field, d["generator"], d=d.get("d"))


def concat_to_json(cc: ConcatCode) -> dict:
    return {
        "outer": code_to_json(cc.outer),
        "inner": code_to_json(cc.inner),
        "s": cc.tower.s,
    }


def concat_from_json(d: dict) -> ConcatCode:
    outer = code_from_json(d["outer"])
    inner = code_from_json(d["inner"])
    cc = ConcatCode(outer, inner)
    if cc.tower.s != int(d["s"]):
        raise ConfigError(f"expansion degree mismatch: spec says {d['s']}, fields give {cc.tower.s}")
    return cc


def gcc_to_json(spec: GccSpec) -> dict:
    return {
        "outers": [code_to_json(a) for a in spec.outers],
        "s": list(spec.widths),
        "inner_generator": [list(row) for row in spec.inner_generator],
        "field": field_to_json(spec.field),
    }


def gcc_from_json(d: dict) -> GccSpec:
    field = field_from_json(d["field"])
    outers = [code_from_json(a) for a in d["outers"]]
    return gcc_spec(outers, d["s"], d["inner_generator"], field, d.get("subcode_distances"))


def mpc_to_json(spec: MpcSpec) -> dict:
    return {
        "outers": [code_to_json(a) for a in spec.outers],
        "B": [list(row) for row in spec.matrix],
        "field": field_to_json(spec.field),
    }


def mpc_from_json(d: dict) -> MpcSpec:
    field = field_from_json(d["field"])
    outers = [code_from_json(a) for a in d["outers"]]
    return mpc_spec(outers, d["B"], field)


def load_spec(d: dict):
    """Dispatch a spec dict to its constructor by shape."""
    if "outer" in d and "inner" in d:
        return concat_from_json(d)
    if "B" in d:
        return mpc_from_json(d)
    if "inner_generator" in d:
        return gcc_from_json(d)
    if "kind" in d:
        return code_from_json(d)
    raise ConfigError("unrecognized spec layout")


def dump_spec(obj) -> dict:
    if isinstance(obj, ConcatCode):
        return concat_to_json(obj)
    if isinstance(obj, MpcSpec):
        return mpc_to_json(obj)
    if isinstance(obj, GccSpec):
        return gcc_to_json(obj)
    if isinstance(obj, LinearCode):
        return code_to_json(obj)
    raise ConfigError(f"cannot serialize {type(obj).__name__}")


def load_spec_file(path):
    with open(path) as fh:
        return load_spec(json.load(fh))


def matrix_to_json(matrix) -> list:
    return [int(x) for row in matrix for x in row]


def matrix_from_json(data, m: int, n: int) -> tuple:
    if data and isinstance(data[0], (list, tuple)):
        rows = [list(r) for r in data]
        if len(rows) != m or any(len(r) != n for r in rows):
            raise ConfigError(f"expected a {m} x {n} matrix")
        return tuple(tuple(int(x) for x in r) for r in rows)
    if len(data) != m * n:
        raise ConfigError(f"expected {m * n} symbols, got {len(data)}")
    return tuple(tuple(int(x) for x in data[i * n : (i + 1) * n]) for i in range(m))


def pattern_to_json(pattern) -> list:
    return [sorted(int(i) for i in x) for x in pattern]


def pattern_from_json(data, m: int):
    if len(data) != m:
        raise ConfigError(f"erasure pattern must have {m} rows")
    return tuple(frozenset(int(i) for i in row) for row in data)
