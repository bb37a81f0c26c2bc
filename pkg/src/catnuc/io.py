"""JSON file formats for algebras, coalgebras, groups, cocycles, pairs and monoids.

Scalars are written as "a/b" or integer strings over Q and as integers
0..p-1 over GF(p); the field is declared once per file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import Algebra, FiniteMonoid, LinearMap
from .errors import DimensionError, InvalidStructureError
from .fields import Field, field_from_descriptor
from .groups import FiniteGroup
from .modcat import CoalgebraStructure, RModule
from .tensor import TensorElement


class InputError(Exception):
    """A file could not be read or does not match its format."""


def load_json(source) -> tuple[dict, Path | None]:
    """A dict either given inline or read from a path (returns its directory too)."""
    if isinstance(source, dict):
        return source, None
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data, path.parent


def _resolve(ref, base: Path | None):
    if isinstance(ref, str) and base is not None and not Path(ref).is_absolute():
        return base / ref
    return ref


def _field(data: dict, override: Field | None = None) -> Field:
    if override is not None:
        return override
    return field_from_descriptor(data.get("field", {"type": "Q"}))


def parse_array(field: Field, data, shape=None) -> np.ndarray:
    arr = np.array(data, dtype=object)
    if shape is not None and arr.shape != tuple(shape):
        raise DimensionError(f"expected shape {tuple(shape)}, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = field.parse(arr[idx])
    return out


def format_array(field: Field, arr) -> Any:
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return field.format(arr[()])
    return [format_array(field, a) for a in arr]


def _require(data: dict, key: str, what: str):
    if key not in data:
        raise InputError(f"{what} file is missing '{key}'")
    return data[key]


# ------------------------------------------------------------- algebras


def algebra_from_dict(data: dict, field: Field | None = None) -> Algebra:
    fld = _field(data, field)
    n = int(_require(data, "dim", "algebra"))
    c = parse_array(fld, _require(data, "c", "algebra"), (n, n, n)) if n else fld.zeros((0, 0, 0))
    unit = parse_array(fld, data["unit"], (n,)) if data.get("unit") is not None else None
    return Algebra(fld, c, unit, data.get("names"))


def algebra_to_dict(A: Algebra) -> dict:
    out = {"field": A.field.descriptor(), "dim": A.dim, "c": format_array(A.field, A.c)}
    if A.unit is not None:
        out["unit"] = format_array(A.field, A.unit)
    if A.names:
        out["names"] = list(A.names)
    return out


def load_algebra(source, field: Field | None = None) -> Algebra:
    data, _ = load_json(source)
    return algebra_from_dict(data, field)


def coalgebra_from_dict(data: dict, field: Field | None = None) -> CoalgebraStructure:
    A = algebra_from_dict(data, field)
    n = A.dim
    # row j*n + k, column i: coefficient of e_j (x) e_k in Delta(e_i)
    dmat = parse_array(A.field, _require(data, "delta", "coalgebra"), (n * n, n))
    delta = dmat.T.reshape(n, n, n)
    eps = parse_array(A.field, data["epsilon"], (n,)) if data.get("epsilon") is not None else None
    return CoalgebraStructure(A, delta, eps)


def coalgebra_to_dict(R: CoalgebraStructure) -> dict:
    out = algebra_to_dict(R.algebra)
    n = R.dim
    out["delta"] = format_array(R.field, R.delta.reshape(n, n * n).T)
    if R.epsilon is not None:
        out["epsilon"] = format_array(R.field, R.epsilon)
    return out


def load_coalgebra(source, field: Field | None = None) -> CoalgebraStructure:
    data, _ = load_json(source)
    return coalgebra_from_dict(data, field)


def linear_map_from_dict(data: dict, base: Path | None = None, field: Field | None = None) -> LinearMap:
    src = _require(data, "source", "linear map")
    tgt = _require(data, "target", "linear map")
    A = load_algebra(_resolve(src, base), field)
    B = load_algebra(_resolve(tgt, base), field)
    mat = parse_array(A.field, _require(data, "matrix", "linear map"), (B.dim, A.dim))
    return LinearMap(A, B, mat)


def load_linear_map(source, field: Field | None = None) -> LinearMap:
    data, base = load_json(source)
    return linear_map_from_dict(data, base, field)


# -------------------------------------------------------- groups, monoids


def group_from_dict(data: dict) -> FiniteGroup:
    table = _require(data, "table", "group")
    n = int(data.get("size", len(table)))
    if len(table) != n or any(len(r) != n for r in table):
        raise InputError(f"group table must be {n} x {n}")
    names = data.get("names")
    if "unit" in data:
        return FiniteGroup(table, int(data["unit"]), (), names and tuple(names))
    return FiniteGroup.from_table(table, names)


def load_group(source) -> FiniteGroup:
    data, _ = load_json(source)
    return group_from_dict(data)


def group_to_dict(G: FiniteGroup) -> dict:
    out = {"size": G.size, "table": [list(r) for r in G.table], "unit": G.unit}
    if G.names:
        out["names"] = list(G.names)
    return out


def monoid_from_dict(data: dict) -> FiniteMonoid:
    table = _require(data, "table", "monoid")
    n = int(data.get("size", len(table)))
    if len(table) != n or any(len(r) != n for r in table):
        raise InputError(f"monoid table must be {n} x {n}")
    names = data.get("names")
    if "unit" in data:
        return FiniteMonoid(table, int(data["unit"]), names and tuple(names))
    return FiniteMonoid.from_table(table, names)


def load_monoid(source) -> FiniteMonoid:
    data, _ = load_json(source)
    return monoid_from_dict(data)


def monoid_map_from_dict(data: dict, base: Path | None = None):
    from .multiplicants import MonoidMap

    src = load_monoid(_resolve(_require(data, "source", "monoid map"), base))
    tgt = load_monoid(_resolve(_require(data, "target", "monoid map"), base))
    return MonoidMap(src, tgt, tuple(_require(data, "images", "monoid map")))


def load_monoid_map(source):
    data, base = load_json(source)
    return monoid_map_from_dict(data, base)


def parse_images(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise InputError(f"bad image list {text!r}") from exc


# --------------------------------------------------------------- cocycles


def _group_index(G: FiniteGroup, label) -> int:
    try:
        return G.index(label)
    except InvalidStructureError as exc:
        raise InputError(str(exc)) from exc


def cocycle_from_dict(data: dict, G: FiniteGroup, field: Field | None = None):
    from .cocycles import Cocycle3

    fld = _field(data, field)
    n = G.size
    vals = np.empty((n, n, n), dtype=object)
    for idx in np.ndindex(vals.shape):
        vals[idx] = fld.one
    for key, v in _require(data, "values", "cocycle").items():
        parts = [p for p in str(key).split(",")]
        if len(parts) != 3:
            raise InputError(f"cocycle key {key!r} must be 'f,g,h'")
        f, g, h = (_group_index(G, p.strip()) for p in parts)
        vals[f, g, h] = fld.parse(v)
    return Cocycle3(G, fld, vals)


def cocycle_to_dict(alpha) -> dict:
    G, fld = alpha.group, alpha.field
    values = {}
    for f, g, h in np.ndindex(alpha.values.shape):
        v = alpha(f, g, h)
        if v != 1:
            values[f"{G.name(f)},{G.name(g)},{G.name(h)}"] = fld.format(v)
    return {"field": fld.descriptor(), "values": values}


def load_cocycle(source, G: FiniteGroup, field: Field | None = None):
    data, _ = load_json(source)
    return cocycle_from_dict(data, G, field)


# ------------------------------------------------------------------ pairs


def module_from_dict(data: dict, R: CoalgebraStructure) -> RModule:
    d = int(_require(data, "dim", "module"))
    acts = _require(data, "action", "module")
    if len(acts) != R.dim:
        raise InputError(f"module needs {R.dim} action matrices, got {len(acts)}")
    return RModule(R, tuple(parse_array(R.field, a, (d, d)) for a in acts))


def module_to_dict(M: RModule) -> dict:
    return {"dim": M.dim, "action": [format_array(M.base.field, a) for a in M.action]}


def element_from_dict(data: dict, R: CoalgebraStructure, d: int, legs: int) -> TensorElement:
    """``{"i,j": matrix}`` (omitted multi-indices are zero)."""
    coeffs = R.field.zeros((R.dim,) * legs + (d, d))
    for key, mat in data.items():
        idx = tuple(int(p) for p in str(key).split(","))
        if len(idx) != legs or any(not 0 <= i < R.dim for i in idx):
            raise InputError(f"bad element index {key!r}")
        coeffs[idx] = parse_array(R.field, mat, (d, d))
    return TensorElement(R.algebra, coeffs)


def element_to_dict(t: TensorElement) -> dict:
    out = {}
    for I in t.indices():
        blk = t.coeffs[I]
        if any(x != 0 for x in blk.ravel()):
            out[",".join(str(i) for i in I)] = format_array(t.field, blk)
    return out


def nucleus_pair_from_dict(data: dict, R: CoalgebraStructure, validate: bool = False):
    from .modcat import NucleusPair

    M = module_from_dict(_require(data, "module", "pair"), R)
    m = element_from_dict(_require(data, "m", "pair"), R, M.dim, 2)
    return NucleusPair(M, m, validate=validate)


def pair_to_dict(module: RModule, m: TensorElement) -> dict:
    return {"module": module_to_dict(module), "m": element_to_dict(m)}


def load_pair(source, R: CoalgebraStructure, validate: bool = False):
    data, _ = load_json(source)
    return nucleus_pair_from_dict(data, R, validate)


def load_multiplicant_pair(source, H1, H2, f, validate: bool = False):
    from .modcat import MultiplicantPair

    data, _ = load_json(source)
    M = module_from_dict(_require(data, "module", "pair"), H2)
    m = element_from_dict(_require(data, "m", "pair"), H2, M.dim, 1)
    return MultiplicantPair(H1, H2, f, M, m, validate=validate)


def load_twist(source, R: CoalgebraStructure) -> TensorElement:
    """``{"c": {"i,j": scalar}}``."""
    data, _ = load_json(source)
    coeffs = R.field.zeros((R.dim, R.dim, 1, 1))
    for key, v in _require(data, "c", "twist").items():
        idx = tuple(int(p) for p in str(key).split(","))
        if len(idx) != 2 or any(not 0 <= i < R.dim for i in idx):
            raise InputError(f"bad twist index {key!r}")
        coeffs[idx + (0, 0)] = R.field.parse(v)
    return TensorElement(R.algebra, coeffs)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
