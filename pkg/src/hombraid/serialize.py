"""JSON encodings for every structure the CLI reads or writes.

All scalars are strings in the text encoding of :mod:`hombraid.scalar`.
Output is deterministic, so ``dumps(load(dumps(x))) == dumps(x)``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .bialgebra import Bialgebra, DualQTStructure, HComodule, HModule, QTStructure
from .homalg import HomAssociativeAlgebra, HomLieAlgebra
from .hybe import HomModule, HybeCandidate
from .linalg import (Matrix, ShapeError, Tensor3, matrix_from_json, matrix_to_json, tensor_from_json,
                     tensor_to_json, vector_from_json, vector_to_json)
from .scalar import RationalFunction


class SchemaError(ValueError):
    pass


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: top-level JSON must be an object")
    return obj


def write_json(path, obj: dict) -> None:
    Path(path).write_text(dumps(obj))


def field_of(*parts) -> str:
    def scalars(p):
        if isinstance(p, Matrix):
            return (x for row in p.nonzeros() for _, x in row)
        if isinstance(p, Tensor3):
            return (x for plane in p.entries for row in plane for x in row)
        return iter(p)
    return "Q(l)" if any(isinstance(x, RationalFunction) for p in parts if p is not None
                         for x in scalars(p)) else "Q"


def _need(obj: dict, key: str):
    if key not in obj:
        raise SchemaError(f"missing key {key!r}")
    return obj[key]


def _allow(obj: dict) -> bool:
    field = obj.get("field", "Q(l)")
    if field not in ("Q", "Q(l)"):
        raise SchemaError(f"unknown field {field!r}")
    return field == "Q(l)"


def _expect_kind(obj: dict, *kinds: str) -> str:
    kind = obj.get("kind")
    if kind not in kinds:
        raise SchemaError(f"expected kind {' or '.join(kinds)}, got {kind!r}")
    return kind


def _wrap(fn, obj):
    try:
        return fn(obj)
    except SchemaError:
        raise
    except (ShapeError, ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc)) from None


# -- algebras ------------------------------------------------------------------

def algebra_to_json(A: HomLieAlgebra | HomAssociativeAlgebra) -> dict:
    lie = isinstance(A, HomLieAlgebra)
    tensor = A.bracket if lie else A.mu
    return {
        "kind": "hom-lie" if lie else "hom-assoc",
        "dim": A.dim,
        "field": field_of(tensor, A.alpha),
        "basis": list(A.basis) if A.basis else [f"x{i}" for i in range(A.dim)],
        "bracket" if lie else "mu": tensor_to_json(tensor),
        "alpha": matrix_to_json(A.alpha),
    }


def algebra_from_json(obj: dict):
    def parse(obj):
        kind = _expect_kind(obj, "hom-lie", "hom-assoc")
        allow = _allow(obj)
        tensor = tensor_from_json(_need(obj, "bracket" if kind == "hom-lie" else "mu"), allow)
        alpha = matrix_from_json(_need(obj, "alpha"), allow)
        basis = tuple(obj["basis"]) if obj.get("basis") else None
        if tensor.out_dim != _need(obj, "dim"):
            raise SchemaError("dim does not match the structure constants")
        cls = HomLieAlgebra if kind == "hom-lie" else HomAssociativeAlgebra
        return cls(tensor, alpha, basis)
    return _wrap(parse, obj)


# -- bialgebras, modules, comodules ----------------------------------------------

def bialgebra_to_json(H: Bialgebra, qt: QTStructure | None = None,
                      dual: DualQTStructure | None = None) -> dict:
    d = H.dim
    delta = [[[H.delta[j * d + k, i] for k in range(d)] for j in range(d)] for i in range(d)]
    obj = {
        "kind": "bialgebra",
        "dim": d,
        "field": field_of(H.mu, H.delta, H.unit, H.counit,
                          qt.R if qt else None, dual.R if dual else None),
        "basis": list(H.basis) if H.basis else [f"x{i}" for i in range(d)],
        "mu": tensor_to_json(H.mu),
        "unit": vector_to_json(H.unit),
        "delta": tensor_to_json(Tensor3(delta)),
        "counit": vector_to_json(H.counit),
    }
    if qt is not None:
        obj["qt_R"] = vector_to_json(qt.R)
        if qt.R_inv is not None:
            obj["qt_R_inv"] = vector_to_json(qt.R_inv)
    if dual is not None:
        obj["dual_R"] = matrix_to_json(dual.R)
        if dual.R_inv is not None:
            obj["dual_R_inv"] = matrix_to_json(dual.R_inv)
    return obj


def bialgebra_from_json(obj: dict):
    """Returns ``(H, qt or None, dual or None)``."""
    def parse(obj):
        _expect_kind(obj, "bialgebra")
        allow = _allow(obj)
        d = _need(obj, "dim")
        mu = tensor_from_json(_need(obj, "mu"), allow)
        delta_t = tensor_from_json(_need(obj, "delta"), allow)
        if delta_t.shape != (d, d, d) or mu.shape != (d, d, d):
            raise SchemaError("mu and delta must be dim x dim x dim")
        delta = Matrix.from_entries(d * d, d, {(j * d + k, i): delta_t[i, j, k]
                                               for i in range(d) for j in range(d) for k in range(d)})
        H = Bialgebra(mu, vector_from_json(_need(obj, "unit"), allow), delta,
                      vector_from_json(_need(obj, "counit"), allow),
                      tuple(obj["basis"]) if obj.get("basis") else None)
        qt = dual = None
        if "qt_R" in obj:
            R = vector_from_json(obj["qt_R"], allow)
            if len(R) != d * d:
                raise SchemaError(f"qt_R must have length {d*d}")
            R_inv = vector_from_json(obj["qt_R_inv"], allow) if "qt_R_inv" in obj else None
            qt = QTStructure(R, R_inv)
        if "dual_R" in obj:
            R = matrix_from_json(obj["dual_R"], allow)
            if R.shape != (d, d):
                raise SchemaError(f"dual_R must be {d}x{d}")
            R_inv = matrix_from_json(obj["dual_R_inv"], allow) if "dual_R_inv" in obj else None
            dual = DualQTStructure(R, R_inv)
        return H, qt, dual
    return _wrap(parse, obj)


def module_to_json(M: HModule, bialgebra: dict | None = None) -> dict:
    obj = {"kind": "module", "dim": M.dim, "field": field_of(M.action, M.alpha),
           "action": tensor_to_json(M.action)}
    if M.alpha is not None:
        obj["alpha"] = matrix_to_json(M.alpha)
    if bialgebra is not None:
        obj["bialgebra"] = bialgebra
    return obj


def comodule_to_json(C: HComodule, bialgebra: dict | None = None) -> dict:
    obj = {"kind": "comodule", "dim": C.dim, "field": field_of(C.rho, C.alpha),
           "rho": matrix_to_json(C.rho)}
    if C.alpha is not None:
        obj["alpha"] = matrix_to_json(C.alpha)
    if bialgebra is not None:
        obj["bialgebra"] = bialgebra
    return obj


def module_from_json(obj: dict):
    """Returns ``(module or comodule, embedded bialgebra triple or None)``."""
    def parse(obj):
        kind = _expect_kind(obj, "module", "comodule")
        allow = _allow(obj)
        alpha = matrix_from_json(obj["alpha"], allow) if "alpha" in obj else None
        if kind == "module":
            M = HModule(tensor_from_json(_need(obj, "action"), allow), alpha)
        else:
            M = HComodule(matrix_from_json(_need(obj, "rho"), allow), alpha)
        if M.dim != _need(obj, "dim"):
            raise SchemaError("dim does not match the structure map")
        H = bialgebra_from_json(obj["bialgebra"]) if "bialgebra" in obj else None
        return M, H
    return _wrap(parse, obj)


# -- Hom-modules and candidates ----------------------------------------------------

def hom_module_to_json(M: HomModule) -> dict:
    return {"kind": "hom-module", "dim": M.dim, "field": field_of(M.alpha),
            "alpha": matrix_to_json(M.alpha)}


def hom_module_from_json(obj: dict) -> HomModule:
    """Accepts a ``hom-module`` or anything else carrying an ``alpha`` matrix."""
    def parse(obj):
        alpha = matrix_from_json(_need(obj, "alpha"), _allow(obj))
        return HomModule(alpha.rows, alpha)
    return _wrap(parse, obj)


def candidate_to_json(c: HybeCandidate) -> dict:
    return {"kind": "hybe-candidate", "dim": c.dim, "field": field_of(c.B, c.alpha),
            "B": matrix_to_json(c.B), "alpha": matrix_to_json(c.alpha)}


def candidate_from_json(obj: dict) -> HybeCandidate:
    def parse(obj):
        _expect_kind(obj, "hybe-candidate")
        allow = _allow(obj)
        c = HybeCandidate(matrix_from_json(_need(obj, "B"), allow),
                          matrix_from_json(_need(obj, "alpha"), allow))
        if c.dim != _need(obj, "dim"):
            raise SchemaError("dim does not match alpha")
        return c
    return _wrap(parse, obj)
