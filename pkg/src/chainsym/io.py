"""JSON formats for complexes, maps, 2-cells, skeletal 2-groups and reports."""

from __future__ import annotations

import json
from pathlib import Path

from .arith import ring_from_json
from .complexes import ChainComplex, ChainMap, ComplexError, Homotopy
from .matrix import Matrix
from .modules import CoeffObject
from .skeletal import SkeletalTwoGroup
from .twocat import TwoMorphism

COMPLEX_FIELDS = {"coefficients", "window", "objects", "differentials"}


class ParseError(ValueError):
    pass


def _degree_map(obj, what):
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be an object keyed by degree")
    try:
        return {int(k): v for k, v in obj.items()}
    except ValueError as exc:
        raise ParseError(f"{what}: degree keys must be integers") from exc


def complex_from_json(obj: dict) -> ChainComplex:
    """Validate and build a complex; torsion over ZZ is put in invariant-factor form."""
    if not isinstance(obj, dict):
        raise ParseError("a complex file holds a JSON object")
    extra = set(obj) - COMPLEX_FIELDS
    if extra:
        raise ParseError(f"unknown fields {sorted(extra)}")
    if "coefficients" not in obj:
        raise ParseError("missing 'coefficients'")
    try:
        ring = ring_from_json(obj["coefficients"])
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc
    window = obj.get("window", [0, -1])
    if not (isinstance(window, list) and len(window) == 2):
        raise ParseError("'window' must be [lo, hi]")
    lo, hi = int(window[0]), int(window[1])
    objs, P, L = {}, {}, {}
    for k, o in _degree_map(obj.get("objects", {}), "objects").items():
        if not lo <= k <= hi:
            raise ParseError(f"object in degree {k} lies outside the window [{lo}, {hi}]")
        try:
            objs[k], P[k], L[k] = CoeffObject.from_json(ring, o)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"object in degree {k}: {exc}") from exc
    diffs = {}
    for k, m in _degree_map(obj.get("differentials", {}), "differentials").items():
        if not lo <= k < hi:
            raise ParseError(f"differential d_{k} lies outside the window [{lo}, {hi}]")
        try:
            M = Matrix.from_json(ring, m)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParseError(f"differential d_{k}: {exc}") from exc
        src = objs.get(k + 1)
        tgt = objs.get(k)
        ncols = src.ngens if src is not None else 0
        nrows = tgt.ngens if tgt is not None else 0
        if k + 1 in P:
            if M.ncols != P[k + 1].ncols:
                raise ParseError(f"d_{k} has {M.ncols} columns, A_{k + 1} has "
                                 f"{P[k + 1].ncols} generators")
            M = _convert(M, ring) @ _convert(L[k + 1], ring)
        if k in P:
            if M.nrows != P[k].ncols:
                raise ParseError(f"d_{k} has {M.nrows} rows, A_{k} has {P[k].ncols} generators")
            M = _convert(P[k], ring) @ M
        if (M.nrows, M.ncols) != (nrows, ncols):
            raise ParseError(f"d_{k} has shape {M.nrows}x{M.ncols}, expected {nrows}x{ncols}")
        diffs[k] = M
    try:
        return ChainComplex(ring, lo, hi, objs, diffs)
    except ComplexError as exc:
        raise ParseError(str(exc)) from exc


def _convert(M: Matrix, ring) -> Matrix:
    if M.ring == ring:
        return M
    return Matrix(ring, M.rows, M.nrows, M.ncols)


def complex_to_json(A: ChainComplex) -> dict:
    return {
        "coefficients": A.ring.to_json(),
        "window": [A.lo, A.hi],
        "objects": {str(k): A.obj(k).to_json() for k in A.degrees()},
        "differentials": {str(k): A.d(k).matrix.to_json() for k in range(A.lo, A.hi)},
    }


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc.msg}, line {exc.lineno})") from exc


def load_complex(path) -> ChainComplex:
    return complex_from_json(load_json(path))


def dump_complex(A: ChainComplex, path) -> None:
    Path(path).write_text(dumps(complex_to_json(A)) + "\n", encoding="utf-8")


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


# maps and 2-cells ----------------------------------------------------------

def _components_from_json(obj, ring):
    return {k: Matrix.from_json(ring, m) for k, m in _degree_map(obj, "components").items()}


def _components_to_json(h, degrees):
    return {str(k): h[k].matrix.to_json() for k in degrees}


def chain_map_from_json(obj, A: ChainComplex, B: ChainComplex | None = None) -> ChainMap:
    """``{"components": {k: matrix}}`` in the canonical coordinates of the complexes."""
    B = B if B is not None else A
    comps = obj.get("components", obj) if isinstance(obj, dict) else obj
    try:
        return ChainMap(A, B, _components_from_json(comps, A.ring))
    except (ComplexError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def chain_map_to_json(f: ChainMap) -> dict:
    return {"components": _components_to_json(f, f.degrees())}


def homotopy_from_json(obj, A, B=None, degree=1) -> Homotopy:
    B = B if B is not None else A
    comps = obj.get("components", obj) if isinstance(obj, dict) else obj
    try:
        return Homotopy(A, B, degree, _components_from_json(comps, A.ring))
    except (ComplexError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def homotopy_to_json(h: Homotopy) -> dict:
    return {"degree": h.degree, "components": _components_to_json(h, h.degrees())}


def two_morphism_from_json(obj, A, B=None) -> TwoMorphism:
    if not isinstance(obj, dict) or "domain" not in obj:
        raise ParseError("a 2-cell is {'domain': chain map, 'homotopy': components}")
    extra = set(obj) - {"domain", "homotopy"}
    if extra:
        raise ParseError(f"unknown fields {sorted(extra)}")
    f = chain_map_from_json(obj["domain"], A, B)
    h = homotopy_from_json(obj.get("homotopy", {}), A, B, 1)
    return TwoMorphism(f, h)


def two_morphism_to_json(t: TwoMorphism) -> dict:
    return {"domain": chain_map_to_json(t.f),
            "homotopy": _components_to_json(t.h, t.h.degrees())}


# skeletal 2-groups ---------------------------------------------------------

def skeletal_from_json(obj, check=True) -> SkeletalTwoGroup:
    try:
        return SkeletalTwoGroup.from_json(obj, check=check)
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise ParseError(f"invalid skeletal 2-group: {exc}") from exc


def skeletal_to_json(t: SkeletalTwoGroup) -> dict:
    return t.to_json()


def matrix_dict_to_json(ms: dict) -> dict:
    return {str(k): getattr(m, "matrix", m).to_json() for k, m in sorted(ms.items())}
