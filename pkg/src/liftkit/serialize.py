"""JSON documents for scalars, polynomials, matrices, cascades and structures.

Formats::

    scalar     "p/q+r/s*w2"          (w2 is sqrt 2)
    poly       {"lo": n, "c": [scalar, ...]}
    matrix     [[poly, poly], [poly, poly]]  or "identity" | "haar" | "lazy-causal"
    cascade    {"version": "1", "gain": scalar,
                "steps": [{"m": 0|1, "s": poly}, ...],   # steps[0] applied first
                "base": matrix}
    structure  {"gain_group": "full"|"trivial",
                "upper": {"symmetry": ..., "ring": "field"|"dyadic"},
                "lower": {...}, "bases": "IdentityOnly"|...}
"""

from __future__ import annotations

import json

from .laurent import LaurentPoly, as_scalar, parse_scalar
from .lifting import Cascade, LiftingStep
from .polyphase import HAAR, IDENTITY, LAZY_CAUSAL, PolyMatrix
from .structures import FilterGroup, GroupLiftingStructure, structure_by_name

__all__ = [
    "DocumentError",
    "NAMED_MATRICES",
    "scalar_to_json",
    "poly_to_json",
    "poly_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "cascade_to_doc",
    "cascade_from_doc",
    "structure_from_json",
    "dumps",
]

DOC_VERSION = "1"

NAMED_MATRICES = {"identity": IDENTITY, "haar": HAAR, "lazy-causal": LAZY_CAUSAL}


class DocumentError(ValueError):
    """A JSON document does not follow the expected grammar."""


def scalar_to_json(x):
    return str(as_scalar(x))


def _scalar_from_json(x):
    if isinstance(x, bool):
        raise DocumentError(f"bad scalar {x!r}")
    if isinstance(x, int):
        return as_scalar(x)
    try:
        return parse_scalar(x)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def poly_to_json(p):
    return {"lo": p.lo, "c": [str(c) for c in p.coeffs]}


def poly_from_json(obj):
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        return LaurentPoly([_scalar_from_json(obj)])
    if not isinstance(obj, dict) or set(obj) != {"lo", "c"}:
        raise DocumentError(f"bad polynomial {obj!r}")
    lo, cs = obj["lo"], obj["c"]
    if not isinstance(lo, int) or isinstance(lo, bool) or not isinstance(cs, list):
        raise DocumentError(f"bad polynomial {obj!r}")
    return LaurentPoly([_scalar_from_json(c) for c in cs], lo)


def matrix_to_json(m, named=True):
    if named:
        for name, value in NAMED_MATRICES.items():
            if m == value:
                return name
    return [[poly_to_json(x) for x in row] for row in m.rows]


def matrix_from_json(obj):
    if isinstance(obj, str):
        try:
            return NAMED_MATRICES[obj]
        except KeyError:
            raise DocumentError(f"unknown named matrix {obj!r}") from None
    if isinstance(obj, dict) and "matrix" in obj:
        return matrix_from_json(obj["matrix"])
    if (not isinstance(obj, list) or len(obj) != 2
            or not all(isinstance(r, list) and len(r) == 2 for r in obj)):
        raise DocumentError("matrix must be a 2x2 nested list or a named constant")
    return PolyMatrix([[poly_from_json(x) for x in row] for row in obj])


def cascade_to_doc(c):
    return {
        "version": DOC_VERSION,
        "gain": scalar_to_json(c.gain),
        "steps": [{"m": st.m, "s": poly_to_json(st.s)} for st in c.steps],
        "base": matrix_to_json(c.base),
    }


def cascade_from_doc(doc):
    if not isinstance(doc, dict):
        raise DocumentError("cascade document must be a JSON object")
    version = doc.get("version", DOC_VERSION)
    if version != DOC_VERSION:
        raise DocumentError(f"unsupported document version {version!r}")
    unknown = set(doc) - {"version", "gain", "steps", "base"}
    if unknown:
        raise DocumentError(f"unknown cascade fields {sorted(unknown)}")
    steps = []
    for st in doc.get("steps", []):
        if not isinstance(st, dict) or st.get("m") not in (0, 1) or "s" not in st:
            raise DocumentError(f"bad lifting step {st!r}")
        steps.append(LiftingStep(st["m"], poly_from_json(st["s"])))
    gain = _scalar_from_json(doc.get("gain", "1"))
    if not gain:
        raise DocumentError("gain must be nonzero")
    base = matrix_from_json(doc.get("base", "identity"))
    return Cascade(gain, steps, base)


def structure_from_json(obj):
    """A preset name or a four-field structure document."""
    if isinstance(obj, str):
        try:
            return structure_by_name(obj)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
    try:
        return GroupLiftingStructure(
            obj["gain_group"],
            FilterGroup(**obj["upper"]),
            FilterGroup(**obj["lower"]),
            obj["bases"],
            obj.get("name"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad structure document: {exc}") from None


def dumps(obj, pretty=False):
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=False)
