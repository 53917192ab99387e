"""JSON documents for elements, frames and jets.

All scalars are rational strings ("p/q", or "p" when the denominator is 1),
so round-trips are bit-exact.  Schemas:

* matrix: row-major nested arrays of rational strings
* bilinear: {"n": n, "coeffs": [[[...]]]} with coeffs[k][i][j]
* group element: {"group": tag, "n": n, "a": [[...]], "b"?: [[...]],
  "f": [[[...]]]}, tag in tilde2|hat2|g2|tilde21|tilde22|t1n
  (for tilde22 the keys "a" and "f" carry the (l, h) components)
* frame: {"kind": nonhol|semihol|hol|lin, "n": n, "x": [...],
  "a": [[...]], "b"?: [[...]], "f"?: [[[...]]]}
* jet: {"base": [...], "value": [...], "jac": [[...]], "hess": [[[...]]]}
"""

from __future__ import annotations

from typing import Any

from .bilinear import Bilinear
from .errors import ParseError, SingularMatrixError
from .frames import HolFrame, LinFrame, NonHolFrame, Point, SemiHolFrame
from .groups import G2, GHat2, GTilde2, GTilde21, GTilde22, T1nL1n
from .jets import Map2Jet
from .matrices import SquareMatrix
from .rational import rat_from_str, rat_to_str

GroupElement = GTilde2 | GHat2 | G2 | GTilde21 | GTilde22 | T1nL1n
Frame = NonHolFrame | SemiHolFrame | HolFrame | LinFrame

GROUP_TAGS = ("tilde2", "hat2", "g2", "tilde21", "tilde22", "t1n")
FRAME_KINDS = ("nonhol", "semihol", "hol", "lin")


def vector_to_doc(x: Point) -> list[str]:
    return [rat_to_str(e) for e in x]


def vector_from_doc(doc: Any) -> Point:
    if not isinstance(doc, list):
        raise ParseError("vector must be a JSON array")
    return tuple(rat_from_str(e) for e in doc)


def matrix_to_doc(m: SquareMatrix) -> list[list[str]]:
    return [[rat_to_str(e) for e in row] for row in m.entries]


def matrix_from_doc(doc: Any) -> SquareMatrix:
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise ParseError("matrix must be a nested JSON array")
    rows = tuple(tuple(rat_from_str(e) for e in row) for row in doc)
    try:
        return SquareMatrix(len(rows), rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def bilinear_to_doc(f: Bilinear) -> dict[str, Any]:
    return {
        "n": f.n,
        "coeffs": [[[rat_to_str(e) for e in row] for row in plane]
                   for plane in f.coeffs],
    }


def bilinear_from_doc(doc: Any) -> Bilinear:
    if not isinstance(doc, dict) or "coeffs" not in doc or "n" not in doc:
        raise ParseError("bilinear must be an object with 'n' and 'coeffs'")
    coeffs = doc["coeffs"]
    try:
        data = tuple(tuple(tuple(rat_from_str(e) for e in row) for row in plane)
                     for plane in coeffs)
        f = Bilinear(len(data), data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed bilinear coefficients: {exc}") from exc
    if f.n != doc["n"]:
        raise ParseError("bilinear 'n' field disagrees with coefficient shape")
    return f


def _coeffs_only_from_doc(doc: Any, n: int) -> Bilinear:
    try:
        data = tuple(tuple(tuple(rat_from_str(e) for e in row) for row in plane)
                     for plane in doc)
        f = Bilinear(len(data), data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed bilinear coefficients: {exc}") from exc
    if f.n != n:
        raise ParseError("bilinear shape disagrees with the document's 'n'")
    return f


def group_to_doc(el: GroupElement) -> dict[str, Any]:
    if isinstance(el, GTilde2):
        return {"group": "tilde2", "n": el.n, "a": matrix_to_doc(el.a),
                "b": matrix_to_doc(el.b),
                "f": bilinear_to_doc(el.f)["coeffs"]}
    if isinstance(el, G2):
        tag = "g2"
    elif isinstance(el, GHat2):
        tag = "hat2"
    elif isinstance(el, GTilde21):
        tag = "tilde21"
    elif isinstance(el, GTilde22):
        return {"group": "tilde22", "n": el.n, "a": matrix_to_doc(el.l),
                "f": bilinear_to_doc(el.h)["coeffs"]}
    elif isinstance(el, T1nL1n):
        tag = "t1n"
    else:
        raise ParseError(f"not a group element: {type(el).__name__}")
    return {"group": tag, "n": el.n, "a": matrix_to_doc(el.a),
            "f": bilinear_to_doc(el.f)["coeffs"]}


def group_from_doc(doc: Any) -> GroupElement:
    if not isinstance(doc, dict):
        raise ParseError("group element must be a JSON object")
    tag = doc.get("group")
    if tag not in GROUP_TAGS:
        raise ParseError(f"unknown group tag {tag!r}")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise ParseError("group element needs a positive integer 'n'")
    try:
        a = matrix_from_doc(doc["a"])
        f = _coeffs_only_from_doc(doc["f"], n)
    except KeyError as exc:
        raise ParseError(f"group element missing field {exc}") from exc
    if a.n != n:
        raise ParseError("matrix shape disagrees with the document's 'n'")
    try:
        if tag == "tilde2":
            b = matrix_from_doc(doc["b"])
            return GTilde2(a, b, f)
        if tag == "hat2":
            return GHat2(a, f)
        if tag == "g2":
            return G2(a, f)
        if tag == "tilde21":
            return GTilde21(a, f)
        if tag == "tilde22":
            return GTilde22(a, f)
        return T1nL1n(a, f)
    except KeyError as exc:
        raise ParseError(f"group element missing field {exc}") from exc
    except (ValueError, SingularMatrixError) as exc:
        raise ParseError(str(exc)) from exc


def frame_to_doc(q: Frame) -> dict[str, Any]:
    if isinstance(q, NonHolFrame):
        return {"kind": "nonhol", "n": q.n, "x": vector_to_doc(q.x),
                "a": matrix_to_doc(q.a), "b": matrix_to_doc(q.b),
                "f": bilinear_to_doc(q.f)["coeffs"]}
    if isinstance(q, SemiHolFrame):
        kind = "semihol"
    elif isinstance(q, HolFrame):
        kind = "hol"
    elif isinstance(q, LinFrame):
        return {"kind": "lin", "n": q.n, "x": vector_to_doc(q.x),
                "a": matrix_to_doc(q.a)}
    else:
        raise ParseError(f"not a frame: {type(q).__name__}")
    return {"kind": kind, "n": q.n, "x": vector_to_doc(q.x),
            "a": matrix_to_doc(q.a), "f": bilinear_to_doc(q.f)["coeffs"]}


def frame_from_doc(doc: Any) -> Frame:
    if not isinstance(doc, dict):
        raise ParseError("frame must be a JSON object")
    kind = doc.get("kind")
    if kind not in FRAME_KINDS:
        raise ParseError(f"unknown frame kind {kind!r}")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise ParseError("frame needs a positive integer 'n'")
    try:
        x = vector_from_doc(doc["x"])
        a = matrix_from_doc(doc["a"])
        if kind == "lin":
            return LinFrame(x, a)
        f = _coeffs_only_from_doc(doc["f"], n)
        if kind == "nonhol":
            b = matrix_from_doc(doc["b"])
            return NonHolFrame(x, a, b, f)
        if kind == "semihol":
            return SemiHolFrame(x, a, f)
        return HolFrame(x, a, f)
    except KeyError as exc:
        raise ParseError(f"frame missing field {exc}") from exc
    except (ValueError, SingularMatrixError) as exc:
        raise ParseError(str(exc)) from exc


def jet_to_doc(j: Map2Jet) -> dict[str, Any]:
    return {"base": vector_to_doc(j.base), "value": vector_to_doc(j.value),
            "jac": matrix_to_doc(j.jac),
            "hess": bilinear_to_doc(j.hess)["coeffs"]}


def jet_from_doc(doc: Any) -> Map2Jet:
    if not isinstance(doc, dict):
        raise ParseError("jet must be a JSON object")
    try:
        base = vector_from_doc(doc["base"])
        value = vector_from_doc(doc["value"])
        jac = matrix_from_doc(doc["jac"])
        hess = _coeffs_only_from_doc(doc["hess"], jac.n)
    except KeyError as exc:
        raise ParseError(f"jet missing field {exc}") from exc
    try:
        return Map2Jet(base, value, jac, hess)
    except (ValueError, SingularMatrixError) as exc:
        raise ParseError(str(exc)) from exc
