"""Versioned structured-text (JSON) documents for elements and reports.

Rationals are serialized as strings ("p" or "p/q"), never as binary
floats, so every document round-trips bit-exactly.  Element terms are
sorted by (y + x, y); every report document carries the parameters that
produced it.
"""

from __future__ import annotations

import json

from .core import EndoPair, WeylElement, build_endo, format_element
from .degrees import Polygon, Weight
from .gwa import poly_str, to_graded
from .maps import DropReport
from .scalars import rat, rat_str
from .semigroup import SemigroupData
from .windows import EigenReport

ELEMENT_FORMAT = "weyl-element"
ENDO_FORMAT = "weyl-endo"
GRADED_FORMAT = "weyl-graded"
CONFIG_FORMAT = "weyl-verify-config"
VERSION = 1


class DocError(ValueError):
    """Malformed or unsupported document."""


def element_to_doc(a: WeylElement) -> dict:
    return {
        "format": ELEMENT_FORMAT,
        "version": VERSION,
        "basis": "YX",
        "terms": [
            {"y": i, "x": j, "c": rat_str(c)} for (i, j), c in a.terms()
        ],
    }


def element_from_doc(doc: dict) -> WeylElement:
    if not isinstance(doc, dict):
        raise DocError("element document must be an object")
    if doc.get("format") != ELEMENT_FORMAT:
        raise DocError(f"not an element document: {doc.get('format')!r}")
    if doc.get("version") != VERSION:
        raise DocError(f"unsupported version {doc.get('version')!r}")
    if doc.get("basis") != "YX":
        raise DocError(f"unsupported basis {doc.get('basis')!r}")
    terms = {}
    for entry in doc.get("terms", []):
        try:
            i, j, c = int(entry["y"]), int(entry["x"]), rat(entry["c"])
        except (KeyError, ValueError, TypeError) as exc:
            raise DocError(f"bad term entry {entry!r}") from exc
        if not c:
            raise DocError("zero coefficient stored in document")
        if (i, j) in terms:
            raise DocError(f"duplicate exponent pair {(i, j)}")
        terms[(i, j)] = c
    return WeylElement(terms)


def endo_to_doc(e: EndoPair) -> dict:
    return {
        "format": ENDO_FORMAT,
        "version": VERSION,
        "x": element_to_doc(e.x),
        "y": element_to_doc(e.y),
        "verified": e.verified,
    }


def endo_from_doc(doc: dict) -> EndoPair:
    if not isinstance(doc, dict) or doc.get("format") != ENDO_FORMAT:
        raise DocError("not an endomorphism document")
    if doc.get("version") != VERSION:
        raise DocError(f"unsupported version {doc.get('version')!r}")
    x = element_from_doc(doc["x"])
    y = element_from_doc(doc["y"])
    return build_endo(x, y)  # re-verify rather than trusting the flag


def graded_to_doc(a: WeylElement) -> dict:
    g = to_graded(a)
    return {
        "format": GRADED_FORMAT,
        "version": VERSION,
        "components": [
            {"n": n, "alpha": poly_str(p)} for n, p in g.items()
        ],
    }


def weight_to_doc(w: Weight) -> dict:
    return {"rho": w.rho, "eta": w.eta}


def polygon_to_doc(p: Polygon) -> dict:
    return {
        "support": [[i, j] for (i, j) in sorted(p.support)],
        "vertices": [[i, j] for (i, j) in p.vertices],
    }


def drop_report_to_doc(r: DropReport) -> dict:
    def deg(v):
        return None if v == float("-inf") else int(v)

    return {
        "format": "weyl-drop-report",
        "version": VERSION,
        "map": r.map_description,
        "weight": weight_to_doc(r.weight),
        "samples": [
            {
                "element": format_element(s.element),
                "degree": deg(s.degree),
                "image_degree": deg(s.image_degree),
                "drop": deg(s.drop),
            }
            for s in r.samples
        ],
        "constant": r.constant,
        "drop_value": r.drop_value,
    }


def eigen_report_to_doc(r: EigenReport) -> dict:
    return {
        "format": "weyl-eigen-report",
        "version": VERSION,
        "a": format_element(r.a),
        "weight": weight_to_doc(r.window.weight),
        "cap": r.window.cap,
        "candidates": [rat_str(c) for c in r.candidates],
        "found": [
            {
                "lambda": rat_str(lam),
                "dimension": len(basis),
                "basis": [format_element(u) for u in basis],
            }
            for lam, basis in r.found
        ],
    }


def semigroup_to_doc(s: SemigroupData) -> dict:
    return {
        "format": "weyl-semigroup",
        "version": VERSION,
        "generators": sorted(s.generators),
        "g": s.g,
        "gaps": sorted(s.gaps),
        "h_list": list(s.h_list),
        "mu": s.mu,
        "nu": s.nu,
        "horizon": s.horizon,
        "h_witnesses": {
            str(h): {str(g): k for g, k in sorted(combo.items())}
            for h, combo in sorted(s.h_witnesses.items())
        },
    }


def check_results_to_doc(results, config: dict) -> dict:
    return {
        "format": "weyl-verify-report",
        "version": VERSION,
        "config": config,
        "passed": all(r.passed for r in results),
        "checks": [
            {
                "name": r.name,
                "params": {k: _jsonable(v) for k, v in r.params.items()},
                "passed": r.passed,
                "witness": _jsonable(r.witness),
            }
            for r in results
        ],
    }


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        raise DocError("floating point values are not serialized")
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def load_config(doc: dict) -> dict:
    if not isinstance(doc, dict) or doc.get("format") != CONFIG_FORMAT:
        raise DocError("not a verify-config document")
    if doc.get("version") != VERSION:
        raise DocError(f"unsupported version {doc.get('version')!r}")
    if "endomorphisms" not in doc or "params" not in doc:
        raise DocError("config needs 'endomorphisms' and 'params'")
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocError(f"invalid JSON: {exc}") from exc
