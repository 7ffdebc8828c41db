"""JSON family documents: {"circles": [{"x": .., "y": .., "r": ..}, ...], "tol": 1e-9}."""

from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

from .geom import DEFAULT_TOL, Circle


class DocumentError(ValueError):
    pass


def parse_family(doc) -> tuple[list[Circle], float]:
    if not isinstance(doc, dict) or not isinstance(doc.get("circles"), list):
        raise DocumentError('expected an object with a "circles" list')
    circles = []
    for k, item in enumerate(doc["circles"]):
        try:
            x, y, r = (float(item[key]) for key in ("x", "y", "r"))
        except (TypeError, KeyError, ValueError):
            raise DocumentError(f"circle {k}: needs numeric x, y, r") from None
        try:
            circles.append(Circle.at(x, y, r))
        except ValueError as exc:
            raise DocumentError(f"circle {k}: {exc}") from None
    tol = doc.get("tol", DEFAULT_TOL)
    if isinstance(tol, bool) or not isinstance(tol, (int, float)) or not math.isfinite(tol):
        raise DocumentError("tol must be a number")
    return circles, float(tol)


def load_family(path) -> tuple[list[Circle], float]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: malformed JSON ({exc.msg}, line {exc.lineno})") from None
    return parse_family(doc)


def family_document(circles, tol: float = DEFAULT_TOL) -> dict:
    return {"circles": [{"x": c.x, "y": c.y, "r": c.radius} for c in circles], "tol": tol}


def dumps(doc) -> str:
    # repr-based float output is the shortest string that round-trips exactly
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write_document(path, doc) -> None:
    Path(path).write_text(dumps(doc))


def content_name(doc, prefix: str = "counterexample") -> str:
    digest = hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()[:16]
    return f"{prefix}-{digest}.json"
