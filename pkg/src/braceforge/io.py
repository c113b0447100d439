"""JSON file formats for groups, braces, solutions, and cocycle data.

group     {"order": n, "table": [[...], ...]}      row-major, 0-based
brace     {"order": n, "add": [[...]], "circle": [[...]]}
solution  {"size": n, "sigma": [[...]], "tau": [[...]]}
cocycle   {"G": group, "X": group, "action": [[...]], "pi": [...]}
"""

from __future__ import annotations

import json

import numpy as np

from .brace import SkewBrace, validate_brace
from .constructions import CocycleDatum
from .errors import ValidationFailed
from .groups import FiniteGroup, validate_group
from .ybe import Solution


def load_payload(path: str) -> dict:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except OSError as e:
        raise ValidationFailed(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ValidationFailed(f"{path} is not valid JSON: {e}") from e
    if not isinstance(payload, dict):
        raise ValidationFailed(f"{path}: top level must be a JSON object")
    return payload


def detect_kind(payload: dict) -> str:
    """Which of the four file formats a parsed object belongs to."""
    if "add" in payload and "circle" in payload:
        return "brace"
    if "sigma" in payload and "tau" in payload:
        return "solution"
    if "pi" in payload and "G" in payload and "X" in payload:
        return "cocycle"
    if "table" in payload:
        return "group"
    raise ValidationFailed("unrecognized file contents: expected group, brace, solution, or cocycle keys")


def _table(payload: dict, key: str, n: int | None = None) -> np.ndarray:
    if key not in payload:
        raise ValidationFailed(f"missing key {key!r}")
    t = np.asarray(payload[key], dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValidationFailed(f"{key!r} must be a square table")
    if n is not None and t.shape[0] != n:
        raise ValidationFailed(f"{key!r} has size {t.shape[0]}, declared order is {n}")
    return t


def _declared(payload: dict, key: str) -> int | None:
    v = payload.get(key)
    if v is not None and not isinstance(v, int):
        raise ValidationFailed(f"{key!r} must be an integer")
    return v


def group_from_payload(payload: dict) -> FiniteGroup:
    return validate_group(_table(payload, "table", _declared(payload, "order")))


def brace_from_payload(payload: dict) -> SkewBrace:
    n = _declared(payload, "order")
    return validate_brace(_table(payload, "add", n), _table(payload, "circle", n))


def solution_from_payload(payload: dict) -> Solution:
    n = _declared(payload, "size")
    return Solution(sigma=_table(payload, "sigma", n), tau=_table(payload, "tau", n))


def cocycle_from_payload(payload: dict) -> CocycleDatum:
    for key in ("G", "X"):
        if not isinstance(payload.get(key), dict):
            raise ValidationFailed(f"{key!r} must be a group object")
    G = group_from_payload(payload["G"])
    X = group_from_payload(payload["X"])
    action = _table(payload, "action", G.order)
    pi = payload.get("pi")
    if not isinstance(pi, list):
        raise ValidationFailed("'pi' must be a list")
    return CocycleDatum(G=G, X=X, action=action, pi=tuple(int(v) for v in pi))


_PARSERS = {
    "group": group_from_payload,
    "brace": brace_from_payload,
    "solution": solution_from_payload,
    "cocycle": cocycle_from_payload,
}


def load_any(path: str):
    """Parse a file into (kind, object), detecting the format from its keys."""
    payload = load_payload(path)
    kind = detect_kind(payload)
    return kind, _PARSERS[kind](payload)


def load_group(path: str) -> FiniteGroup:
    return group_from_payload(load_payload(path))


def load_brace(path: str) -> SkewBrace:
    return brace_from_payload(load_payload(path))


def load_solution(path: str) -> Solution:
    return solution_from_payload(load_payload(path))


def load_cocycle(path: str) -> CocycleDatum:
    return cocycle_from_payload(load_payload(path))


def group_payload(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": G.table.tolist()}


def brace_payload(A: SkewBrace) -> dict:
    return {"order": A.order, "add": A.add.table.tolist(), "circle": A.circle.table.tolist()}


def solution_payload(s: Solution) -> dict:
    return {"size": s.size, "sigma": s.sigma.tolist(), "tau": s.tau.tolist()}


def save_payload(path: str, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh)
        fh.write("\n")
