"""JSON game and GAI files.

Game file::

    {"n": 3, "k": 2, "values": {"dense": [...]}}
    {"n": 3, "k": [2, 1, 2], "values": {"sparse": [{"x": [2, 1, 1], "v": 1.0}], "default": 0}}

GAI file::

    {"n": 3, "k": 2, "terms": [{"attrs": [1, 3], "table": [...]}]}

Dense tables are in flat order (first attribute most significant) over the
attributes' own ranges; per-attribute tops are padded to their maximum by
repeating each attribute's top level. Attribute numbers in files are 1-based.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from karyx.errors import SchemaError
from karyx.game import GaiModel, GaiTerm, KAryGame, from_gai, pad_to_common_k


def _read(source) -> Any:
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source}: invalid JSON ({exc})") from exc


def _int(doc, key, minimum):
    val = doc.get(key)
    if isinstance(val, bool) or not isinstance(val, int) or val < minimum:
        raise SchemaError(f"'{key}' must be an integer >= {minimum}, got {val!r}")
    return val


def _tops(doc) -> tuple[int, ...]:
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    n = _int(doc, "n", 1)
    k = doc.get("k")
    if isinstance(k, list):
        if len(k) != n or not all(isinstance(t, int) and not isinstance(t, bool) and t >= 1 for t in k):
            raise SchemaError(f"'k' must be a list of {n} integers >= 1, got {k!r}")
        return tuple(k)
    return (_int(doc, "k", 1),) * n


def _real(val, what) -> float:
    if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
        raise SchemaError(f"{what} must be a finite number, got {val!r}")
    return float(val)


def _table(values, tops) -> np.ndarray:
    dims = tuple(t + 1 for t in tops)
    size = int(np.prod(dims))
    if not isinstance(values, dict):
        raise SchemaError("'values' must be an object with a 'dense' or 'sparse' entry")
    if "dense" in values:
        dense = values["dense"]
        if not isinstance(dense, list) or len(dense) != size:
            raise SchemaError(f"'dense' must list {size} reals")
        return np.array([_real(x, "dense entry") for x in dense]).reshape(dims)
    if "sparse" in values:
        table = np.full(dims, _real(values.get("default", 0), "'default'"))
        seen = set()
        for entry in values["sparse"]:
            if not isinstance(entry, dict) or "x" not in entry or "v" not in entry:
                raise SchemaError(f"sparse entry {entry!r} needs 'x' and 'v'")
            x = entry["x"]
            if (not isinstance(x, list) or len(x) != len(tops)
                    or not all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c <= t
                               for c, t in zip(x, tops))):
                raise SchemaError(f"sparse point {x!r} is not in the lattice")
            if tuple(x) in seen:
                raise SchemaError(f"duplicate sparse point {x}")
            seen.add(tuple(x))
            table[tuple(x)] = _real(entry["v"], "sparse value")
        return table
    raise SchemaError("'values' must contain 'dense' or 'sparse'")


def load_game(source, normalize: bool = False) -> KAryGame:
    """Read a game file (path or already-parsed dict)."""
    doc = _read(source)
    tops = _tops(doc)
    table = _table(doc.get("values"), tops)
    try:
        return pad_to_common_k(tops, table, normalize=normalize)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load_gai(source) -> GaiModel:
    doc = _read(source)
    tops = _tops(doc)
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise SchemaError("'terms' must be a list")
    parsed = []
    for term in terms:
        if not isinstance(term, dict) or not isinstance(term.get("attrs"), list) \
                or not isinstance(term.get("table"), list):
            raise SchemaError(f"GAI term {term!r} needs 'attrs' and 'table' lists")
        attrs = term["attrs"]
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in attrs):
            raise SchemaError(f"GAI attrs must be integers, got {attrs!r}")
        parsed.append(GaiTerm(tuple(a - 1 for a in attrs),
                              np.array([_real(x, "GAI table entry") for x in term["table"]])))
    try:
        return GaiModel(tops, parsed)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load_gai_game(source) -> KAryGame:
    return from_gai(load_gai(source))


def game_to_dict(v, kind: str | None = None) -> dict:
    """Dense game-file document for a game or Moebius table."""
    doc = {"n": v.shape.n, "k": v.shape.k, "values": {"dense": v.flat.tolist()}}
    if kind:
        doc["kind"] = kind
    return doc
