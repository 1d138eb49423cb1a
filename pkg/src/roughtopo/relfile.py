"""Reading and writing relation files.

Two formats are supported:

JSON::

    {"universe": ["a", "b"], "pairs": [["a", "b"]]}

Text: the first line lists the labels separated by whitespace, each further
non-empty line holds one pair ``x y``. Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import BinaryRelation, Universe, make_relation, make_universe
from .errors import RelationFormatError, RoughTopoError


def relation_to_dict(R: BinaryRelation) -> dict[str, Any]:
    return {"universe": list(R.universe.labels), "pairs": [list(p) for p in R.pairs()]}


def relation_from_dict(data: Any) -> BinaryRelation:
    if not isinstance(data, dict) or "universe" not in data or "pairs" not in data:
        raise RelationFormatError('expected an object with "universe" and "pairs"')
    labels = data["universe"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise RelationFormatError('"universe" must be a list of strings')
    u = make_universe(labels)
    pairs = data["pairs"]
    if not isinstance(pairs, list):
        raise RelationFormatError('"pairs" must be a list')
    for k, pair in enumerate(pairs):
        if not isinstance(pair, list) or len(pair) != 2:
            raise RelationFormatError(f"pair #{k + 1} is not a two-element list: {pair!r}")
    return make_relation(u, pairs)


def dumps_json(R: BinaryRelation) -> str:
    return json.dumps(relation_to_dict(R))


def loads_json(text: str) -> BinaryRelation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RelationFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return relation_from_dict(data)


def dumps_text(R: BinaryRelation) -> str:
    lines = [" ".join(R.universe.labels)]
    lines.extend(f"{x} {y}" for x, y in R.pairs())
    return "\n".join(lines) + "\n"


def loads_text(text: str) -> BinaryRelation:
    universe: Universe | None = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if universe is None:
            try:
                universe = make_universe(line.split())
            except RoughTopoError as exc:
                raise RelationFormatError(str(exc), lineno) from None
            continue
        fields = line.split()
        if len(fields) != 2:
            raise RelationFormatError(f"expected 'x y', got {line!r}", lineno)
        for label in fields:
            if label not in universe.labels:
                raise RelationFormatError(f"unknown label {label!r}", lineno)
        pairs.append(fields)
    if universe is None:
        raise RelationFormatError("no universe line found")
    return make_relation(universe, pairs)


def loads(text: str) -> BinaryRelation:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_text(text)


def load_relation(path: str | Path) -> BinaryRelation:
    return loads(Path(path).read_text(encoding="utf-8"))


def save_relation(R: BinaryRelation, path: str | Path, fmt: str = "json") -> None:
    text = dumps_json(R) + "\n" if fmt == "json" else dumps_text(R)
    Path(path).write_text(text, encoding="utf-8")
