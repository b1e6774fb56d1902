"""JSON point-pattern documents.

A document has exactly three fields::

    {"dimension": 1, "origin": [0], "atoms": [{"point": [0.5], "multiplicity": 1}]}
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Union

from .errors import InputError
from .measure import CountingMeasure
from .space import MetricContext

_TOP_KEYS = {"dimension", "origin", "atoms"}
_ATOM_KEYS = {"point", "multiplicity"}


def _coords(value, dimension: int, where: str) -> tuple:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of {dimension} numbers")
    if len(value) != dimension:
        raise InputError(f"{where}: expected {dimension} coordinates, got {len(value)}")
    out = []
    for k, c in enumerate(value):
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise InputError(f"{where}[{k}]: coordinate must be a number, got {c!r}")
        if not math.isfinite(c):
            raise InputError(f"{where}[{k}]: coordinate must be finite, got {c!r}")
        out.append(float(c))
    return tuple(out)


def parse_pattern(text: Union[bytes, str]) -> CountingMeasure:
    """Parse a pattern document into a coalesced :class:`CountingMeasure`."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"pattern is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("top level: expected an object")
    missing, extra = _TOP_KEYS - doc.keys(), doc.keys() - _TOP_KEYS
    if missing:
        raise InputError(f"top level: missing field(s) {sorted(missing)}")
    if extra:
        raise InputError(f"top level: unknown field(s) {sorted(extra)}")
    dim = doc["dimension"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError(f"dimension: expected a positive integer, got {dim!r}")
    ctx = MetricContext.euclidean(dim, _coords(doc["origin"], dim, "origin"))
    if not isinstance(doc["atoms"], list):
        raise InputError("atoms: expected a list")
    atoms = []
    for i, item in enumerate(doc["atoms"]):
        where = f"atoms[{i}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object")
        if item.keys() != _ATOM_KEYS:
            raise InputError(f"{where}: fields must be exactly {sorted(_ATOM_KEYS)}, got {sorted(item)}")
        mult = item["multiplicity"]
        if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise InputError(f"{where}.multiplicity: expected an integer >= 1, got {mult!r}")
        atoms.append((_coords(item["point"], dim, f"{where}.point"), mult))
    return CountingMeasure(ctx, atoms)


def pattern_to_dict(mu: CountingMeasure) -> dict:
    return {
        "dimension": mu.ctx.dimension,
        "origin": list(mu.ctx.origin),
        "atoms": [{"point": list(p), "multiplicity": w} for p, w in mu.atoms],
    }


def serialize_pattern(mu: CountingMeasure) -> str:
    return json.dumps(pattern_to_dict(mu), indent=1) + "\n"


def read_pattern(path: Union[str, Path]) -> CountingMeasure:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_pattern(data)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def write_pattern(mu: CountingMeasure, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_pattern(mu), encoding="utf-8")
