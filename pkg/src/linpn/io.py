"""JSON documents for algebras, Lie algebras and symplectic Lie algebras.

Structure constants::

    {"dim": n, "constants": [[i, j, k, "p/q"], ...]}

zero-based, nonzero entries only, meaning the coefficient of ``e_k`` in
``e_i . e_j`` (or ``[e_i, e_j]``).  Symplectic input::

    {"lie": <structure constants>, "omega": [["p/q", ...], ...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import StructureError
from .exactmath import Mat, format_rational, parse_rational
from .lsa import AlgebraSpec, LieAlgebraSpec


class ParseError(ValueError):
    """Malformed input document."""


def _entries(doc: Any) -> tuple[int, list]:
    if not isinstance(doc, dict) or "dim" not in doc or "constants" not in doc:
        raise ParseError('expected {"dim": n, "constants": [...]}')
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError(f"bad dimension {dim!r}")
    entries = []
    seen = set()
    for item in doc["constants"]:
        if not isinstance(item, (list, tuple)) or len(item) != 4:
            raise ParseError(f"constant must be [i, j, k, value], got {item!r}")
        i, j, k, v = item
        if not all(isinstance(t, int) and not isinstance(t, bool) for t in (i, j, k)):
            raise ParseError(f"indices must be integers: {item!r}")
        if not all(0 <= t < dim for t in (i, j, k)):
            raise ParseError(f"index out of range in {item!r}")
        if (i, j, k) in seen:
            raise ParseError(f"duplicate structure constant ({i}, {j}, {k})")
        seen.add((i, j, k))
        try:
            entries.append((i, j, k, parse_rational(v)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return dim, entries


def algebra_from_json(doc: Any) -> AlgebraSpec:
    dim, entries = _entries(doc)
    return AlgebraSpec.from_entries(dim, entries)


def lie_from_json(doc: Any) -> LieAlgebraSpec:
    dim, entries = _entries(doc)
    try:
        return LieAlgebraSpec.from_entries(dim, entries)
    except StructureError as exc:
        raise ParseError(str(exc)) from None


def constants_to_json(spec: AlgebraSpec | LieAlgebraSpec) -> dict:
    return {
        "dim": spec.dim,
        "constants": [[i, j, k, format_rational(v)] for i, j, k, v in spec.entries()],
    }


def matrix_from_json(rows: Any, n: int) -> Mat:
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise ParseError(f"omega must be a dense {n}x{n} array")
    try:
        return Mat.from_rows([[parse_rational(v) for v in r] for r in rows])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def matrix_to_json(m: Mat) -> list[list[str]]:
    return [[format_rational(v) for v in m.row(i)] for i in range(m.rows)]


def symplectic_from_json(doc: Any) -> tuple[LieAlgebraSpec, Mat]:
    """Parse a symplectic input document; validity is checked by the caller."""
    if not isinstance(doc, dict) or "lie" not in doc or "omega" not in doc:
        raise ParseError('expected {"lie": ..., "omega": [[...]]}')
    lie = lie_from_json(doc["lie"])
    return lie, matrix_from_json(doc["omega"], lie.dim)


def symplectic_to_json(lie: LieAlgebraSpec, omega: Mat) -> dict:
    return {"lie": constants_to_json(lie), "omega": matrix_to_json(omega)}


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"
