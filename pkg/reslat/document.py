"""Read and write JSON algebra documents."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from reslat.base import CHAIN, FinAlgebra
from reslat.exceptions import InvalidDocumentError

PathLike = Union[str, Path]


def from_data(data: Any) -> FinAlgebra:
    """Create an algebra from a decoded JSON document.

    Only the shape of the document is checked here; core.validate checks the
    axioms.
    """
    if not isinstance(data, dict):
        raise InvalidDocumentError("a document is a JSON object")
    for key in ("n", "unit", "prod"):
        if key not in data:
            raise InvalidDocumentError(f'"{key}" is required')
    if not isinstance(data["n"], int) or not isinstance(data["unit"], int):
        raise InvalidDocumentError('"n" and "unit" are integers')
    leq = data.get("leq", CHAIN)
    if isinstance(leq, str):
        if leq != CHAIN:
            raise InvalidDocumentError(f'"leq" is "{CHAIN}" or a 0/1 matrix')
    else:
        _require_rows("leq", leq, (0, 1, True, False))
    _require_rows("prod", data["prod"])
    for key in ("ld", "rd"):
        if data.get(key) is not None:
            _require_rows(key, data[key])
    return FinAlgebra.from_data(data)


def _require_rows(key: str, rows: Any, allowed=None):
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InvalidDocumentError(f'"{key}" is a list of rows')
    for row in rows:
        for value in row:
            if not isinstance(value, int):
                raise InvalidDocumentError(f'"{key}" contains {value!r}')
            if allowed is not None and value not in allowed:
                raise InvalidDocumentError(f'"{key}" contains {value!r}')


def loads(text: str) -> FinAlgebra:
    """Parse a JSON algebra document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidDocumentError(str(err)) from err
    return from_data(data)


def load(path: PathLike) -> FinAlgebra:
    """Read a JSON algebra document from a file."""
    with Path(path).open("rb") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as err:
            raise InvalidDocumentError(f"{path}: {err}") from err
    return from_data(data)


def dumps(algebra: FinAlgebra) -> str:
    """Serialize an algebra, one table row per line."""
    data: Dict[str, Any] = algebra.to_data()
    lines = ["{", f'  "n": {data["n"]},', f'  "unit": {data["unit"]},']
    lines.append(f'  "leq": {_table(data["leq"]) if data["leq"] != CHAIN else json.dumps(CHAIN)},')
    keys = [key for key in ("prod", "ld", "rd") if key in data]
    for i, key in enumerate(keys):
        separator = "," if i < len(keys) - 1 else ""
        lines.append(f'  "{key}": {_table(data[key])}{separator}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _table(rows: List[List[int]]) -> str:
    inner = ",\n    ".join(json.dumps(row) for row in rows)
    return f"[\n    {inner}\n  ]"


def dump(algebra: FinAlgebra, path: PathLike):
    """Write an algebra to a file as a JSON document."""
    Path(path).write_text(dumps(algebra), encoding="utf-8")
