"""JSON wire format for matrices and reports.

Entries are always rational *strings* (``"p/q"`` or ``"p"``) so nothing is
lost to floating point.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Any

from .matrix import Matrix
from .scalar import GaussianRational, parse_rational

__all__ = [
    "ParseError",
    "matrix_to_json",
    "matrix_from_json",
    "parse_matrix_file",
    "write_matrix_file",
    "dumps",
    "write_json_atomic",
]


class ParseError(ValueError):
    pass


def matrix_to_json(M: Matrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[v.to_json() for v in row] for row in M.tolist()],
    }


def _parse_entry(entry: Any, where: str) -> GaussianRational:
    if not isinstance(entry, dict):
        raise ParseError(f"{where}: entry must be an object with 're' and 'im'")
    extra = set(entry) - {"re", "im"}
    if extra:
        raise ParseError(f"{where}: unexpected keys {sorted(extra)}")
    try:
        re_ = parse_rational(entry.get("re", "0"))
        im_ = parse_rational(entry.get("im", "0"))
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None
    return GaussianRational(re_, im_)


def matrix_from_json(obj: Any, source: str = "<json>") -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: top level must be an object")
    for key in ("rows", "cols", "entries"):
        if key not in obj:
            raise ParseError(f"{source}: missing field {key!r}")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise ParseError(f"{source}: rows and cols must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"{source}: expected {rows} entry rows, got "
                         f"{len(entries) if isinstance(entries, list) else type(entries).__name__}")
    data = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{source}: row {i} must have {cols} entries")
        data.append([_parse_entry(e, f"{source}: entry [{i}][{j}]") for j, e in enumerate(row)])
    return Matrix(data)


def parse_matrix_file(path: str | os.PathLike) -> Matrix:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return matrix_from_json(obj, str(path))


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def write_json_atomic(path: str | os.PathLike, obj: Any) -> None:
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".ginv-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dumps(obj))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_matrix_file(path: str | os.PathLike, M: Matrix) -> None:
    write_json_atomic(path, matrix_to_json(M))

