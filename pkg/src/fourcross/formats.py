"""Instance files.

Point sets are JSON ``{"points": [{"x": "1/2", "y": "3", "color": 0}, ...]}``
or CSV with header ``x,y,color``. Coordinates are written as exact strings
(integer or ``p/q``) and read back from integers, decimals or ``p/q``.
2COUG instances are JSON ``{"xs": [...], "ys": [...]}`` or two lines of
whitespace-separated numbers.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Optional, Union

from .core import InvalidInputError, PointSet, coord, format_coord, point
from .reductions import CougInstance


class ParseError(InvalidInputError):
    pass


def _text(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from exc
    return data


def sniff_format(text: str, filename: Optional[str] = None) -> str:
    if filename:
        lower = filename.lower()
        if lower.endswith(".json"):
            return "json"
        if lower.endswith(".csv"):
            return "csv"
    return "json" if text.lstrip().startswith("{") else "csv"


def _load_json(text: str):
    try:
        # floats are read from their decimal text, never through binary doubles
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _number(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str, Fraction)):
        raise ParseError(f"{where}: expected a number or numeric string, got {value!r}")
    try:
        return coord(value)
    except InvalidInputError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _color(value, where: str) -> int:
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParseError(f"{where}: color must be a non-negative integer, got {value!r}")
    return value


def parse_instance(data: Union[bytes, str], fmt: Optional[str] = None) -> PointSet:
    text = _text(data)
    fmt = fmt or sniff_format(text)
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_json(text: str) -> PointSet:
    doc = _load_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise ParseError('expected an object with a "points" array')
    out = []
    for i, item in enumerate(doc["points"]):
        where = f"point {i}"
        if not isinstance(item, dict):
            raise ParseError(f"{where}: expected an object")
        for field in ("x", "y", "color"):
            if field not in item:
                raise ParseError(f"{where}: missing field {field!r}")
        out.append(point(_number(item["x"], f"{where}, x"), _number(item["y"], f"{where}, y"),
                         _color(item["color"], f"{where}, color")))
    return PointSet(out)


def _parse_csv(text: str) -> PointSet:
    rows = csv.reader(io.StringIO(text))
    header = next(rows, None)
    if header is None or [h.strip().lower() for h in header] != ["x", "y", "color"]:
        raise ParseError("line 1: expected header 'x,y,color'")
    out = []
    for lineno, row in enumerate(rows, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields, got {len(row)}")
        where = f"line {lineno}"
        out.append(point(_number(row[0], f"{where}, x"), _number(row[1], f"{where}, y"),
                         _color(row[2].strip(), f"{where}, color")))
    return PointSet(out)


def serialize_instance(points, fmt: str = "json") -> bytes:
    if fmt == "json":
        doc = {"points": [{"x": format_coord(p.x), "y": format_coord(p.y), "color": p.color} for p in points]}
        return (json.dumps(doc, indent=1) + "\n").encode()
    if fmt == "csv":
        lines = ["x,y,color"]
        lines.extend(f"{format_coord(p.x)},{format_coord(p.y)},{p.color}" for p in points)
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def parse_coug(data: Union[bytes, str]) -> CougInstance:
    text = _text(data)
    if text.lstrip().startswith("{"):
        doc = _load_json(text)
        if not isinstance(doc, dict) or not all(isinstance(doc.get(f), list) for f in ("xs", "ys")):
            raise ParseError('expected an object with "xs" and "ys" arrays')
        xs = [_number(v, f"xs[{i}]") for i, v in enumerate(doc["xs"])]
        ys = [_number(v, f"ys[{i}]") for i, v in enumerate(doc["ys"])]
    else:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2:
            raise ParseError(f"expected 2 non-empty lines, got {len(lines)}")
        xs = [_number(v, f"line 1, item {i + 1}") for i, v in enumerate(lines[0].split())]
        ys = [_number(v, f"line 2, item {i + 1}") for i, v in enumerate(lines[1].split())]
    return CougInstance(tuple(xs), tuple(ys))


def serialize_coug(inst: CougInstance) -> bytes:
    doc = {"xs": [format_coord(v) for v in inst.xs], "ys": [format_coord(v) for v in inst.ys]}
    return (json.dumps(doc) + "\n").encode()
