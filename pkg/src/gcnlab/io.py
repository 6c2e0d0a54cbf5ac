"""JSON node-set files: exact rationals as canonical strings, never floats."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .geometry import Line, Point, format_rational
from .nodeset import NodeSet, NodeSetError, make_node_set

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class LoadedSet:
    nodes: NodeSet
    lines: tuple[Line, ...] = ()
    blueprint: dict | None = None

    @property
    def distinguished(self) -> Line | None:
        return self.lines[0] if self.lines else None


def parse_rational(v: Any) -> Fraction:
    if isinstance(v, bool):
        raise ParseError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str) and _RATIONAL.match(v.strip()):
        try:
            return Fraction(v.strip())
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {v!r}") from None
    raise ParseError(f"not an exact rational: {v!r}")


def parse_point(v: Any) -> Point:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise ParseError(f"a point is a pair of rationals, got {v!r}")
    return Point(*(parse_rational(c) for c in v))


def parse_line(v: Any) -> Line:
    if isinstance(v, str):
        v = v.split(",")
    if not isinstance(v, (list, tuple)) or len(v) != 3:
        raise ParseError(f"a line is a triple a,b,c, got {v!r}")
    try:
        return Line(*(parse_rational(c) for c in v))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None


def to_document(X: NodeSet, lines=(), blueprint: dict | None = None) -> dict:
    doc = {"degree": X.degree, "nodes": [p.to_strings() for p in X]}
    if lines:
        doc["lines"] = [[str(c) for c in l.coefficients] for l in lines]
    if blueprint is not None:
        doc["blueprint"] = blueprint
    return doc


def from_document(doc: Any) -> LoadedSet:
    if not isinstance(doc, dict):
        raise ParseError("node-set document must be a JSON object")
    if "degree" not in doc or "nodes" not in doc:
        raise ParseError("node-set document needs 'degree' and 'nodes'")
    n = doc["degree"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"degree must be a nonnegative integer, got {n!r}")
    if not isinstance(doc["nodes"], list):
        raise ParseError("'nodes' must be a list")
    pts = [parse_point(v) for v in doc["nodes"]]
    try:
        X = make_node_set(n, pts)
    except NodeSetError as exc:
        raise ParseError(str(exc)) from None
    lines = tuple(parse_line(v) for v in doc.get("lines", []))
    bp = doc.get("blueprint")
    return LoadedSet(X, lines, bp)


def dumps(X: NodeSet, lines=(), blueprint: dict | None = None) -> str:
    return json.dumps(to_document(X, lines, blueprint), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> LoadedSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def write_node_set(path, X: NodeSet, lines=(), blueprint: dict | None = None) -> None:
    Path(path).write_text(dumps(X, lines, blueprint), encoding="utf-8")


def read_node_set(path) -> LoadedSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def format_line(l: Line) -> str:
    return ",".join(str(c) for c in l.coefficients)


def rational_str(q: Fraction) -> str:
    return format_rational(q)
