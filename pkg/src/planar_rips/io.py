"""Readers and writers for point clouds, graphs and complexes."""
from __future__ import annotations

import csv
import hashlib
import io
import json
from fractions import Fraction

from .complex import ComplexError, FlagComplex, Graph
from .geom import GeometryError, Point2, to_rational
from .rips import PointCloud


class ParseError(ValueError):
    pass


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _rational(text: str, where: str) -> Fraction:
    try:
        return to_rational(text)
    except GeometryError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def parse_points_csv(text: str, scale="1") -> PointCloud:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [(i + 1, r) for i, r in enumerate(rows) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty point file")
    line, header = rows[0]
    if [c.strip().lower() for c in header] != ["x", "y"]:
        raise ParseError(f"line {line}: expected header 'x,y'")
    pts = []
    for line, r in rows[1:]:
        if len(r) != 2:
            raise ParseError(f"line {line}: expected 2 fields, got {len(r)}")
        pts.append(Point2(_rational(r[0], f"line {line}"), _rational(r[1], f"line {line}")))
    if not pts:
        raise ParseError("point file has no points")
    try:
        return PointCloud(tuple(pts), to_rational(scale))
    except GeometryError as exc:
        raise ParseError(str(exc)) from exc


def parse_points_json(text: str) -> PointCloud:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError("point JSON must be an object with a 'points' list")
    pts = []
    for i, p in enumerate(data["points"]):
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise ParseError(f"point {i}: expected a pair")
        pts.append(Point2(_rational(str(p[0]), f"point {i}"), _rational(str(p[1]), f"point {i}")))
    if not pts:
        raise ParseError("point file has no points")
    try:
        return PointCloud(tuple(pts), _rational(str(data.get("r", "1")), "r"))
    except GeometryError as exc:
        raise ParseError(str(exc)) from exc


def parse_points(text: str) -> PointCloud:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_points_json(text)
    return parse_points_csv(text)


def cloud_to_json(cloud: PointCloud) -> dict:
    return {"r": str(cloud.scale), "points": [[str(p.x), str(p.y)] for p in cloud.points]}


def cloud_to_csv(cloud: PointCloud) -> str:
    return "x,y\n" + "".join(f"{p.x},{p.y}\n" for p in cloud.points)


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels:
        out["labels"] = list(g.labels)
    return out


def complex_to_json(k: FlagComplex) -> dict:
    out = graph_to_json(k.graph)
    out["facets"] = [list(f) for f in k.facets]
    return out


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError("graph JSON needs 'n' and 'edges'")
    try:
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
        if any(len(e) != 2 for e in edges):
            raise ParseError("every edge must have two endpoints")
        return Graph.from_edges(int(data["n"]), edges, data.get("labels"))
    except (TypeError, ValueError, ComplexError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def parse_complex_json(text: str) -> FlagComplex:
    """Complexes are flag complexes, so only the 1-skeleton is read back."""
    return FlagComplex(parse_graph_json(text))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
