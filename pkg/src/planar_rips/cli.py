"""Command line entry point: build, classify, verify, homology, obstruct, realize, catalog."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .campaigns import SUITES, run_campaign
from .classify import classification_report
from .complex import ComplexError, FlagComplex
from .geom import GeometryError
from .homology import CapacityError, Field, betti_numbers, chain_complex, euler_characteristic
from .io import (ParseError, cloud_to_json, complex_to_json, dumps, parse_graph_json, parse_points,
                 sha256_bytes)
from .obstructions import CatalogEntry, catalog, find_obstruction, load_catalog
from .realizer import RealizationProblem, realize
from .rips import PointCloud, ThresholdMode, boundary_edges, build_rips

EXIT_OK = 0
EXIT_FOUND = 1          # obstruction found / realization inconclusive
EXIT_COUNTEREXAMPLE = 2
EXIT_CAPACITY = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse's own exit status 2 would collide with "counterexample"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_input(path: str) -> tuple[FlagComplex, PointCloud | None, str]:
    """Point file (CSV or JSON) or graph/complex JSON."""
    raw = _read(path)
    text = raw.decode("utf-8")
    digest = sha256_bytes(raw)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
        if isinstance(data, dict) and "n" in data:
            return FlagComplex(parse_graph_json(text)), None, digest
    cloud = parse_points(text)
    return None, cloud, digest  # type: ignore[return-value]


def _mode(args) -> ThresholdMode:
    return ThresholdMode(args.mode)


def _emit(args, payload: dict) -> None:
    if args.format == "json":
        text = dumps(payload)
    else:
        text = "".join(f"{k}: {json.dumps(v, sort_keys=True)}\n" for k, v in sorted(payload.items()))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _base(args, digest: str | None = None) -> dict:
    out = {"command": args.command, "seed": args.seed}
    if hasattr(args, "mode"):
        out["mode"] = args.mode
    if digest is not None:
        out["input_sha256"] = digest
    return out


def _complex_from(args) -> tuple[FlagComplex, PointCloud | None, str]:
    k, cloud, digest = _load_input(args.input)
    if cloud is not None:
        k = build_rips(cloud, _mode(args))
    return k, cloud, digest


def _maybe_figure(args, k: FlagComplex, cloud: PointCloud | None, boundary=None) -> None:
    if getattr(args, "figure", None) and cloud is not None:
        from .plotting import render_cloud
        render_cloud(cloud, k, args.figure, boundary if boundary is not None else boundary_edges(cloud, k))


def cmd_build(args) -> int:
    k, cloud, digest = _complex_from(args)
    out = _base(args, digest)
    out["complex"] = complex_to_json(k)
    if cloud is not None:
        out["cloud"] = cloud_to_json(cloud)
    _maybe_figure(args, k, cloud)
    _emit(args, out)
    return EXIT_OK


def cmd_classify(args) -> int:
    k, cloud, digest = _complex_from(args)
    out = _base(args, digest)
    rep = classification_report(k, cloud, _mode(args))
    out["report"] = rep
    _maybe_figure(args, k, cloud, rep.get("boundary_edges"))
    _emit(args, out)
    verdicts = rep.get("verdicts", {})
    if any(v["status"] == "counterexample" for v in verdicts.values()):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    rep = run_campaign(args.suite, args.seed, args.count, _mode(args))
    out = _base(args)
    out["report"] = rep
    _emit(args, out)
    return EXIT_OK if rep["ok"] else EXIT_COUNTEREXAMPLE


def cmd_homology(args) -> int:
    k, _, digest = _complex_from(args)
    field = Field(args.field)
    b = betti_numbers(k, field)
    out = _base(args, digest)
    out.update(b.as_dict())
    out["euler"] = euler_characteristic(k)
    out["boundary_squared_zero"] = chain_complex(k, field).composed_is_zero()
    _emit(args, out)
    return EXIT_OK


def _entries(args) -> list[CatalogEntry]:
    entries = catalog()
    if args.catalog:
        entries += load_catalog(args.catalog)
    return entries


def cmd_obstruct(args) -> int:
    k, _, digest = _complex_from(args)
    found = find_obstruction(k.graph, _entries(args))
    out = _base(args, digest)
    out["finding"] = found.as_dict(k.graph) if found else None
    _emit(args, out)
    return EXIT_FOUND if found else EXIT_OK


def _budget(text: str) -> tuple[int, int]:
    try:
        r, i = text.lower().split("x")
        return int(r), int(i)
    except ValueError as exc:
        raise UsageError(f"budget must look like RESTARTSxITERATIONS, got {text!r}") from exc


def cmd_realize(args) -> int:
    k, _, digest = _complex_from(args)
    restarts, iterations = _budget(args.budget)
    try:
        problem = RealizationProblem(k.graph, Fraction(args.eps), restarts, iterations, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    outcome = realize(problem)
    out = _base(args, digest)
    out["budget"] = [restarts, iterations]
    out["eps"] = str(problem.eps)
    out["outcome"] = outcome.as_dict()
    if getattr(args, "figure", None) and outcome.certified:
        from .plotting import render_cloud
        cloud = PointCloud(tuple(outcome.points))
        render_cloud(cloud, FlagComplex(k.graph), args.figure, [])
    _emit(args, out)
    return EXIT_OK if outcome.certified else EXIT_FOUND


def cmd_catalog(args) -> int:
    entries = _entries(args)
    out = _base(args)
    if args.action == "list":
        out["entries"] = [{"id": e.id, "n": e.graph.n, "edges": e.graph.num_edges,
                           "status": e.status.value, "provenance": e.provenance} for e in entries]
        _emit(args, out)
    else:
        text = dumps([e.as_dict() for e in entries])
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planar-rips", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, mode=True):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None, help="write output here instead of stdout")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        if mode:
            sp.add_argument("--mode", choices=[m.value for m in ThresholdMode], default="strict")

    sp = sub.add_parser("build", help="unit disk graph and Rips complex of a point file")
    sp.add_argument("input")
    sp.add_argument("--figure", help="render the cloud and its shadow boundary (svg/png)")
    common(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("classify", help="structural report for a point file or complex JSON")
    sp.add_argument("input")
    sp.add_argument("--figure", help="render the cloud and its shadow boundary (svg/png)")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="seeded campaign of theorem and lemma checks")
    sp.add_argument("suite")
    sp.add_argument("--count", type=int, default=100)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("homology", help="Betti numbers of a complex")
    sp.add_argument("input")
    sp.add_argument("--field", choices=[f.value for f in Field], default="gf2")
    common(sp)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("obstruct", help="search for a catalogued forbidden induced subgraph")
    sp.add_argument("input")
    sp.add_argument("--catalog", help="extra catalog JSON, searched after the built-ins")
    common(sp)
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("realize", help="search for a certified unit disk realization")
    sp.add_argument("input")
    sp.add_argument("--budget", default="200x2000", help="RESTARTSxITERATIONS")
    sp.add_argument("--eps", default="1/100", help="certification margin")
    sp.add_argument("--figure", help="render a certified realization (svg/png)")
    common(sp)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("catalog", help="list or export the obstruction catalog")
    sp.add_argument("action", choices=("list", "export"))
    sp.add_argument("--catalog", help="extra catalog JSON merged after the built-ins")
    common(sp, mode=False)
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 1) is not None and getattr(args, "count", 1) < 0:
        parser.error("--count must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, GeometryError, ComplexError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
