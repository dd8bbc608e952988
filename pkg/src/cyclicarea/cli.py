"""Command-line entry point: area, decompose, verify, fuzz, solve-radius.

Exit codes: 0 success, 1 infeasible input or failed verification,
2 numeric failure, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any

from .area import cyclic_area
from .construction import PolygonSpec, circumradius_from_sides
from .errors import CyclicAreaError, InvalidSpecError, NumericError
from .fan import fan_decompose
from .verify import IDENTITIES, FuzzConfig, fuzz, verify_polygon

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- output ---------------------------------------------------------------------

def _num(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    out = format(x, ".17g")
    if not any(ch in out for ch in ".en"):
        out += ".0"
    return out


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _text(obj: Any, prefix: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{prefix}{k}:")
                lines.extend(_text(v, prefix + "  "))
            else:
                lines.append(f"{prefix}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)):
                lines.append(f"{prefix}[{i}]")
                lines.extend(_text(v, prefix + "  "))
            else:
                lines.append(f"{prefix}- {_scalar(v)}")
    else:
        lines.append(prefix + _scalar(obj))
    return lines


def _scalar(v):
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def emit(doc: dict, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(dumps(doc) + "\n")
    else:
        stream.write("\n".join(_text(doc)) + "\n")


# -- input ----------------------------------------------------------------------

def load_spec(args) -> PolygonSpec:
    if args.spec is not None and args.input is not None:
        raise UsageError("give either an input file or --spec, not both")
    if args.spec is not None:
        text = args.spec
    elif args.input is None:
        raise UsageError("an input spec file (or --spec JSON) is required")
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise InvalidSpecError(f"cannot read {args.input}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpecError(f"invalid JSON: {exc}") from exc
    if isinstance(data, list):
        data = {"kind": "side_lengths", "sides": data}
    return PolygonSpec.from_dict(data)


def _tolerances(pairs: list[str] | None) -> dict[str, float]:
    out = {}
    for item in pairs or []:
        name, sep, value = item.partition("=")
        if not sep or name not in IDENTITIES:
            raise UsageError(f"--tol expects NAME=VALUE with NAME in {', '.join(IDENTITIES)}")
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError(f"bad tolerance value {value!r}") from None
        if not out[name] > 0:
            raise UsageError(f"tolerance for {name} must be positive")
    return out


# -- commands -------------------------------------------------------------------

def cmd_area(args):
    poly = load_spec(args).build()
    fan = fan_decompose(poly, _apex(args, poly))
    area, pair = cyclic_area(fan)
    doc = {"area": area, "factor_pair": {"f1": pair.f1, "f2": pair.f2},
           "n": fan.n, "apex": fan.apex_index}
    if args.all_apices:
        sweep = [cyclic_area(fan_decompose(poly, a))[0] for a in range(len(poly))]
        doc["apex_sweep"] = [{"apex": a, "area": v} for a, v in enumerate(sweep)]
        doc["apex_spread"] = (max(sweep) - min(sweep)) / max(sweep)
    return doc, EXIT_OK


def cmd_decompose(args):
    poly = load_spec(args).build()
    fan = fan_decompose(poly, _apex(args, poly))
    m = len(poly)
    a = fan.apex_index
    triangles = []
    for j, T in enumerate(fan.splits, start=1):
        triangles.append({
            "index": j,
            "vertices": [a, (a + j) % m, (a + j + 1) % m],
            "r": T.r, "s": T.s, "t": T.t, "p": T.p, "rho": T.rho, "area": T.area,
        })
    diagonals = []
    for i in range(fan.n - 1):
        Ti, Tn = fan.splits[i], fan.splits[i + 1]
        diagonals.append({"between": [i + 1, i + 2],
                          "vertices": [a, (a + i + 2) % m],
                          "s_t": Ti.s + Ti.t, "s_r": Tn.s + Tn.r})
    return {"apex": a, "n": fan.n, "triangles": triangles, "diagonals": diagonals}, EXIT_OK


def cmd_verify(args):
    spec = load_spec(args)
    poly = spec.build()
    report = verify_polygon(poly, _tolerances(args.tol), spec.to_dict())
    doc = report.to_dict()
    doc["area"] = cyclic_area(fan_decompose(poly, 0))[0]
    return doc, EXIT_OK if report.passed else EXIT_INPUT


def cmd_fuzz(args):
    base: dict[str, Any] = {}
    if args.config is not None:
        try:
            base = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise InvalidSpecError(f"cannot read {args.config}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidSpecError(f"invalid JSON config: {exc}") from exc
        if not isinstance(base, dict):
            raise InvalidSpecError("fuzz config must be a JSON object")
        unknown = set(base) - set(FuzzConfig.__dataclass_fields__)
        if unknown:
            raise InvalidSpecError(f"unknown fuzz config fields: {sorted(unknown)}")
    for name in ("seed_start", "seed_count", "vertex_counts", "radius", "pinch", "workers"):
        v = getattr(args, name)
        if v is not None:
            base[name] = v
    if args.near_degenerate:
        base["near_degenerate"] = True
    tol = dict(base.get("tolerances", {}))
    tol.update(_tolerances(args.tol))
    base["tolerances"] = tol
    try:
        config = FuzzConfig(**base)
    except TypeError as exc:
        raise InvalidSpecError(str(exc)) from exc
    report = fuzz(config)
    return report.to_dict(), EXIT_OK if report.passed else EXIT_INPUT


def cmd_solve_radius(args):
    if args.sides:
        sides = args.sides
    else:
        spec = load_spec(args)
        if spec.kind != "side_lengths":
            raise InvalidSpecError("solve-radius needs a side_lengths spec")
        sides = spec.sides
    radius, inside = circumradius_from_sides(sides)
    return {"radius": radius, "center_inside": inside}, EXIT_OK


def _apex(args, poly):
    if not 0 <= args.apex < len(poly):
        raise UsageError(f"--apex must be in [0, {len(poly) - 1}]")
    return args.apex


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclicarea", description="Areas of convex cyclic polygons from incircle tangent lengths.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    spec_in = argparse.ArgumentParser(add_help=False)
    spec_in.add_argument("input", nargs="?", help="polygon spec JSON file ('-' for stdin)")
    spec_in.add_argument("--spec", help="inline polygon spec JSON")

    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("area", parents=[common, spec_in], help="area and factor pair")
    a.add_argument("--apex", type=int, default=0)
    a.add_argument("--all-apices", action="store_true", help="also sweep every apex")
    a.set_defaults(func=cmd_area)

    d = sub.add_parser("decompose", parents=[common, spec_in], help="fan triangles and tangent splits")
    d.add_argument("--apex", type=int, default=0)
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", parents=[common, spec_in], help="run the identity suite on one polygon")
    v.add_argument("--tol", action="append", metavar="NAME=VALUE")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fuzz", parents=[common], help="run the identity suite over a seeded grid")
    f.add_argument("--config", help="FuzzConfig JSON file")
    f.add_argument("--seed-start", type=int)
    f.add_argument("--seed-count", type=int)
    f.add_argument("--vertex-counts", type=int, nargs="+")
    f.add_argument("--radius", type=float)
    f.add_argument("--near-degenerate", action="store_true")
    f.add_argument("--pinch", type=float)
    f.add_argument("--workers", type=int)
    f.add_argument("--tol", action="append", metavar="NAME=VALUE")
    f.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("solve-radius", parents=[common, spec_in], help="circumradius from side lengths")
    s.add_argument("--sides", type=float, nargs="+")
    s.set_defaults(func=cmd_solve_radius)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"cyclicarea: error: {exc}\n")
        return EXIT_USAGE
    except CyclicAreaError as exc:
        code = EXIT_NUMERIC if isinstance(exc, NumericError) else EXIT_INPUT
        if args.format == "json":
            sys.stderr.write(dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        else:
            sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return code
    emit(doc, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
