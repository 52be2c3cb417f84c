"""Scenario-driven command line.

Exit codes: 0 when every asserted check passes, 1 when one fails (an
expected failure flagged with ``--expect-fail`` counts as a pass and an
unexpected pass as a failure), 2 for configuration errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .body import body_from_spec
from .errors import RadialHomeoError
from .frame import DEFAULT_TOL, build_frame
from .maps import KINDS, MapVariant, forward, inverse
from .verify import (ProbeSequence, bepe_counterexample, continuity_probe, counterexample_frame,
                     counterexample_sequence, counterexample_table, run_all)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

_VECTOR = {"type": "array", "items": {"type": "number"}, "minItems": 1}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "dim", "body"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "dim": {"type": "integer", "minimum": 1},
        "body": {
            "oneOf": [
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["type", "constraints"],
                    "properties": {
                        "type": {"const": "polyhedral"},
                        "constraints": {
                            "type": "array",
                            "minItems": 1,
                            "items": {
                                "type": "object",
                                "additionalProperties": False,
                                "required": ["a", "b"],
                                "properties": {
                                    "a": _VECTOR,
                                    "b": {"type": "number", "exclusiveMinimum": 0},
                                },
                            },
                        },
                    },
                },
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["type", "kind"],
                    "properties": {
                        "type": {"const": "smooth"},
                        "kind": {"enum": ["parabolic", "ellipsoid_cylinder"]},
                        "params": {"type": "object"},
                        "gauge_tolerance": {"type": "number", "exclusiveMinimum": 0},
                    },
                },
            ]
        },
        "y": _VECTOR,
        "phi": _VECTOR,
        "map": {
            "type": "object",
            "additionalProperties": False,
            "required": ["kind"],
            "properties": {
                "kind": {"enum": list(KINDS)},
                "v_scale": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
                "delta": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "tol": {"type": "number", "exclusiveMinimum": 0},
        "seed": {"type": "integer", "minimum": 0},
        "probe": {
            "type": "object",
            "additionalProperties": False,
            "required": ["base", "direction"],
            "properties": {
                "base": _VECTOR,
                "direction": _VECTOR,
                "count": {"type": "integer", "minimum": 2},
                "rule": {"enum": ["harmonic", "geometric"]},
            },
        },
    },
}


class ConfigError(Exception):
    """Bad scenario or command line; maps to exit code 2."""


@dataclass
class Scenario:
    path: str
    dim: int
    body: object
    y: np.ndarray | None
    phi: np.ndarray | None
    variant: MapVariant | None
    tol: float
    seed: int
    probe: ProbeSequence | None
    lines: dict

    def frame(self):
        if self.y is None:
            raise ConfigError(f"{self.path}:{self.lines.get('y', 1)}: scenario has no 'y'; "
                              f"a frame needs a recession direction")
        try:
            return build_frame(self.body, self.y, self.phi, self.tol)
        except RadialHomeoError as exc:
            key = "phi" if self.phi is not None and "phi" in str(exc) else "y"
            raise ConfigError(f"{self.path}:{self.lines.get(key, 1)}: {exc}") from exc


# -- parsing ------------------------------------------------------------------

def _skip_ws(text, i):
    while i < len(text) and text[i] in " \t\r\n":
        i += 1
    return i


def _locate(text, path):
    """Character offset of the value at ``path`` (object keys and list indices)."""
    decoder = json.JSONDecoder()
    i = _skip_ws(text, 0)
    for step in path:
        if text[i] == "{":
            i = _skip_ws(text, i + 1)
            while text[i] == '"':
                key, i = json.decoder.scanstring(text, i + 1)
                i = _skip_ws(text, _skip_ws(text, i) + 1)  # past ':'
                if key == step:
                    break
                _, i = decoder.raw_decode(text, i)
                i = _skip_ws(text, i)
                if text[i] == ",":
                    i = _skip_ws(text, i + 1)
            else:
                return i
        elif text[i] == "[":
            i = _skip_ws(text, i + 1)
            for _ in range(int(step)):
                _, i = decoder.raw_decode(text, i)
                i = _skip_ws(text, _skip_ws(text, i) + 1)
        else:
            return i
    return i


def _line_of(text, path):
    try:
        return text.count("\n", 0, _locate(text, list(path))) + 1
    except (ValueError, IndexError):
        return 1


def _schema_error(exc):
    # report the innermost failing branch of a oneOf
    best = jsonschema.exceptions.best_match([exc]) or exc
    path = list(best.absolute_path)
    if best.validator == "additionalProperties":
        known = best.schema.get("properties", {})
        extra = sorted(k for k in best.instance if k not in known)
        if extra:
            path.append(extra[0])
    return path, best.message


def resolve_scenario_path(name):
    """A filesystem path, or the name of a bundled scenario."""
    p = Path(name)
    if p.exists():
        return p
    root = resources.files("radialhomeo") / "scenarios"
    for candidate in (p.name, p.name + ".json"):
        bundled = root / candidate
        if bundled.is_file():
            return Path(str(bundled))
    raise ConfigError(f"{name}: no such scenario file")


def parse_scenario(path):
    """Read and validate a scenario file; raises :class:`ConfigError`."""
    p = resolve_scenario_path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"{p}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{p}:{exc.lineno}: malformed JSON: {exc.msg}") from exc
    validator = jsonschema.Draft202012Validator(SCENARIO_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        path_, msg = _schema_error(errors[0])
        where = "/".join(str(s) for s in path_) or "<root>"
        raise ConfigError(f"{p}:{_line_of(text, path_)}: {where}: {msg}")
    lines = {k: _line_of(text, [k]) for k in data}
    dim = data["dim"]
    try:
        body = body_from_spec(data["body"], dim)
    except (RadialHomeoError, ValueError, KeyError) as exc:
        raise ConfigError(f"{p}:{lines['body']}: body: {exc}") from exc
    for key in ("y", "phi"):
        if key in data and len(data[key]) != dim:
            raise ConfigError(f"{p}:{lines[key]}: {key}: expected {dim} entries, "
                              f"got {len(data[key])}")
    variant = None
    if "map" in data:
        try:
            variant = MapVariant(**data["map"])
        except RadialHomeoError as exc:
            raise ConfigError(f"{p}:{lines['map']}: map: {exc}") from exc
    probe = None
    if "probe" in data:
        spec = data["probe"]
        try:
            probe = ProbeSequence(spec["base"], spec["direction"], spec.get("count", 1000),
                                  spec.get("rule", "harmonic"), name="scenario probe")
        except RadialHomeoError as exc:
            raise ConfigError(f"{p}:{lines['probe']}: probe: {exc}") from exc
        if probe.base_point.shape[0] != dim or probe.direction.shape[0] != dim:
            raise ConfigError(f"{p}:{lines['probe']}: probe: expected {dim}-vectors")
    return Scenario(
        path=str(p), dim=dim, body=body,
        y=np.array(data["y"], dtype=np.float64) if "y" in data else None,
        phi=np.array(data["phi"], dtype=np.float64) if "phi" in data else None,
        variant=variant, tol=float(data.get("tol", DEFAULT_TOL)),
        seed=int(data.get("seed", 0)), probe=probe, lines=lines,
    )


def parse_points(spec, dim):
    """Points from a CSV file (one point per row) or inline ``"x,y,z;x,y,z"``."""
    p = Path(spec)
    if p.exists():
        rows = [r for r in csv.reader(p.read_text(encoding="utf-8").splitlines()) if r]
        if rows and not _is_numeric(rows[0]):
            rows = rows[1:]
    else:
        rows = [chunk.split(",") for chunk in spec.split(";") if chunk.strip()]
    try:
        pts = np.array([[float(v) for v in row] for row in rows], dtype=np.float64)
    except ValueError as exc:
        raise ConfigError(f"--points: {exc}") from exc
    if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] != dim:
        raise ConfigError(f"--points: expected rows of {dim} numbers")
    if not np.all(np.isfinite(pts)):
        raise ConfigError("--points: non-finite value")
    return pts


def _is_numeric(row):
    try:
        [float(v) for v in row]
    except ValueError:
        return False
    return True


# -- output -------------------------------------------------------------------

def _fmt(v):
    return f"{float(v):.17g}"


def point_table(rows, dim):
    """CSV text with columns ``n, x..., Hx..., err``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [f"x{i}" for i in range(dim)] + [f"Hx{i}" for i in range(dim)] + ["err"])
    for n, x, hx, err in rows:
        w.writerow([str(n)] + [_fmt(v) for v in x] + [_fmt(v) for v in hx] + [_fmt(err)])
    return buf.getvalue()


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _reports_json(reports):
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) + "\n"


def _errors_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "index", "error"])
    for r in reports:
        for i, e in enumerate(r.per_point_errors):
            w.writerow([r.suite_name, i, _fmt(e)])
    return buf.getvalue()


def _verdict_code(failed, expect_fail):
    if expect_fail:
        return EXIT_OK if failed else EXIT_FAIL
    return EXIT_FAIL if failed else EXIT_OK


# -- commands -----------------------------------------------------------------

def _variant(args, scenario):
    own = scenario.variant if scenario is not None else None
    if args.map:
        if own is not None and own.kind == args.map:
            return own  # keep the scenario's parameters
        try:
            return MapVariant(args.map)
        except RadialHomeoError as exc:
            raise ConfigError(f"--map: {exc}") from exc
    if own is not None:
        return own
    raise ConfigError("no map given: pass --map or add 'map' to the scenario")


def _load(args):
    if not args.scenario:
        raise ConfigError("a scenario file is required")
    sc = parse_scenario(args.scenario)
    if args.tol is not None:
        if not args.tol > 0:
            raise ConfigError("--tol must be > 0")
        sc.tol = args.tol
    if args.seed is not None:
        sc.seed = args.seed
    return sc


def cmd_classify(args):
    sc = _load(args)
    print(sc.body.classify())
    return EXIT_OK


def _map_points(args, fn_a, fn_b):
    sc = _load(args)
    if not args.points:
        raise ConfigError("--points is required")
    variant = _variant(args, sc)
    frame = sc.frame()
    pts = parse_points(args.points, sc.dim)
    rows = []
    for n, x in enumerate(pts, start=1):
        hx = fn_a(variant, frame, x)
        rows.append((n, x, hx, float(np.linalg.norm(fn_b(variant, frame, hx) - x))))
    _emit(point_table(rows, sc.dim), args.out)
    return EXIT_OK


def cmd_eval(args):
    return _map_points(args, forward, inverse)


def cmd_inverse(args):
    return _map_points(args, inverse, forward)


def cmd_probe(args):
    sc = _load(args)
    variant = _variant(args, sc)
    frame = sc.frame()
    probe = sc.probe
    if probe is None:
        raise ConfigError(f"{sc.path}: scenario has no 'probe' section")
    if args.count is not None:
        probe = ProbeSequence(probe.base_point, probe.direction, args.count, probe.rule, probe.name)
    report = continuity_probe(variant, frame, probe)
    print(report.summary(), file=sys.stderr)
    _emit(_reports_json([report]), args.out)
    if args.csv:
        _emit_csv(args.csv, _errors_csv([report]))
    return _verdict_code(not report.passed, args.expect_fail)


def _emit_csv(path, text):
    Path(path).write_text(text, encoding="utf-8")


def cmd_counterexample(args):
    rows = counterexample_table(args.n_max)
    _emit(point_table(rows, 3), args.out)
    repro = bepe_counterexample(args.n_max)
    cont = continuity_probe(MapVariant.bepe(), counterexample_frame(),
                            counterexample_sequence(args.n_max))
    print(repro.summary(), file=sys.stderr)
    print(cont.summary(), file=sys.stderr)
    if not repro.passed:
        return EXIT_FAIL
    code = _verdict_code(not cont.passed, args.expect_fail)
    if args.expect_fail and code == EXIT_OK:
        print("expected discontinuity reproduced", file=sys.stderr)
    return code


def cmd_suite(args):
    sc = _load(args)
    variant = _variant(args, sc)
    frame = sc.frame()
    reports = run_all(variant, frame, sc.seed, args.samples)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    _emit(_reports_json(reports), args.out)
    if args.csv:
        _emit_csv(args.csv, _errors_csv(reports))
    asserted_fail = any(r.asserted and not r.passed for r in reports)
    any_fail = any(not r.passed for r in reports)
    if args.expect_fail:
        return EXIT_OK if any_fail else EXIT_FAIL
    return EXIT_FAIL if asserted_fail else EXIT_OK


def cmd_grid(args):
    sc = _load(args)
    variant = _variant(args, sc)
    frame = sc.frame()
    if args.steps < 2:
        raise ConfigError("--steps must be at least 2")
    axis = np.linspace(-args.half_width, args.half_width, args.steps)
    mesh = np.meshgrid(*([axis] * sc.dim), indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    rows = []
    for n, x in enumerate(pts, start=1):
        hx = forward(variant, frame, x)
        rows.append((n, x, hx, float(np.linalg.norm(inverse(variant, frame, hx) - x))))
    _emit(point_table(rows, sc.dim), args.out)
    return EXIT_OK


COMMANDS = {
    "classify": (cmd_classify, "print the classification case of the body"),
    "eval": (cmd_eval, "map points forward"),
    "inverse": (cmd_inverse, "map points through the inverse"),
    "probe": (cmd_probe, "run the continuity probe configured in the scenario"),
    "counterexample": (cmd_counterexample, "reproduce the discontinuous recipe on R^3"),
    "suite": (cmd_suite, "run every verification suite for the scenario"),
    "grid": (cmd_grid, "sample a lattice and write (x, H(x)) rows"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="radialhomeo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        if name != "counterexample":
            p.add_argument("scenario_pos", nargs="?", metavar="SCENARIO",
                           help="scenario file or bundled scenario name")
            p.add_argument("--scenario", help="scenario file (alternative to the positional)")
            p.add_argument("--tol", type=float, help="override the scenario's frame tolerance")
            p.add_argument("--seed", type=int, help="override the scenario's seed")
        if name not in ("classify", "counterexample"):
            p.add_argument("--map", choices=KINDS, help="override the scenario's map")
        p.add_argument("--out", help="write the main output here instead of stdout")
        if name in ("eval", "inverse"):
            p.add_argument("--points", help="CSV file or inline 'x,y,z;x,y,z'")
        if name in ("probe", "suite", "counterexample"):
            p.add_argument("--expect-fail", action="store_true",
                           help="treat a failing verdict as the expected outcome")
        if name in ("probe", "suite"):
            p.add_argument("--csv", help="write per-point errors to this CSV file")
        if name == "probe":
            p.add_argument("--count", type=int, help="override the sequence length")
        if name == "counterexample":
            p.add_argument("--n-max", type=int, default=1000)
        if name == "suite":
            p.add_argument("--samples", type=int, default=10_000,
                           help="box samples for roundtrip and image suites")
        if name == "grid":
            p.add_argument("--steps", type=int, default=11)
            p.add_argument("--half-width", type=float, default=5.0)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    if getattr(args, "scenario_pos", None):
        if args.scenario and args.scenario != args.scenario_pos:
            print("error: scenario given twice", file=sys.stderr)
            return EXIT_CONFIG
        args.scenario = args.scenario_pos
    fn = COMMANDS[args.command][0]
    try:
        return fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RadialHomeoError as exc:
        if isinstance(exc, ValueError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        raise


if __name__ == "__main__":
    sys.exit(main())
