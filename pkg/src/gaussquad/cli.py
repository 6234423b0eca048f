"""
Command-line entry point.

    gaussquad verify      [--surface NAME --param k=v ... | --config FILE]
    gaussquad fit         (--surface NAME ... | --config FILE) [--expect VERDICT]
    gaussquad classify    --family quadric1|quadric2 --grid a=start:end:count,...
    gaussquad certify     --kind 1|2 --a P/Q --b P/Q [--c P/Q]
    gaussquad cross-check [--kind 1|2 --a .. --b .. --c ..]

Exit status: 0 when every check passes, 1 when a check fails, 2 for a
malformed configuration. Reports go to ``--output``, else to
``$GAUSSQUAD_OUTPUT_DIR/<command>.<format>`` when that variable is set,
else to stdout.
"""

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import crosscheck, finitetype, report
from .beltrami import identity_check
from .config import (ConfigError, build_surface, parse_grid, parse_number,
                     parse_rational, parse_surface_config)
from .exact.audit import verify_reference_fg
from .exact.feasibility import feasibility
from .surfaces import zoo

OUTPUT_DIR_ENV = "GAUSSQUAD_OUTPUT_DIR"
COMMANDS = ("verify", "fit", "classify", "certify", "cross-check")

DEFAULT_TOLERANCES = {
    "identity": 1e-8,
    "satisfy": finitetype.SATISFY_TOL,
    "fail": finitetype.FAIL_TOL,
    "operator": crosscheck.OPERATOR_TOL,
    "symbolic": crosscheck.SYMBOLIC_TOL,
}

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_CONFIG = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    surfaces: list = field(default_factory=list)
    family: str = None
    grid: dict = None
    kind: int = None
    a: object = None
    b: object = None
    c: object = None
    count: int = 100
    seed: int = finitetype.DEFAULT_SEED
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    output: str = None
    fmt: str = "json"
    workers: int = 1
    expect: str = None


# -- commands --------------------------------------------------------------

def _surface_inputs(surfaces):
    return [{"name": s.name, "kind": s.kind,
             "params": {k: v if k != "terms" else {f"{i},{j}": c for (i, j), c in v.items()}
                        for k, v in s.params.items()},
             "domain": list(s.domain)} for s in surfaces]


def _verify(cfg):
    tol = cfg.tolerances["identity"]
    results = {}
    ok = True
    for s in cfg.surfaces:
        pts = np.asarray(finitetype.sample_points(s, cfg.count, cfg.seed))
        chk = identity_check(s, pts[:, 0], pts[:, 1])
        rx, rn = chk.res_x / chk.scale_x, chk.res_n / chk.scale_n
        passed = bool(np.max(rx) <= tol and np.max(rn) <= tol)
        ok &= passed
        results[s.name] = {
            "points": len(pts),
            "res_x_max": float(np.max(chk.res_x)),
            "res_n_max": float(np.max(chk.res_n)),
            "res_x_scaled_max": float(np.max(rx)),
            "res_n_scaled_max": float(np.max(rn)),
            "mean_curvature_abs_max": float(np.max(np.abs(chk.H))),
            "passed": passed,
        }
    return ok, {"surfaces": results, "all_passed": ok}


def _fit(cfg):
    results = {}
    ok = True
    for s in cfg.surfaces:
        pts = finitetype.sample_points(s, cfg.count, cfg.seed)
        fit = finitetype.fit_lambda(s, pts, cfg.tolerances["satisfy"], cfg.tolerances["fail"])
        summary = fit.summary()
        checks = {"targets_identity_valid": fit.identity_max <= cfg.tolerances["identity"]}
        if cfg.expect:
            checks["verdict_as_expected"] = fit.verdict == cfg.expect
        summary["checks"] = checks
        ok &= all(checks.values())
        results[s.name] = summary
    return ok, {"fits": results, "all_passed": ok}


def _classify(cfg):
    rep = finitetype.classify_family(cfg.family, cfg.grid, cfg.count, cfg.seed, cfg.workers,
                                     cfg.tolerances["satisfy"], cfg.tolerances["fail"])
    ok = rep.dichotomy_holds()
    cells = {}
    for cell in rep.cells:
        key = ",".join(f"{k}={format(v, '.17g')}" for k, v in cell["params"].items())
        cells[key] = cell
    return ok, {"cells": cells, "flagged": rep.flagged, "dichotomy_holds": ok,
                "all_passed": ok}, rep


def _certify(cfg):
    cert = feasibility(cfg.kind, cfg.a, cfg.b, cfg.c)
    ok = cert.verified
    if cfg.expect:
        ok &= cert.status == cfg.expect
    out = cert.to_dict()
    out["all_passed"] = bool(ok)
    return ok, out


def _crosscheck_cases(cfg):
    if cfg.kind is not None:
        return [(cfg.kind, cfg.a, cfg.b, cfg.c)]
    F = parse_rational
    return [(1, F("2"), F("1"), F("1")), (1, F("-1"), F("-1"), F("4")),
            (2, F("1"), F("1"), None)]


def _cross_check(cfg):
    results = {}
    ok = True
    for kind, a, b, c in _crosscheck_cases(cfg):
        key = f"kind{kind}:a={a},b={b}" + (f",c={c}" if c is not None else "")
        tri = crosscheck.operator_triangulation(kind, a, b, c, count=max(cfg.count, 12), seed=cfg.seed)
        sym = crosscheck.numeric_symbolic(kind, a, b, c, seed=cfg.seed)
        entry = {"operator": tri, "symbolic": sym}
        passed = (tri["generic_vs_closed"] <= cfg.tolerances["operator"]
                  and tri.get("generic_vs_reduced", 0.0) <= cfg.tolerances["operator"]
                  and sym["max_error"] <= cfg.tolerances["symbolic"])
        if kind == 1:
            audit = verify_reference_fg(a, b, c)
            entry["audit"] = audit.to_dict()
            passed &= audit.consistent
        entry["passed"] = bool(passed)
        ok &= passed
        results[key] = entry
    return ok, {"cases": results, "all_passed": bool(ok)}


def _inputs(cfg):
    inputs = {"command": cfg.command, "seed": cfg.seed, "count": cfg.count,
              "tolerances": dict(cfg.tolerances)}
    if cfg.command in ("verify", "fit"):
        inputs["surfaces"] = _surface_inputs(cfg.surfaces)
    if cfg.command == "fit" or cfg.command == "certify":
        inputs["expect"] = cfg.expect
    if cfg.command == "classify":
        inputs.update(family=cfg.family, grid=cfg.grid, workers=cfg.workers)
    if cfg.command in ("certify", "cross-check"):
        inputs.update(kind=cfg.kind, a=cfg.a, b=cfg.b, c=cfg.c)
    return inputs


def run(cfg):
    """Execute one command; returns ``(exit_status, report_dict, text)``."""
    extra = None
    if cfg.command == "verify":
        ok, results = _verify(cfg)
    elif cfg.command == "fit":
        ok, results = _fit(cfg)
    elif cfg.command == "classify":
        ok, results, extra = _classify(cfg)
    elif cfg.command == "certify":
        ok, results = _certify(cfg)
    elif cfg.command == "cross-check":
        ok, results = _cross_check(cfg)
    else:
        raise ConfigError(f"unknown command {cfg.command!r}")
    rep = report.make_report(cfg.command, _inputs(cfg), results)
    if cfg.fmt == "csv":
        if extra is None:
            raise ConfigError("csv output is only available for classify")
        text = report.classification_csv(extra)
    else:
        text = report.dumps(rep)
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), rep, text


# -- argument parsing ------------------------------------------------------

def _add_common(p):
    p.add_argument("--count", type=int, default=None, help="sample points per surface")
    p.add_argument("--seed", type=int, default=finitetype.DEFAULT_SEED)
    p.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                   help=f"override a tolerance ({', '.join(DEFAULT_TOLERANCES)})")
    p.add_argument("--output", "-o", help="report path (default: stdout)")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")


def _add_surface(p):
    p.add_argument("--surface", help="zoo surface kind, e.g. sphere, catenoid, quadric1")
    p.add_argument("--param", action="append", default=[], metavar="K=V",
                   help="surface parameter (repeatable)")
    p.add_argument("--config", help="surface definition file")


def _add_quadric(p, required):
    p.add_argument("--kind", type=int, choices=(1, 2), required=required)
    p.add_argument("--a", required=required, help="rational, e.g. -1 or 3/2")
    p.add_argument("--b", required=required)
    p.add_argument("--c")


def build_parser():
    parser = argparse.ArgumentParser(prog="gaussquad", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="position and Gauss-map identity residuals")
    _add_surface(p)
    _add_common(p)

    p = sub.add_parser("fit", help="least-squares fit of lap n = Lambda n")
    _add_surface(p)
    _add_common(p)
    p.add_argument("--expect", choices=("satisfies", "fails", "indeterminate"))

    p = sub.add_parser("classify", help="sweep a quadric family")
    p.add_argument("--family", choices=("quadric1", "quadric2"), required=True)
    p.add_argument("--grid", required=True, help="a=start:end:count,b=...,c=...")
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = sub.add_parser("certify", help="exact feasibility certificate")
    _add_quadric(p, required=True)
    _add_common(p)
    p.add_argument("--expect", choices=("unique", "infeasible", "underdetermined"))

    p = sub.add_parser("cross-check", help="generic vs closed-form and numeric vs exact")
    _add_quadric(p, required=False)
    _add_common(p)
    return parser


def _surfaces_from_args(args):
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read {args.config}: {exc}") from None
        return parse_surface_config(text)
    if args.surface:
        params = {}
        for kv in args.param:
            if "=" not in kv:
                raise ConfigError(f"bad --param {kv!r}; expected k=v")
            k, v = kv.split("=", 1)
            params[k.strip()] = parse_number(v)
        return [build_surface(args.surface, params)]
    return None


def config_from_args(args):
    tolerances = dict(DEFAULT_TOLERANCES)
    for kv in args.tol:
        name, _, value = kv.partition("=")
        if name not in tolerances:
            raise ConfigError(f"unknown tolerance {name!r}")
        tolerances[name] = parse_number(value)
    cfg = RunConfig(args.command, seed=args.seed, tolerances=tolerances,
                    output=args.output, fmt=args.fmt)
    if args.command in ("verify", "fit"):
        surfaces = _surfaces_from_args(args)
        if surfaces is None:
            if args.command == "fit":
                raise ConfigError("fit needs --surface or --config")
            surfaces = zoo()
        cfg.surfaces = surfaces
        cfg.expect = getattr(args, "expect", None)
    elif args.command == "classify":
        cfg.family = args.family
        cfg.grid = parse_grid(args.grid)
        cfg.workers = args.workers
        try:
            finitetype.validate_grid(cfg.family, cfg.grid)
        except finitetype.InvalidGridError as exc:
            raise ConfigError(str(exc)) from None
    else:
        if args.kind is not None:
            cfg.kind = args.kind
            if args.a is None or args.b is None:
                raise ConfigError("--a and --b are required with --kind")
            cfg.a, cfg.b = parse_rational(args.a), parse_rational(args.b)
            if args.kind == 1:
                if args.c is None:
                    raise ConfigError("kind 1 needs --c")
                cfg.c = parse_rational(args.c)
                if cfg.a * cfg.b == 0 or cfg.c <= 0:
                    raise ConfigError("kind 1 needs a*b != 0 and c > 0")
            elif cfg.a <= 0 or cfg.b <= 0:
                raise ConfigError("kind 2 needs a, b > 0")
        elif args.command == "certify":
            raise ConfigError("certify needs --kind")
        cfg.expect = getattr(args, "expect", None)
    if args.count is not None:
        if args.count < finitetype.MIN_POINTS:
            raise ConfigError(f"--count must be at least {finitetype.MIN_POINTS}")
        cfg.count = args.count
    elif args.command == "classify":
        cfg.count = 60
    elif args.command == "cross-check":
        cfg.count = 200
    if cfg.fmt == "csv" and cfg.command != "classify":
        raise ConfigError("csv output is only available for classify")
    return cfg


def _write(cfg, text):
    path = cfg.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        path = Path(os.environ[OUTPUT_DIR_ENV]) / f"{cfg.command}.{cfg.fmt}"
    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        status, _, text = run(cfg)
    except ConfigError as exc:
        print(f"gaussquad: error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    _write(cfg, text)
    return status


if __name__ == "__main__":
    sys.exit(main())
