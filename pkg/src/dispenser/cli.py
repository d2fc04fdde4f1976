"""Command-line front end: ``dispenser [options] FILE``."""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .bdd import BddManager
from .engines import (DEFAULT_MAX_MODELS, ENGINES, EngineDisagreement, ModelCapExceeded,
                      cross_check, dispensable, generate_minimal_models, make_provider)
from .formula import CnfFormula, DimacsError, parse_dimacs
from .maxsat import WeightOverflow, encode_min_ones, export_wcnf

MODES = ("dispensable", "enumerate", "check", "export-wcnf", "stats")

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dispenser",
        description="Find the variables that are 0 in every minimal model of a CNF formula.")
    p.add_argument("input", help="DIMACS CNF file, or - for standard input")
    p.add_argument("--engine", choices=ENGINES, default="bdd-direct")
    p.add_argument("--mode", choices=MODES, default="dispensable")
    p.add_argument("--max-models", type=int, default=DEFAULT_MAX_MODELS, metavar="N",
                   help="stop enumerating after N minimal models")
    p.add_argument("--order", help="BDD variable order as a comma-separated permutation of 1..n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def parse_order(text: str | None, num_vars: int) -> list[int] | None:
    if text is None:
        return None
    try:
        order = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--order must be comma-separated integers: {text!r}") from None
    if sorted(order) != list(range(1, num_vars + 1)):
        raise UsageError(f"--order must be a permutation of 1..{num_vars}")
    return order


def _set(vars_) -> str:
    return "{" + ",".join(map(str, sorted(vars_))) + "}"


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def run_dispensable(formula, args, order, out):
    report = dispensable(formula, args.engine, order=order, max_models=args.max_models)
    if args.format == "json":
        json.dump(report.as_dict(), out)
        out.write("\n")
        return EXIT_OK
    line = f"status={report.status} dispensable={_set(report.dispensable)}"
    if report.truncated:
        line += " truncated=true"
    out.write(line + "\n")
    return EXIT_OK


def run_enumerate(formula, args, order, out):
    if args.engine in ("maxsat-enum", "bdd-enum"):
        models = []
        provider = make_provider(args.engine, formula, order)
        summary = generate_minimal_models(formula, provider, models.append, cap=args.max_models)
        truncated = summary.truncated
    else:
        models = []
        dispensable(formula, args.engine, order=order, early_stop=False, models=models)
        truncated = len(models) > args.max_models
        models = models[:args.max_models]
    status = "sat" if models else "unsat"
    if args.format == "json":
        json.dump({"status": status, "engine": args.engine,
                   "models": [str(m) for m in models],
                   "num_minimal_models": None if truncated else len(models),
                   "truncated": truncated}, out)
        out.write("\n")
    else:
        for m in models:
            out.write(f"{m}\n")
        count = f" num_minimal_models={len(models)}" if not truncated else ""
        out.write(f"status={status}{count} truncated={_bool(truncated)}\n")
    return EXIT_RESOURCE if truncated else EXIT_OK


def run_check(formula, args, order, out):
    try:
        check = cross_check(formula, order=order)
        agreed = True
        reports = check.reports
    except EngineDisagreement as exc:
        agreed = False
        reports = exc.reports
        message = str(exc)
    if args.format == "json":
        json.dump({"agree": agreed,
                   "engines": {name: r.as_dict() for name, r in reports.items()}}, out)
        out.write("\n")
    else:
        out.write(f"{'engine':<12} {'status':<6} {'minimal':>8}  dispensable\n")
        for name, r in reports.items():
            out.write(f"{name:<12} {r.status:<6} {r.models_visited:>8}  {_set(r.dispensable)}\n")
        out.write(f"agreement={'yes' if agreed else 'no'}\n")
        if not agreed:
            out.write(f"disagreement: {message}\n")
    return EXIT_OK if agreed else EXIT_DISAGREE


def run_export(formula, args, order, out):
    out.write(export_wcnf(encode_min_ones(formula)))
    return EXIT_OK


def run_stats(formula, args, order, out):
    m = BddManager(formula.num_vars, order)
    f = m.compile_cnf(formula)
    mono, mini = m.monotone(f), m.minimal(f)
    stats = {
        "num_vars": formula.num_vars,
        "num_clauses": formula.num_clauses,
        "status": "unsat" if f is m.ZERO else "sat",
        "bdd_size": m.size(f),
        "monotone_size": m.size(mono),
        "minimal_size": m.size(mini),
    }
    if args.format == "json":
        json.dump(stats, out)
        out.write("\n")
    else:
        for key, value in stats.items():
            out.write(f"{key}={value}\n")
    return EXIT_OK


RUNNERS = {
    "dispensable": run_dispensable,
    "enumerate": run_enumerate,
    "check": run_check,
    "export-wcnf": run_export,
    "stats": run_stats,
}


def read_formula(path: str) -> CnfFormula:
    if path == "-":
        return parse_dimacs(sys.stdin.read())
    with open(path) as fh:
        return parse_dimacs(fh.read())


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.max_models < 1:
            raise UsageError("--max-models must be at least 1")
        formula = read_formula(args.input)
        order = parse_order(args.order, formula.num_vars)
        return RUNNERS[args.mode](formula, args, order, out)
    except (UsageError, DimacsError, OSError) as exc:
        print(f"dispenser: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (oracle.TooManyVariables, ModelCapExceeded, WeightOverflow) as exc:
        print(f"dispenser: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
