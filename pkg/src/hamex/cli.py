"""hamex command line. Results go to stdout (one value per line or JSON);
diagnostics go to stderr. Exit status: 0 ok, 1 verification mismatch, 2 usage."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import ConvergenceError, PreconditionError
from .families import FamilyRangeError, FamilySpec, alt_clique_formula, build_family, family_value
from .graph import Graph, Graph6Error, GraphError, from_graph6, to_graph6
from .hamilton import HamProperty, closure, has_property
from .parameters import ParameterId, check_feasibility
from .reduction import certificate_problems, reduce
from .sweep import (EXHAUSTIVE_CEILING, SweepError, SweepSpec, csv_summary, connected_graphs, ingest_graph6,
                    verify_erdos, verify_theorem, verify_weak_bound)

DEFAULT_TOL = 1e-9
DEFAULT_NMAX = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_graphs(token: str) -> list[Graph]:
    inline = None
    try:
        inline = from_graph6(token)
    except Graph6Error:
        pass
    is_file = os.path.isfile(token)
    if inline is not None:
        if is_file:
            print(f"hamex: warning: {token!r} is both a file and a graph6 string; using it as graph6",
                  file=sys.stderr)
        return [inline]
    if is_file:
        graphs = list(ingest_graph6(token))
        if not graphs:
            raise UsageError(f"{token}: no graphs in file")
        return graphs
    raise UsageError(f"--in {token!r} is neither a graph6 string nor a readable file")


def _single(token: str) -> Graph:
    graphs = _read_graphs(token)
    if len(graphs) != 1:
        raise UsageError(f"expected one graph, {token} holds {len(graphs)}")
    return graphs[0]


def _fmt(value) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parameter(text: str) -> ParameterId:
    try:
        return ParameterId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _property(text: str) -> HamProperty:
    try:
        return HamProperty.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


class _Formatter(argparse.ArgumentDefaultsHelpFormatter):
    def _get_help_string(self, action):
        if action.default is None or action.default is False:
            return action.help
        return super()._get_help_string(action)


def build_parser() -> argparse.ArgumentParser:
    fmt = _Formatter
    p = _Parser(prog="hamex", description="Extremal Hamiltonicity toolkit.", formatter_class=fmt)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    param_help = "e, nk:<k>, rho or q"
    prop_help = "cycle, path or hc"

    sp = sub.add_parser("param", help="evaluate a graph parameter", formatter_class=fmt)
    sp.add_argument("--in", dest="src", required=True, help="graph6 string or file of graph6 lines")
    sp.add_argument("--parameter", type=_parameter, required=True, help=param_help)
    sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="numeric tolerance")

    sp = sub.add_parser("check", help="decide a Hamiltonian property", formatter_class=fmt)
    sp.add_argument("--in", dest="src", required=True)
    sp.add_argument("--property", type=_property, required=True, help=prop_help)

    sp = sub.add_parser("closure", help="Bondy-Chvatal t-closure as graph6", formatter_class=fmt)
    sp.add_argument("--in", dest="src", required=True)
    sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("family", help="extremal family member and its parameter value", formatter_class=fmt)
    sp.add_argument("--property", type=_property, required=True, help=prop_help)
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--parameter", type=_parameter, help=param_help + "; omit to print the graph6")
    sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="numeric tolerance")

    sp = sub.add_parser("reduce", help="Kelmans reduction certificate", formatter_class=fmt)
    sp.add_argument("--in", dest="src", required=True)
    sp.add_argument("--property", type=_property, required=True, help=prop_help)
    sp.add_argument("--k", type=_positive_int, required=True)
    sp.add_argument("--parameter", type=_parameter, default=ParameterId("e"), help=param_help)
    sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="numeric tolerance")
    sp.add_argument("--out", help="certificate path (stdout if omitted)")

    sp = sub.add_parser("feasibility", help="check the feasibility axioms on connected graphs", formatter_class=fmt)
    sp.add_argument("--parameter", type=_parameter, required=True, help=param_help)
    sp.add_argument("--nmax", type=_positive_int, default=DEFAULT_NMAX, help="largest order checked")
    sp.add_argument("--strict", action="store_true", help="require strict growth under edge addition")
    sp.add_argument("--tol", type=_positive_float, default=1e-10, help="P1 margin for spectral parameters")
    sp.add_argument("--out", help="report path (stdout if omitted)")

    sp = sub.add_parser("sweep", help="compare a sweep maximum with the family maximum", formatter_class=fmt)
    sp.add_argument("--n", type=_positive_int, required=True)
    sp.add_argument("--k", type=_positive_int, required=True)
    sp.add_argument("--property", type=_property, required=True, help=prop_help)
    sp.add_argument("--parameter", type=_parameter, required=True, help=param_help)
    sp.add_argument("--mode", choices=["auto", "theorem", "erdos", "weak"], default="auto",
                    help="auto picks weak for clique counts, theorem otherwise")
    sp.add_argument("--source", default="exhaustive",
                    help=f"'exhaustive' (n <= {EXHAUSTIVE_CEILING}) or graph6:<path>")
    sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="numeric tolerance")
    sp.add_argument("--allow-n8", action="store_true", help="permit exhaustive n = 8")
    sp.add_argument("--no-prefilter", action="store_true", help="evaluate every candidate")
    sp.add_argument("--jobs", type=_positive_int, default=None,
                    help="worker processes; falls back to $HAMEX_JOBS, then the CPU count")
    sp.add_argument("--out", help="report path (stdout if omitted)")
    sp.add_argument("--csv", help="also write a one-row CSV summary here")
    return p


def _cmd_param(a) -> int:
    for g in _read_graphs(a.src):
        print(_fmt(a.parameter.evaluate(g, min(a.tol, 1e-10))))
    return 0


def _cmd_check(a) -> int:
    for g in _read_graphs(a.src):
        print("true" if has_property(g, a.property) else "false")
    return 0


def _cmd_closure(a) -> int:
    for g in _read_graphs(a.src):
        print(to_graph6(closure(g, a.t)))
    return 0


def _cmd_family(a) -> int:
    spec = FamilySpec(a.property, a.n, a.s)
    if a.parameter is None:
        print(to_graph6(build_family(spec)))
        return 0
    value = family_value(a.parameter, spec, min(a.tol, 1e-10))
    if a.parameter.kind == "nk" and a.property is HamProperty.CYCLE:
        alt = alt_clique_formula(a.n, a.s, a.parameter.k)
        if alt != value:
            print(json.dumps({"value": value, "alt_formula": alt}))
            return 0
    print(_fmt(value))
    return 0


def _cmd_reduce(a) -> int:
    g = _single(a.src)
    cert = reduce(g, a.property, a.k, a.parameter)
    _emit(json.dumps(cert.to_json(), indent=2) + "\n", a.out)
    problems = certificate_problems(cert, tol=a.tol)
    for msg in problems:
        print(f"hamex: certificate check failed: {msg}", file=sys.stderr)
    return 1 if problems else 0


def _cmd_feasibility(a) -> int:
    report = check_feasibility(a.parameter, connected_graphs(a.nmax), strict_p1=a.strict, tol=a.tol,
                               description=f"connected labeled graphs, n <= {a.nmax}")
    data = report.to_json()
    data["nmax"] = a.nmax
    _emit(json.dumps(data, indent=2) + "\n", a.out)
    return 0 if report.passed else 1


def _cmd_sweep(a) -> int:
    mode = a.mode
    if mode == "auto":
        mode = "weak" if a.parameter.kind == "nk" else "theorem"
    jobs = a.jobs
    if mode == "erdos":
        if a.property is not HamProperty.CYCLE or a.parameter.kind != "e":
            raise UsageError("--mode erdos needs --property cycle --parameter e")
        report = verify_erdos(a.n, a.k, allow_n8=a.allow_n8, jobs=jobs, source=a.source)
        ok = report.match
    else:
        spec = SweepSpec(a.n, a.k, a.property, a.parameter, a.source, a.tol, a.allow_n8)
        if mode == "weak":
            report = verify_weak_bound(spec, prefilter=not a.no_prefilter, jobs=jobs)
            ok = report.match and report.extra["endpoint_max"]
        else:
            report = verify_theorem(spec, prefilter=not a.no_prefilter, jobs=jobs)
            ok = report.match
    _emit(report.dumps(), a.out)
    if a.csv:
        Path(a.csv).write_text(csv_summary([report]), encoding="utf-8")
    if not ok:
        print(f"hamex: mismatch: max {report.max_value} vs family {report.family.value}", file=sys.stderr)
    return 0 if ok else 1


COMMANDS = {"param": _cmd_param, "check": _cmd_check, "closure": _cmd_closure, "family": _cmd_family,
            "reduce": _cmd_reduce, "feasibility": _cmd_feasibility, "sweep": _cmd_sweep}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hamex: error: {exc}", file=sys.stderr)
        return 2
    except (Graph6Error, GraphError, FamilyRangeError, SweepError, PreconditionError, ValueError) as exc:
        print(f"hamex: error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"hamex: error: eigen-solver did not converge: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"hamex: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
