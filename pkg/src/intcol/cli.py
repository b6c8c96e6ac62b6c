"""Command-line entry point: ``intcol <command> ...``.

Exit codes: 0 success or feasible, 1 verification failure, 2 infeasible or
missing prerequisite, 3 unknown (budget exhausted), 4 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as cons
from .certificates import (
    BudgetExhausted,
    Certificate,
    CertificateError,
    CertificateStore,
    InfeasibleTarget,
    complete_base,
    make_certificate,
)
from .coloring import ColoringMismatchError, EdgeColoring, graph_bounds, verify_interval
from .formats import render_coloring
from .graphs import COMPLETE, HYPERCUBE, Graph, GraphError, complete_graph, hypercube_graph, recognize_family
from .report import build_report, render
from .search import DEFAULT_NODES, DEFAULT_SECONDS, SearchBudget, Status, exact_W, exact_w, find_interval_coloring

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INFEASIBLE = 2
EXIT_UNKNOWN = 3
EXIT_BAD_INPUT = 4


class BadInput(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        return Graph.from_json(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise BadInput(f"cannot read graph {path}: {exc}") from None


def _read_coloring(path: str, g: Graph) -> EdgeColoring:
    try:
        return EdgeColoring.from_json(Path(path).read_text(), g)
    except ColoringMismatchError as exc:
        raise BadInput(f"{path}: {exc}") from None
    except (OSError, ValueError, KeyError) as exc:
        raise BadInput(f"cannot read coloring {path}: {exc}") from None


def _emit(text: str, out) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise BadInput(f"cannot write {out}: {exc}") from None


def _write_coloring(c: EdgeColoring, out, fmt: str = "json") -> None:
    verdict = verify_interval(c.graph, c)
    if not verdict:
        raise RuntimeError(f"refusing to write an invalid coloring: {verdict.message}")
    text = render_coloring(c, fmt)
    if fmt == "json":
        assert EdgeColoring.from_json(text, c.graph) == c
    _emit(text, out)


def _budget(args) -> SearchBudget:
    secs = args.seconds
    if secs is None:
        env = os.environ.get("IC_BUDGET_SECS")
        secs = float(env) if env else DEFAULT_SECONDS
    return SearchBudget(secs, args.nodes)


def _store(args) -> CertificateStore:
    return CertificateStore(args.store)


def _info(msg: str, args) -> None:
    # keep stdout clean when the payload goes there
    stream = sys.stderr if getattr(args, "out", None) in (None, "-") else sys.stdout
    print(msg, file=stream)


def cmd_gen(args) -> int:
    try:
        if args.family == COMPLETE:
            g = complete_graph(args.param)
        else:
            g = hypercube_graph(args.param)
    except GraphError as exc:
        raise BadInput(str(exc)) from None
    _emit(g.to_json() + "\n", args.out)
    _info(f"{g.family.label()}: {g.vertex_count} vertices, {g.edge_count} edges", args)
    return EXIT_OK


def _color_complete(args):
    n = args.param
    if args.method == "canonical":
        c = cons.canonical_complete_coloring(n)
        return c, 2 * n - 1, "w(K_2n) = 2n-1", []
    if args.method != "tower":
        raise BadInput(f"method {args.method!r} does not apply to complete graphs")
    fp = cons.FactorizationParams.of(n)
    if args.base:
        try:
            base = Certificate.from_json(Path(args.base).read_text()).coloring
        except (OSError, ValueError) as exc:
            raise BadInput(f"cannot load base certificate: {exc}") from None
    else:
        base = complete_base(fp.p, _store(args))
    if base is None:
        print(f"no certificate for K_{2 * fp.p} (odd part p={fp.p}); create one with "
              f"'intcol cert make complete {fp.p} --t {fp.base_target}' "
              "(make_certificate) or pass --base", file=sys.stderr)
        return None
    c, trace = cons.build_complete_tower(n, base)
    return c, fp.complete_lower_bound, f"4n-2-p-q at p={fp.p}, q={fp.q}", trace


def _color_hypercube(args):
    n = args.param
    if args.method == "dimension":
        return cons.dimension_coloring(n), n, "w(Q_n) = n", []
    if args.method != "tower":
        raise BadInput(f"method {args.method!r} does not apply to hypercubes")
    c, trace = cons.build_hypercube_tower(n)
    return c, cons.hypercube_lower_bound(n), "n(n+1)/2", trace


def cmd_color(args) -> int:
    try:
        made = _color_complete(args) if args.family == COMPLETE else _color_hypercube(args)
    except (cons.ConstructionError, GraphError) as exc:
        raise BadInput(str(exc)) from None
    if made is None:
        return EXIT_INFEASIBLE
    c, formula, label, trace = made
    if args.graph_out:
        _emit(c.graph.to_json() + "\n", args.graph_out)
    if args.cert_out:
        prov = {"kind": "construction", "method": args.method,
                "trace": [tr.to_dict() for tr in trace]}
        _emit(Certificate(c, prov).to_json() + "\n", args.cert_out)
    _write_coloring(c, args.out, args.format)
    match = "match" if c.t == formula else ("above" if c.t > formula else "MISMATCH")
    _info(f"{c.graph.family.label()} {args.method}: t = {c.t}; formula {label} = {formula} ({match})",
          args)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring, g)
    verdict = verify_interval(g, c)
    if verdict:
        print(f"ok: interval {c.t}-coloring")
        return EXIT_OK
    print(f"fail ({verdict.reason}): {verdict.message}")
    return EXIT_FAIL


def cmd_bounds(args) -> int:
    g = _read_graph(args.graph)
    report = graph_bounds(g)
    if args.json:
        print(json.dumps(report.to_dict(), indent=1))
        return EXIT_OK
    print(f"{'bound':<20} {'value':>6}  applicable")
    for b in report.bounds:
        print(f"{b.name:<20} {'-' if b.value is None else b.value:>6}  {'yes' if b.applicable else 'no'}")
    best = report.best()
    via = f" via {best.name}" if best else ""
    print(f"lower w >= {report.lower_w}; upper W <= {report.upper_W}{via} "
          "(assuming the graph is interval-colorable)")
    return EXIT_OK


def cmd_search(args) -> int:
    g = _read_graph(args.graph)
    budget = _budget(args)
    if args.t is not None:
        if args.t < 1:
            raise BadInput("--t must be positive")
        out = find_interval_coloring(g, args.t, budget, symmetry_breaking=not args.no_symmetry)
        print(f"t={args.t}: {out.status.value}")
        if args.stats:
            print(json.dumps(out.stats()))
        if out.status is Status.FEASIBLE:
            if args.out:
                _write_coloring(out.coloring, args.out, args.format)
            return EXIT_OK
        return EXIT_INFEASIBLE if out.status is Status.INFEASIBLE else EXIT_UNKNOWN

    if g.edge_count == 0:
        raise BadInput("graph has no edges")
    if args.exact_w:
        res = exact_w(g, budget)
    else:
        res = exact_W(g, budget, direction=args.direction, start=args.start)
    if args.stats:
        print(json.dumps(res.to_dict()))
    if res.value is not None:
        print(res.value)
        if args.out and res.witness is not None:
            _write_coloring(res.witness, args.out, args.format)
        return EXIT_OK
    if res.colorable is False:
        print("not interval-colorable (every t up to the ceiling exhausted)")
        return EXIT_INFEASIBLE
    lo, hi = res.bracket
    print(f"{res.which} in [{'?' if lo is None else lo}, {'?' if hi is None else hi}]")
    return EXIT_UNKNOWN


def cmd_spectrum(args) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring, g)
    if not g.is_regular():
        raise BadInput("spectrum works on regular graphs only; this graph has degrees "
                       f"{min(g.degrees)}..{max(g.degrees)}")
    if not verify_interval(g, c):
        print("input is not an interval coloring", file=sys.stderr)
        return EXIT_FAIL
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for col in cons.spectrum_colorings(c):
        path = outdir / f"t{col.t}.json"
        _write_coloring(col, str(path))
        print(path)
    return EXIT_OK


def cmd_cert(args) -> int:
    store = _store(args)
    if args.action == "list":
        for cert in store.load_all():
            kind = cert.provenance.get("kind", "?")
            print(f"{cert.key[:12]}  {cert.graph.family.label():<8} t={cert.t:<4} {kind}  {cert.created_at}")
        return EXIT_OK
    if args.action == "make":
        if args.family is None or args.param is None or args.t is None:
            raise BadInput("cert make needs FAMILY PARAM --t T")
        try:
            cert = make_certificate(args.family, args.param, args.t, _budget(args))
        except InfeasibleTarget as exc:
            print(f"infeasible: {exc}", file=sys.stderr)
            return EXIT_INFEASIBLE
        except BudgetExhausted as exc:
            print(f"unknown: {exc}", file=sys.stderr)
            return EXIT_UNKNOWN
        except (CertificateError, GraphError) as exc:
            raise BadInput(str(exc)) from None
        print(store.add(cert))
        return EXIT_OK
    # add
    if args.file:
        try:
            cert = Certificate.from_json(Path(args.file).read_text())
        except (OSError, ValueError) as exc:
            raise BadInput(f"cannot import certificate: {exc}") from None
    elif args.graph and args.coloring:
        g = recognize_family(_read_graph(args.graph))
        c = _read_coloring(args.coloring, g)
        verdict = verify_interval(g, c)
        if not verdict:
            print(f"fail ({verdict.reason}): {verdict.message}")
            return EXIT_FAIL
        cert = Certificate(c, {"kind": "imported"})
    else:
        raise BadInput("cert add needs a certificate file or --graph and --coloring")
    print(store.add(cert))
    return EXIT_OK


def _param_range(text: str) -> list[int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            a, b = text.split(sep, 1)
            return list(range(int(a), int(b) + 1))
    return [int(text)]


def cmd_report(args) -> int:
    try:
        params = _param_range(args.range)
    except ValueError:
        raise BadInput(f"bad range {args.range!r}; use e.g. 1..8") from None
    if not params or min(params) < 1:
        raise BadInput("parameters must be positive")
    budget = _budget(args) if args.oracle else None
    rows = build_report(args.family, params, _store(args), budget)
    _emit(render(rows, args.format), args.out)
    return EXIT_OK


def _add_budget_flags(p) -> None:
    p.add_argument("--seconds", type=float, default=None,
                   help=f"wall-clock limit per search (default {DEFAULT_SECONDS:g}, or $IC_BUDGET_SECS)")
    p.add_argument("--nodes", type=int, default=DEFAULT_NODES, help="node limit per search")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="intcol", description="Interval edge colorings of K_2n and Q_n.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph file (complete: vertex count; hypercube: dimension)")
    p.add_argument("family", choices=[COMPLETE, HYPERCUBE])
    p.add_argument("param", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="construct a coloring (complete: n for K_2n; hypercube: dimension)")
    p.add_argument("family", choices=[COMPLETE, HYPERCUBE])
    p.add_argument("param", type=int)
    p.add_argument("method", choices=["canonical", "dimension", "tower"])
    p.add_argument("--base", help="certificate file with the K_2p base for a complete tower")
    p.add_argument("--store", help="certificate store directory")
    p.add_argument("-o", "--out")
    p.add_argument("--graph-out", help="also write the graph file")
    p.add_argument("--cert-out", help="also write a certificate carrying the doubling trace")
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check an interval coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="upper bounds on W")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="run the exact search oracle")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--t", type=int)
    mode.add_argument("--exact-w", action="store_true")
    mode.add_argument("--exact-W", dest="exact_W", action="store_true")
    p.add_argument("--direction", choices=["down", "up"], default="down")
    p.add_argument("--start", type=int, help="first t for --direction up")
    p.add_argument("--no-symmetry", action="store_true", help="disable color-reversal symmetry breaking")
    p.add_argument("--stats", action="store_true", help="print solver statistics as JSON")
    p.add_argument("-o", "--out", help="write the witness coloring here")
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("spectrum", help="one coloring file per t from Delta to the input's t")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("out_dir")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("cert", help="certificate store: add, list, make")
    p.add_argument("action", choices=["add", "list", "make"])
    p.add_argument("family", nargs="?", choices=[COMPLETE, HYPERCUBE])
    p.add_argument("param", nargs="?", type=int, help="complete: p for K_2p; hypercube: dimension")
    p.add_argument("--t", type=int)
    p.add_argument("--file", help="certificate file to import")
    p.add_argument("--graph")
    p.add_argument("--coloring")
    p.add_argument("--store")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("report", help="construction vs formula table (complete: n for K_2n)")
    p.add_argument("family", choices=[COMPLETE, HYPERCUBE])
    p.add_argument("range", help="e.g. 1..8")
    p.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    p.add_argument("--oracle", action="store_true", help="also run exact W search per row")
    p.add_argument("--store")
    p.add_argument("-o", "--out")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
