"""Command-line interface: ``avgconn <command> ...``.

Exit codes: 0 success, 1 predicate false, 2 input error, 3 search budget
exhausted (or the requested object could not be produced).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Any

from . import __version__
from . import connectivity as conn
from . import extremal, minimality, transforms, verify
from .formats import format_graph, parse_graph
from .graph import GraphError, MultiGraph, complete_bipartite, cycle, cycle_bundle, cycle_power, path

SCHEMA = 1
EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return _q(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return obj


def emit(command: str, source: str, result: Any, out=None) -> None:
    out = out or sys.stdout
    rec = {"schema": SCHEMA, "version": __version__, "command": command, "input": source, "result": _jsonable(result)}
    out.write(json.dumps(rec) + "\n")


def _human(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} (~{float(x):.6f})"


def _load(path_arg: str, fmt: str | None) -> MultiGraph:
    if path_arg == "-":
        return parse_graph(sys.stdin.read(), fmt)
    with open(path_arg) as fp:
        return parse_graph(fp.read(), fmt)


# -- commands ------------------------------------------------------------------


def cmd_compute(args) -> int:
    g = _load(args.input, args.format)
    if g.n < 2:
        raise GraphError("need at least 2 vertices")
    rep = conn.report(g, args.mode)
    if args.json:
        emit("compute", args.input, rep.to_dict())
    else:
        print(f"n={rep.n} mode={rep.mode}")
        print(f"total={rep.total}")
        print(f"average={_human(rep.average)}")
        print(f"global={rep.global_connectivity} ideal={rep.ideal}")
    return EXIT_OK


def _check(g: MultiGraph, which: str, k: int) -> tuple[bool, Any]:
    if which == "min2conn":
        w = minimality.min2conn_violation(g)
        return w is None, w
    if which == "min2edge":
        w = minimality.min2edge_violation(g)
        return w is None, w
    if which == "necklace":
        ok = minimality.is_necklace(g)
        w = None
        if not ok:
            w = minimality.min2edge_violation(g) or {"reason": "not simple and 2-connected"}
        return ok, w
    if which in ("ideal", "ideal-edge"):
        mode = "vertex" if which == "ideal" else "edge"
        bad = conn.ideal_violation(g, mode)
        if bad is None:
            return True, None
        u, v = bad
        return False, {
            "pair": [u, v],
            "local": conn.local_connectivity(g, u, v, mode),
            "min_degree": min(g.degree(u), g.degree(v)),
        }
    if which == "mink":
        ok = minimality.is_minimally_k_connected(g, k, "vertex")
        return ok, None if ok else {"reason": f"not minimally {k}-connected"}
    raise GraphError(f"unknown predicate {which!r}")


def cmd_check(args) -> int:
    g = _load(args.input, args.format)
    ok, witness = _check(g, args.predicate, args.k)
    if args.json:
        emit("check", args.input, {"predicate": args.predicate, "k": args.k, "holds": ok, "witness": witness})
    else:
        print(f"{args.predicate}: {'true' if ok else 'false'}")
        if witness:
            print(f"witness: {json.dumps(witness)}")
    return EXIT_OK if ok else EXIT_FALSE


def _construct(family: str, params: list[int], seed: int) -> MultiGraph | None:
    need = {"cycle": 1, "path": 1, "kab": 2, "cyclepower": 2, "bundle": 2, "optimal-vertex": 1, "optimal-edge": 1}
    if family not in need:
        raise GraphError(f"unknown family {family!r}")
    if len(params) != need[family]:
        raise GraphError(f"{family} takes {need[family]} integer parameter(s)")
    if family == "cycle":
        return cycle(*params)
    if family == "path":
        return path(*params)
    if family == "kab":
        return complete_bipartite(*params)
    if family == "cyclepower":
        return cycle_power(*params)
    if family == "bundle":
        return cycle_bundle(*params)
    if family == "optimal-vertex":
        return extremal.construct_optimal_vertex(params[0], seed)
    return extremal.construct_optimal_edge(params[0], seed)


def _self_verify(family: str, params: list[int], g: MultiGraph) -> dict:
    out: dict = {}
    if family in ("optimal-vertex", "optimal-edge"):
        mode = "vertex" if family == "optimal-vertex" else "edge"
        avg = conn.average_connectivity(g, mode)
        bound = extremal.exact_bound(g.n)
        out["average"] = avg
        out["bound"] = bound
        out["minimal"] = (minimality.is_minimally_2_connected if mode == "vertex"
                          else minimality.is_minimally_2_edge_connected)(g)
        out["ok"] = out["minimal"] and avg == bound
    elif family == "bundle":
        out["ideally_edge_connected"] = conn.is_ideally_edge_connected(g)
        out["ok"] = out["ideally_edge_connected"]
    elif family == "cyclepower":
        out["ideally_connected"] = conn.is_ideally_connected(g)
        out["ok"] = out["ideally_connected"]
    else:
        out["minimal"] = minimality.is_minimally_2_connected(g) if g.n >= 3 else False
        out["ok"] = True
    return out


def cmd_construct(args) -> int:
    g = _construct(args.family, args.params, args.seed)
    desc = f"{args.family} {' '.join(map(str, args.params))}"
    if g is None:
        n = args.params[0]
        row = extremal.kappa_bound(n) if args.family == "optimal-vertex" else extremal.lambda_bound(n)
        msg = f"absent: no certified extremal host for n={n} ({row.sharpness})"
        if args.json:
            emit("construct", desc, {"graph": None, "diagnostic": msg, "bound": row.to_dict()})
        else:
            print(msg, file=sys.stderr)
        return EXIT_BUDGET
    text = format_graph(g, args.format)
    check = _self_verify(args.family, args.params, g) if args.self_verify else None
    if args.json:
        emit("construct", desc, {"n": g.n, "format": args.format or ("graph6" if g.is_simple() else "edgelist"),
                                 "graph": text.strip(), "verify": check})
    else:
        sys.stdout.write(text)
        if check is not None:
            print(f"# self-verify: {json.dumps(_jsonable(check))}", file=sys.stderr)
    if check is not None and not check["ok"]:
        return EXIT_FALSE
    return EXIT_OK


BOUND_FIELDS = ["n", "mode", "general", "exact", "max_g", "optimal_s", "closed_form",
                "host", "witness", "attained", "sharpness", "verified"]


def cmd_bounds(args) -> int:
    fn = extremal.kappa_bound if args.mode == "vertex" else extremal.lambda_bound
    rows = [fn(n, construct=args.construct, seed=args.seed) for n in range(args.lo, args.hi + 1)]
    if args.json:
        for r in rows:
            emit("bounds", f"{r.n}", r.to_dict())
        return EXIT_OK
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(BOUND_FIELDS)
    for r in rows:
        d = r.to_dict()
        w.writerow([" ".join(map(str, v)) if isinstance(v, list) else ("" if v is None else v)
                    for v in (d.get(f) for f in BOUND_FIELDS)])
    return EXIT_OK


def cmd_improve(args) -> int:
    g = _load(args.input, args.format)
    res = transforms.improve_until_fixed(g, args.mode, args.limit)
    if args.json:
        emit("improve", args.input, {
            "steps": [t.to_dict() for t in res.traces],
            "fixed_point": res.fixed_point,
            "stuck": res.stuck,
            "exhausted": res.exhausted,
            "total": conn.total_connectivity(res.graph, args.mode),
            "graph": format_graph(res.graph).strip(),
        })
    else:
        start = conn.total_connectivity(g, args.mode)
        print(f"step 0: total={start}")
        for i, t in enumerate(res.traces, 1):
            print(f"step {i}: {t.name} {json.dumps(t.site)} total={t.total_after}")
        state = "fixed point" if res.fixed_point else ("step limit" if res.exhausted else "no rewrite applies")
        print(f"stopped: {state}")
        sys.stdout.write(format_graph(res.graph))
    return EXIT_BUDGET if res.exhausted else EXIT_OK


def cmd_verify(args) -> int:
    stream = None
    if args.source == "graph6":
        stream = sys.stdin.readlines() if args.input == "-" else open(args.input).readlines()
    for n in range(args.lo, args.hi + 1):
        if args.k > 2:
            rep = verify.check_conjecture(args.k, n, args.mode, stream)
            payload = rep.to_dict()
        else:
            graphs = None
            if stream is not None:
                graphs = list(verify.enumerate_graphs(verify.EnumerationJob(n, args.mode, "graph6", stream=stream)))
                if not graphs:
                    if args.json:
                        emit("verify", f"n={n}", {"n": n, "mode": args.mode, "class_size": 0})
                    else:
                        print(f"n={n}: no minimal graphs in the stream")
                    continue
            payload = verify.find_optimal(n, args.mode, graphs).to_dict()
        if args.json:
            emit("verify", f"n={n}", payload)
        else:
            print(" ".join(f"{k}={v}" for k, v in payload.items() if k != "witnesses"))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="avgconn", description="Average (edge-)connectivity of multigraphs.")
    p.add_argument("--version", action="version", version=f"avgconn {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    common.add_argument("--format", choices=["graph6", "edgelist"], default=None)
    common.add_argument("--json", action="store_true", help="line-delimited JSON output")
    common.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="local values, total and average")
    c.add_argument("input", help="graph file or - for stdin")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("check", parents=[common], help="evaluate a structural predicate")
    c.add_argument("input")
    c.add_argument("predicate", choices=["min2conn", "min2edge", "necklace", "ideal", "ideal-edge", "mink"])
    c.add_argument("-k", type=int, default=2)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", parents=[common], help="build a named family member")
    c.add_argument("family", choices=["cycle", "path", "kab", "cyclepower", "bundle", "optimal-vertex", "optimal-edge"])
    c.add_argument("params", type=int, nargs="+")
    c.add_argument("--self-verify", action="store_true")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("bounds", parents=[common], help="bound table for a range of orders")
    c.add_argument("lo", type=int)
    c.add_argument("hi", type=int)
    c.add_argument("--construct", action="store_true", help="build and verify witnesses")
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("improve", parents=[common], help="run the rewrite driver")
    c.add_argument("input")
    c.add_argument("--limit", type=int, default=None)
    c.set_defaults(func=cmd_improve)

    c = sub.add_parser("verify", parents=[common], help="exhaustive optimal-graph certificates")
    c.add_argument("lo", type=int)
    c.add_argument("hi", type=int)
    c.add_argument("--source", choices=["internal", "graph6"], default="internal")
    c.add_argument("--input", default="-", help="graph6 stream for --source graph6")
    c.add_argument("-k", type=int, default=2)
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
