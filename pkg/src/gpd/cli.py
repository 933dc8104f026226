"""Command-line front end.

Subcommands: ``solve`` (JSON record), ``table`` (CSV sweep), ``generate``
and ``srg`` (edge lists). Data goes to stdout, diagnostics to stderr.

Exit codes: 0 ok, 2 bad input, 3 disconnected graph, 4 resource cap or
time limit, 5 witness failed ``--verify``.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from datetime import datetime, timezone

from . import __version__
from .derived import strong_d_resolving_graph
from .errors import GPDError, InputError
from .generators import FAMILIES, GadgetSpec, generate
from .graph import all_pairs_distances, format_edge_list, parse_edge_list, read_edge_list
from .solve import SolverOptions, clique_number, gp_number, gpd_bruteforce
from .verify import is_gdp_by_characterization, is_gdp_by_definition

SCHEMA = 1
EXIT_VERIFY = 5
METHOD_NAMES = {"bnb": "branch_and_bound", "branch_and_bound": "branch_and_bound", "bruteforce": "bruteforce", "greedy": "greedy"}


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise InputError(f"not a number: {text!r}") from None


def _int_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(_number(lo)), int(_number(hi))
        if lo > hi:
            raise InputError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(_number(text))]


def _split_param(item: str) -> tuple[str, str]:
    if "=" not in item:
        raise InputError(f"--param expects key=value, got {item!r}")
    key, value = item.split("=", 1)
    return key.strip(), value.strip()


def _params(items, seed=None) -> dict:
    params = {}
    for item in items or ():
        key, value = _split_param(item)
        params[key] = _number(value)
    if seed is not None:
        params["seed"] = seed
    return params


def _load(args):
    """Return ``(graph, source label)`` from a file argument or a family spec."""
    payload = None
    if args.graph is not None:
        text = sys.stdin.read() if args.graph == "-" else None
        payload = parse_edge_list(text) if text is not None else read_edge_list(args.graph)
    if args.family is None:
        if payload is None:
            raise InputError("give an edge-list file or --family")
        return payload, f"file {args.graph}"
    spec = GadgetSpec(args.family, _params(args.param, getattr(args, "seed", None)), payload)
    return generate(spec), spec.label()


def _options(args) -> SolverOptions:
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    return SolverOptions(
        bruteforce_cap=args.bruteforce_cap,
        bnb_cap=args.bnb_cap,
        workers=max(1, workers),
        time_limit_ms=args.time_limit_ms,
    )


def _verify(g, d, report, k, opts) -> bool:
    ok = is_gdp_by_definition(g, d, report.witness, k)
    if k >= 2:
        ok = ok and is_gdp_by_characterization(g, d, report.witness, k)
    ok = ok and len(report.witness) == report.value
    if ok and report.method != "bruteforce" and g.n <= 14:
        # paranoid mode: small graphs are re-solved by exhaustive enumeration
        exact = gpd_bruteforce(g, d, k, opts)
        if report.method == "greedy":
            ok = report.value <= exact.value
        else:
            ok = exact.witness == report.witness
    return ok


def cmd_solve(args, out) -> int:
    g, source = _load(args)
    d = all_pairs_distances(g)
    k = int(args.d)
    if k < 1:
        raise InputError(f"--d must be >= 1, got {k}")
    opts = _options(args)
    method = METHOD_NAMES[args.method]
    report = gp_number(g, k, method, d, opts)
    record = {
        "schema": SCHEMA,
        "command": "solve",
        "argv": args.argv,
        "input": {"source": source, "n": g.n, "m": g.m, "sha256": g.fingerprint(), "diameter": d.diameter},
        "parameters": {
            "d": k,
            "method": method,
            "workers": opts.workers,
            "time_limit_ms": opts.time_limit_ms,
            "bruteforce_cap": opts.bruteforce_cap,
            "bnb_cap": opts.bnb_cap,
            "seed": getattr(args, "seed", None),
        },
        "invariant": report.invariant,
        "value": report.value,
        "method": report.method,
        "nodes_explored": report.nodes_explored,
        "elapsed_ms": round(report.elapsed * 1000, 3),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    if args.witness:
        record["witness"] = list(report.witness)
    code = 0
    if args.verify:
        record["verified"] = _verify(g, d, report, k, opts)
        if not record["verified"]:
            print("error: witness failed verification", file=sys.stderr)
            code = EXIT_VERIFY
    out.write(json.dumps(record, sort_keys=True) + "\n")
    return code


def cmd_table(args, out) -> int:
    if args.family is None:
        raise InputError("table needs --family")
    sweeps = []
    for item in args.param or ():
        key, value = _split_param(item)
        values = _int_range(value) if key != "p" else [_number(value)]
        sweeps.append((key, values))
    combos = [{}]
    for key, values in sweeps:
        combos = [dict(c, **{key: v}) for c in combos for v in values]
    ds = _int_range(args.d)
    opts = _options(args)
    method = METHOD_NAMES[args.method]
    writer = csv.writer(out, lineterminator="\n")
    out.write(f"# schema: {SCHEMA}\n")
    writer.writerow(["family", "params", "d", "value", "method", "elapsed_ms"])
    for params in combos:
        if args.seed is not None:
            params["seed"] = args.seed
        g = generate(GadgetSpec(args.family, params))
        dist = all_pairs_distances(g)
        label = ";".join(f"{k}={v}" for k, v in params.items())
        for k in ds:
            rep = gp_number(g, k, method, dist, opts)
            writer.writerow([args.family, label, k, rep.value, rep.method, f"{rep.elapsed * 1000:.3f}"])
    return 0


def cmd_generate(args, out) -> int:
    g, source = _load(args)
    out.write(format_edge_list(g, [f"family: {source}", f"schema: {SCHEMA}"]))
    return 0


def cmd_srg(args, out) -> int:
    g, source = _load(args)
    d = all_pairs_distances(g)
    k = int(args.d)
    srg = strong_d_resolving_graph(g, d, k)
    comments = [f"strong {k}-resolving graph of {source}", f"schema: {SCHEMA}"]
    if args.bound:
        opts = _options(args)
        omega = clique_number(srg, opts).value
        comments.append(f"clique_number: {omega}")
        if g.n <= opts.bnb_cap:
            gp = gp_number(g, k, "branch_and_bound", d, opts).value
            comments.append(f"gp_{k}: {gp}")
            comments.append(f"bound_holds: {str(gp >= omega).lower()}")
    out.write(format_edge_list(srg, comments))
    return 0


def _source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="edge-list file ('-' for stdin); payload for clique_reduction")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="family parameter (repeatable)")
    p.add_argument("--seed", type=int, help="seed for random_connected")


def _solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=sorted(METHOD_NAMES), default="bnb")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--time-limit-ms", type=int, default=None)
    p.add_argument("--bruteforce-cap", type=int, default=24)
    p.add_argument("--bnb-cap", type=int, default=40)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpd", description="General d-position numbers of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute gp_d and print a JSON record")
    _source_args(p)
    _solver_args(p)
    p.add_argument("--d", required=True)
    p.add_argument("--witness", action="store_true", help="include the witness set")
    p.add_argument("--verify", action="store_true", help="re-check the witness with both verifiers")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="sweep parameters and d, print CSV")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--param", action="append", metavar="KEY=A..B")
    p.add_argument("--seed", type=int)
    p.add_argument("--d", required=True, help="single value or range A..B")
    _solver_args(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("generate", help="emit a generated graph as an edge list")
    _source_args(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("srg", help="emit the strong d-resolving graph")
    _source_args(p)
    _solver_args(p)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--bound", action="store_true", help="also report its clique number and gp_d")
    p.set_defaults(func=cmd_srg)
    return parser


def main(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        return args.func(args, out)
    except GPDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
