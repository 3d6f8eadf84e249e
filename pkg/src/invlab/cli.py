"""Command-line front end.

Exit codes: 0 success / statement holds, 1 violation or failed certificate,
2 usage error, 3 inconclusive (budget exhausted).  `--json` emits the
certificate and scan-report schemas verbatim, each with a top-level
"schema" field; reports are the durable product, so there is no config
file and every run is self-describing through ScanReport.scope.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .decycling import Certificate, certificate_error
from .digraph import ParseError, VertexFamily, decode, dijoin, encode, njoin
from .explorer import (
    canonical_form,
    enumerate_tournaments,
    run_scan,
    verify_dijoin_theorems,
)
from .search import Inconclusive, SearchBudget, solve_inv, solve_tmr
from .constructions import extend_to_tournament

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.node_limit, parallel_width=args.workers)


def _graphs_from(arg: str, stdin) -> list[str]:
    if arg == "-":
        return [line.strip() for line in stdin if line.strip()]
    return [arg]


def _cmd_inv(args, out) -> int:
    code = EXIT_OK
    for text in _graphs_from(args.graph, sys.stdin):
        D = decode(text)
        try:
            value, cert = solve_inv(D, _budget(args))
        except Inconclusive as exc:
            print(f"inv inconclusive for {text}: {exc}", file=out)
            code = max(code, EXIT_INCONCLUSIVE)
            continue
        if args.json:
            print(json.dumps(cert.to_json_dict()), file=out)
        else:
            print(f"inv = {value}", file=out)
            print(f"family: {cert.payload.to_lists()}", file=out)
            print(f"order: {list(cert.order)}", file=out)
    return code


def _cmd_tmr(args, out) -> int:
    code = EXIT_OK
    for text in _graphs_from(args.graph, sys.stdin):
        T = decode(text)
        if not T.is_tournament:
            print(f"error: {text} is not a tournament", file=out)
            return EXIT_USAGE
        try:
            value, cert, nonzero_diag = solve_tmr(T, _budget(args))
        except Inconclusive as exc:
            print(f"tmr inconclusive for {text}: {exc}", file=out)
            code = max(code, EXIT_INCONCLUSIVE)
            continue
        if args.json:
            print(json.dumps(cert.to_json_dict()), file=out)
        else:
            print(f"tmr = {value}", file=out)
            print(f"matrix: {cert.payload.to_lists()}", file=out)
            print(f"order: {list(cert.order)}", file=out)
            print(f"min-rank matrix with nonzero diagonal exists: {nonzero_diag}", file=out)
    return code


def _cmd_check(args, out) -> int:
    D = decode(args.graph)
    with open(args.cert, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    cert = Certificate.from_json_dict(data)
    err = certificate_error(D, cert)
    if err is None:
        print("certificate ok", file=out)
        return EXIT_OK
    print(f"certificate FAILED: {err}", file=out)
    return EXIT_VIOLATION


def _cmd_dijoin(args, out) -> int:
    print(encode(dijoin(decode(args.g1), decode(args.g2))), file=out)
    return EXIT_OK


def _cmd_njoin(args, out) -> int:
    print(encode(njoin([decode(g) for g in args.graphs])), file=out)
    return EXIT_OK


def _cmd_extend(args, out) -> int:
    D = decode(args.graph)
    try:
        sets = json.loads(args.family)
        family = VertexFamily.from_sets(D.n, sets)
    except (json.JSONDecodeError, TypeError) as exc:
        print(f"error: --family must be a JSON list of vertex lists ({exc})", file=out)
        return EXIT_USAGE
    try:
        print(encode(extend_to_tournament(D, family)), file=out)
    except ValueError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_enumerate(args, out) -> int:
    for T in enumerate_tournaments(args.n, up_to_iso=args.iso):
        print(encode(T), file=out)
    return EXIT_OK


def _cmd_canonical(args, out) -> int:
    for text in _graphs_from(args.graph, sys.stdin):
        print(canonical_form(decode(text)), file=out)
    return EXIT_OK


def _report_exit(report, args, out) -> int:
    if args.json:
        print(json.dumps(report.to_json_dict()), file=out)
    else:
        print(report.table(), file=out)
    if report.violations:
        return EXIT_VIOLATION
    if report.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_verify_theorems(args, out) -> int:
    report = verify_dijoin_theorems(
        max_each=args.max_n,
        node_limit=args.node_limit,
        workers=args.workers,
    )
    return _report_exit(report, args, out)


def _cmd_scan(args, out) -> int:
    params = {}
    if args.conjecture == "schur-3x3":
        params["n2_max"] = args.n2 if args.n2 is not None else 3
        if args.budget is not None:
            params["samples"] = args.budget
        params["seed"] = args.seed
    else:
        params["n1"] = args.n1 if args.n1 is not None else 3
        params["n2"] = args.n2 if args.n2 is not None else 3
        params["node_limit"] = args.node_limit if args.budget is None else args.budget
    try:
        report = run_scan(args.conjecture, workers=args.workers, **params)
    except ValueError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_USAGE
    return _report_exit(report, args, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON schemas verbatim")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled scans")
    common.add_argument("--workers", type=int, default=1, help="worker process count")
    common.add_argument("--node-limit", type=int, default=None, help="search node cap")

    parser = argparse.ArgumentParser(
        prog="invlab",
        description="Exact inversion numbers and tournament minimum rank with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inv", parents=[common], help="inversion number of a graph")
    p.add_argument("graph", help="graph text, or - to read one per stdin line")
    p.set_defaults(fn=_cmd_inv)

    p = sub.add_parser("tmr", parents=[common], help="tournament minimum rank")
    p.add_argument("graph", help="tournament text, or - for stdin lines")
    p.set_defaults(fn=_cmd_tmr)

    p = sub.add_parser("check", parents=[common], help="verify a certificate file")
    p.add_argument("graph")
    p.add_argument("--cert", required=True, help="certificate JSON file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("dijoin", parents=[common], help="dijoin of two graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    p.set_defaults(fn=_cmd_dijoin)

    p = sub.add_parser("njoin", parents=[common], help="iterated dijoin")
    p.add_argument("graphs", nargs="+")
    p.set_defaults(fn=_cmd_njoin)

    p = sub.add_parser("extend", parents=[common], help="extend to a tournament with equal inv")
    p.add_argument("graph")
    p.add_argument("--family", required=True, help="decycling family as JSON lists")
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate tournaments")
    p.add_argument("n", type=int)
    p.add_argument("--iso", action="store_true", help="one per isomorphism class")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("canonical", parents=[common], help="canonical form of a tournament")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_canonical)

    p = sub.add_parser("verify-theorems", parents=[common], help="check the proven identities")
    p.add_argument("--max-n", type=int, default=3, help="max operand size")
    p.set_defaults(fn=_cmd_verify_theorems)

    p = sub.add_parser("scan", parents=[common], help="conjecture scans")
    p.add_argument(
        "conjecture",
        choices=["tmr-additivity", "inv-lower-bound", "schur-3x3"],
    )
    p.add_argument("--n1", type=int, default=None, help="max size of the first operand")
    p.add_argument("--n2", type=int, default=None, help="max size of the second operand")
    p.add_argument("--budget", type=int, default=None, help="node limit (or sample count)")
    p.set_defaults(fn=_cmd_scan)

    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args, out)
    except (ParseError, FileNotFoundError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=out)
        return EXIT_INCONCLUSIVE


def console_main() -> None:
    sys.exit(main())
