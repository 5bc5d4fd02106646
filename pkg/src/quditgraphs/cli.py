"""Command-line front end: JSON in, JSON out, deterministic exit codes.

Exit codes: 0 success / affirmative result, 1 negative mathematical result
(unsolvable system, unstabilized vertex, broken identity), 2 usage or schema
error, 3 size or budget limit. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import correspondence, graphs, stabilizers, states

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _read_edge_map(args: argparse.Namespace) -> graphs.WeightedEdgeMap:
    text = sys.stdin.read() if args.graph is None else _read_file(args.graph)
    return graphs.from_json(text)


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise graphs.SchemaError("$", f"cannot read {path}: {exc.strerror}") from exc


def _cmd_build_state(args: argparse.Namespace) -> int:
    edge_map = _read_edge_map(args)
    state = states.build_state(edge_map)
    if args.dense:
        sys.stdout.write(states.dense_text(states.to_dense(state)))
    else:
        _emit(states.phases_to_dict(state))
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    table = states.phases_from_dict(json.loads(_read_file(args.phases)))
    outcome = correspondence.solve_weights(table, args.mode)
    solution = outcome.solution
    payload = {
        "mode": args.mode,
        "consistent": solution.consistent,
        "count": solution.count,
        "solution": graphs.to_dict(outcome.edge_map) if outcome.edge_map else None,
        "fingerprint": outcome.system.fingerprint(),
    }
    if args.all_solutions and solution.consistent:
        if solution.count <= args.solution_cap:
            payload["all_solutions"] = [
                graphs.to_dict(m) for m in outcome.edge_maps(cap=args.solution_cap)
            ]
        else:
            payload["all_solutions_omitted"] = (
                f"count {solution.count} exceeds cap {args.solution_cap}"
            )
    _emit(payload)
    return EXIT_OK if solution.consistent else EXIT_NEGATIVE


def _cmd_verify_stabilizers(args: argparse.Namespace) -> int:
    edge_map = _read_edge_map(args)
    checks = stabilizers.verify(edge_map)
    payload = {
        "d": edge_map.d,
        "n": edge_map.n,
        "vertices": [
            {
                "vertex": c.vertex,
                "stabilized": c.stabilized,
                "mismatch_indices": list(c.mismatch_indices),
            }
            for c in checks
        ],
        "all_stabilized": all(c.stabilized for c in checks),
    }
    _emit(payload)
    return EXIT_OK if payload["all_stabilized"] else EXIT_NEGATIVE


def _cmd_census(args: argparse.Namespace) -> int:
    report = correspondence.census(args.d, args.n, args.mode, budget=args.budget)
    _emit(report.to_dict())
    return EXIT_OK


def _cmd_identity_check(args: argparse.Namespace) -> int:
    d, n = args.d, args.n
    edges = graphs.enumerate_multihyperedges(n, d)
    if not args.exhaustive:
        edges = [e for e in edges if e.arity <= 2]
    mismatches = []
    verdicts: dict[int, bool] = {}
    checked = 0
    for edge in edges:
        for m in range(d):
            for k in edge.vertices:
                report = stabilizers.conjugation_report(edge, m, k, d, n)
                checked += 1
                s_k = report.target_exponent
                verdicts[s_k] = verdicts.get(s_k, True) and report.holds
                if not report.holds:
                    mismatches.append(
                        {
                            "vertices": list(edge.vertices),
                            "exponents": list(edge.exponents),
                            "power": m,
                            "vertex": k,
                            "target_exponent": s_k,
                            "correction_diagonal": list(report.exact_diagonal),
                            "deleted_edge_diagonal": list(report.printed_diagonal),
                        }
                    )
    payload = {
        "d": d,
        "n": n,
        "exhaustive": bool(args.exhaustive),
        "checked": checked,
        "deleted_edge_form_exact_by_target_exponent": {
            str(k): v for k, v in sorted(verdicts.items())
        },
        "all_hold": not mismatches,
        "mismatches": mismatches,
    }
    _emit(payload)
    return EXIT_OK if not mismatches else EXIT_NEGATIVE


def _cmd_matrix(args: argparse.Namespace) -> int:
    block = correspondence.coefficient_block(args.d, args.block)
    payload = {
        "d": args.d,
        "block": args.block,
        "rows": block.rows,
        "cols": block.cols,
        "entries": list(block.entries),
    }
    _emit(payload)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditgraphs",
        description="Exact qudit (multi)hypergraph states, stabilizers, and weight solving.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build-state", help="edge-map JSON -> phase-table JSON")
    src = build.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="edge-map JSON file")
    src.add_argument("--stdin", action="store_true", help="read edge-map JSON from stdin")
    build.add_argument(
        "--dense", action="store_true", help="emit dense amplitudes (text) instead of JSON"
    )
    build.set_defaults(func=_cmd_build_state)

    solve = sub.add_parser("solve", help="phase-table JSON -> weight solution JSON")
    solve.add_argument("--phases", required=True, help="phase-table JSON file")
    solve.add_argument("--mode", required=True, choices=correspondence.MODES)
    solve.add_argument("--all-solutions", action="store_true")
    solve.add_argument("--solution-cap", type=int, default=1024)
    solve.set_defaults(func=_cmd_solve)

    ver = sub.add_parser("verify-stabilizers", help="check g_k|G> = |G> per vertex")
    vsrc = ver.add_mutually_exclusive_group(required=True)
    vsrc.add_argument("--graph", help="edge-map JSON file")
    vsrc.add_argument("--stdin", action="store_true")
    ver.set_defaults(func=_cmd_verify_stabilizers)

    cen = sub.add_parser("census", help="classify every canonical table at (d, n)")
    cen.add_argument("--d", type=int, required=True)
    cen.add_argument("--n", type=int, required=True)
    cen.add_argument("--mode", required=True, choices=correspondence.MODES)
    cen.add_argument("--budget", type=int, default=None)
    cen.set_defaults(func=_cmd_census)

    idc = sub.add_parser(
        "identity-check",
        help="compare conjugated gates against their deleted-edge form",
    )
    idc.add_argument("--d", type=int, required=True)
    idc.add_argument("--n", type=int, required=True)
    idc.add_argument(
        "--exhaustive",
        action="store_true",
        help="check every multihyperedge (default: supports of size <= 2)",
    )
    idc.set_defaults(func=_cmd_identity_check)

    mat = sub.add_parser("matrix", help="emit the digit-power coefficient block")
    mat.add_argument("--d", type=int, required=True)
    mat.add_argument("--block", type=int, required=True, help="Kronecker power")
    mat.set_defaults(func=_cmd_matrix)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes.
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (graphs.SchemaError, json.JSONDecodeError, correspondence.NonCanonical) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (states.SizeLimit, correspondence.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
