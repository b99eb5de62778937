"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 guard refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphs
from .grobner import RingMismatchError
from .polyring import poly_str
from .profiles import (
    SizeGuardError,
    determinantal_ideals,
    multivariate_ideals,
    profile_json,
)
from .smith import cokernel, snf_integer, snf_poly_q
from .suites import SUITES, run_suite
from .survey import (
    CSV_HEADER,
    LARGE_CORPUS_THRESHOLD,
    MODES,
    default_workers,
    run_survey,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_GUARD = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detideals",
        description="Exact determinantal ideals, Smith normal forms and "
        "codeterminantal graph surveys.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit all connected graphs on n vertices as graph6")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("ideals", help="determinantal ideal profile of one graph matrix")
    p.add_argument("graph6", nargs="?", help="inline graph6 string")
    p.add_argument("--input", help="graph6 file, or - for stdin")
    p.add_argument("--matrix", choices=graphs.MATRIX_KINDS, default="adjacency")
    p.add_argument("--ring", choices=("Zx", "Qx", "ZX"), default="Zx")
    p.add_argument("--var", default="x", help="variable name for text output")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--force", action="store_true",
                   help="override the multivariate size guard")

    p = sub.add_parser("snf", help="Smith normal form of a graph matrix")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--input", help="graph6 file, or - for stdin")
    p.add_argument("--matrix", choices=graphs.MATRIX_KINDS, default="adjacency")
    p.add_argument("--ring", choices=("Z", "Qx"), default="Z")
    p.add_argument("--output", choices=("text", "json"), default="text")

    p = sub.add_parser("survey", help="classify a corpus by an invariant key")
    p.add_argument("--n", type=int, help="use the built-in connected-graph corpus")
    p.add_argument("--input", help="graph6 corpus file, or - for stdin")
    p.add_argument("--matrix", choices=graphs.MATRIX_KINDS, required=True)
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--output", choices=("csv", "json", "text"), default="csv")
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--allow-large", action="store_true",
                   help="permit corpora at the n=9 scale")
    p.add_argument("--checkpoint", help="write per-graph key records to this JSONL file")
    p.add_argument("--checkpoint-every", type=int, default=1000)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)

    return parser


def _read_graphs(args) -> list[graphs.Graph]:
    if getattr(args, "graph6", None):
        return [graphs.parse_graph6(args.graph6)]
    if getattr(args, "input", None):
        if args.input == "-":
            return list(graphs.read_graph6_lines(sys.stdin))
        with open(args.input, "r", encoding="ascii") as fh:
            return list(graphs.read_graph6_lines(fh))
    raise graphs.Graph6Error("no graph input given (inline graph6 or --input)")


def _cmd_gen(args) -> int:
    for g in graphs.enumerate_connected(args.n):
        print(graphs.write_graph6(g))
    return EXIT_OK


def _cmd_ideals(args) -> int:
    out = []
    for g in _read_graphs(args):
        if args.ring == "ZX":
            if args.matrix not in ("adjacency", "distance"):
                raise ValueError("ZX profiles use the adjacency or distance matrix")
            profile = multivariate_ideals(g, args.matrix, force=args.force)
        else:
            profile = determinantal_ideals(g, args.matrix, args.ring)
        out.append(profile)
    if args.output == "json":
        docs = [profile_json(p, var=args.var) for p in out]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
        return EXIT_OK
    for profile in out:
        print(f"graph {profile.graph6} matrix {profile.kind} ring "
              f"{profile.ring.kind} corank {profile.corank}")
        for k, ideal in enumerate(profile.ideals, start=1):
            print(f"  k={k}: [{', '.join(ideal.basis_strings(var=args.var))}]")
    return EXIT_OK


def _cmd_snf(args) -> int:
    docs = []
    lines = []
    for g in _read_graphs(args):
        g6 = graphs.write_graph6(g)
        if args.ring == "Z":
            snf = snf_integer(graphs.build_matrix(g, args.matrix))
            docs.append({"graph": g6, **snf.to_json()})
            diag = ",".join(str(f) for f in snf.diagonal())
            lines.append(f"graph {g6} matrix {args.matrix} ring Z")
            lines.append(f"  invariant factors: {diag}")
            lines.append(f"  cokernel: {cokernel(snf)}")
        else:
            snf = snf_poly_q(graphs.char_matrix(g, args.matrix, "Q"))
            docs.append({"graph": g6, **snf.to_json()})
            lines.append(f"graph {g6} matrix {args.matrix} ring Qx")
            for k, f in enumerate(snf.diagonal(), start=1):
                lines.append(f"  f_{k} = {poly_str(f)}")
    if args.output == "json":
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _cmd_survey(args) -> int:
    if args.n is not None:
        corpus = list(graphs.enumerate_connected(args.n))
    elif args.input:
        if args.input == "-":
            corpus = list(graphs.read_graph6_lines(sys.stdin))
        else:
            with open(args.input, "r", encoding="ascii") as fh:
                corpus = list(graphs.read_graph6_lines(fh))
    else:
        raise graphs.Graph6Error("survey needs --n or --input")
    if len(corpus) >= LARGE_CORPUS_THRESHOLD and not args.allow_large:
        raise SizeGuardError(
            f"corpus of {len(corpus)} graphs requires --allow-large")
    report = run_survey(
        corpus, args.matrix, args.mode,
        workers=args.workers if args.workers is not None else default_workers(),
        checkpoint_path=args.checkpoint,
        checkpoint_every=args.checkpoint_every,
    )
    if args.output == "csv":
        text = CSV_HEADER + "\n" + report.csv_row() + "\n"
    elif args.output == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    else:
        text = (f"n={report.n} matrix={report.kind} mode={report.mode} "
                f"total={report.total} with_mate={report.with_mate}\n")
        for key, members in report.buckets:
            text += f"  [{len(members)}] {' '.join(members)}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; available: {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return EXIT_INPUT_ERROR
    results = run_suite(args.suite, max_n=args.max_n, workers=args.workers)
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f"  ({r.detail})" if r.detail else ""
        print(f"{status}: {r.name}{detail}")
        ok = ok and r.passed
    print(f"suite {args.suite}: {'all checks passed' if ok else 'FAILURES PRESENT'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "ideals":
            return _cmd_ideals(args)
        if args.command == "snf":
            return _cmd_snf(args)
        if args.command == "survey":
            return _cmd_survey(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise AssertionError("unreachable")
    except SizeGuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (graphs.Graph6Error, graphs.DisconnectedGraphError, RingMismatchError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
