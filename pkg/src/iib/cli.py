"""Command-line interface: ``iib {solve,gen,check,params,bench}``.

Exit codes: 0 yes / ok, 1 no, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import DEFAULT_ALGOS, run_bench
from .gadgets import GENERATORS, GadgetError
from .graph import Instance, NotPreprocessedError, verify
from .io import (
    SOURCE_PARSERS,
    ParseError,
    parse_instance,
    parse_td,
    read_text,
    serialize_instance,
)
from .nd import type_partition
from .runner import ALGORITHMS, SolveTimeout, measure_params, prepare, solve_record
from .treewidth import DecompositionError

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_instance(path: str) -> Instance:
    return parse_instance(read_text(path))


def cmd_solve(args) -> int:
    inst = _load_instance(args.input)
    kept = list(range(inst.graph.n))
    removed: list[int] = []
    if args.preprocess:
        inst, removed = prepare(inst)
        gone = set(removed)
        kept = [v for v in kept if v not in gone]
    td = parse_td(read_text(args.td), inst.graph.n) if args.td else None
    if td is not None and args.algo not in ("tw", "auto"):
        raise CliError("--td is only used by --algo tw or auto")
    try:
        rec = solve_record(
            inst, args.algo, mode=args.mode, td=td, seed=args.seed,
            trials=args.trials, timeout=args.timeout,
        )
    except NotPreprocessedError as exc:
        raise CliError(f"{exc}; or rerun with --preprocess") from None
    if removed:
        # report ids of the input file, not of the reduced graph
        rec.X = [kept[v - 1] + 1 for v in rec.X] if rec.X is not None else None
        rec.Y = [kept[v - 1] + 1 for v in rec.Y] if rec.Y is not None else None
        rec.notes.append(f"preprocess removed {len(removed)} unreachable node(s): "
                         f"{[v + 1 for v in removed]}")
    _emit(rec.to_json(), args.out)
    return EXIT_YES if rec.verdict == "yes" else EXIT_NO


def cmd_gen(args) -> int:
    src = SOURCE_PARSERS[args.reduction](read_text(args.src))
    g = GENERATORS[args.reduction](src)
    comments = [
        f"generated by reduction {args.reduction}",
        f"expected {'yes' if g.expected_verdict else 'no'}",
        f"source {g.provenance['source']}",
    ]
    if g.provenance.get("removed"):
        comments.append(f"unreachable gadget nodes removed: {len(g.provenance['removed'])}")
    labels = g.instance.graph.labels or ()
    comments += [f"label {v + 1} {name}" for v, name in enumerate(labels)]
    _emit(serialize_instance(g.instance, comments), args.out)
    return EXIT_YES


def _read_witness(path: str, n: int) -> list[int]:
    text = read_text(path)
    if text.lstrip().startswith("{"):
        X = json.loads(text).get("X")
        if X is None:
            raise CliError("witness record has no X (a no record)")
        ids = X
    else:
        ids = []
        for line in text.splitlines():
            parts = line.split()
            if parts and parts[0] == "x":
                ids += [int(v) for v in parts[1:]]
    bad = [v for v in ids if not 1 <= v <= n]
    if bad:
        raise CliError(f"witness node id {bad[0]} outside 1..{n}")
    return [v - 1 for v in ids]


def cmd_check(args) -> int:
    inst = _load_instance(args.input)
    X = _read_witness(args.witness, inst.graph.n)
    sol = verify(inst, X)
    report = {
        "valid": sol.verdict,
        "X": [v + 1 for v in sorted(sol.influenced)],
        "Y": [v + 1 for v in sorted(sol.immunized)],
        "k": inst.k,
        "l": inst.l,
    }
    _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_YES if sol.verdict else EXIT_NO


def cmd_params(args) -> int:
    inst = _load_instance(args.input)
    p = measure_params(inst.graph)
    part = type_partition(inst.graph)
    p["k"], p["l"] = inst.k, inst.l
    p["partition"] = [
        {"kind": kind, "nodes": [v + 1 for v in members]}
        for kind, members in zip(part.kinds, part.classes)
    ]
    _emit(json.dumps(p, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_YES


def cmd_bench(args) -> int:
    if not Path(args.dir).is_dir():
        raise CliError(f"{args.dir} is not a directory")
    algos = tuple(a for a in args.algos.split(",") if a)
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise CliError(f"unknown algorithm(s) {unknown}")
    report = run_bench(args.dir, algos, args.timeout, args.seed)
    _emit(report.to_json() if args.json else report.table(), args.out)
    return EXIT_NO if report.disagreements() else EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iib", description="Influence-immunization bounding solvers")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide an instance and print a result record")
    s.add_argument("--algo", choices=ALGORITHMS, default="auto")
    s.add_argument("--mode", choices=("rand", "derand", "y", "x"),
                   help="kl: rand or derand (default); oracle: y (default) or x enumeration")
    s.add_argument("--td", help="tree decomposition file for --algo tw")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, help="kl randomized trials (default 5 * 2^(k+l))")
    s.add_argument("--timeout", type=float, help="seconds before giving up")
    s.add_argument("--preprocess", action="store_true", help="drop unreachable nodes first")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="generate an instance from a source problem")
    g.add_argument("--reduction", choices=sorted(GENERATORS), required=True)
    g.add_argument("--src", required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="verify a witness against an instance")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--witness", required=True, help="result record (JSON) or lines 'x v1 v2 ...'")
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)

    q = sub.add_parser("params", help="report n, m, max degree, zeta, nd and heuristic width")
    q.add_argument("--in", dest="input", required=True)
    q.add_argument("--out")
    q.set_defaults(func=cmd_params)

    b = sub.add_parser("bench", help="run every *.iib file of a directory across solvers")
    b.add_argument("--dir", required=True)
    b.add_argument("--algos", default=",".join(DEFAULT_ALGOS))
    b.add_argument("--timeout", type=float)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--json", action="store_true")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ParseError, DecompositionError, GadgetError, SolveTimeout,
            NotPreprocessedError, OSError, ValueError) as exc:
        print(f"iib {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
