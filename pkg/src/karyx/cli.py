"""``karyx`` command line.

Exit codes: 0 ok, 2 usage, 3 unreadable or malformed input, 4 mathematical
precondition not met, 5 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys

import numpy as np

from karyx import axioms, indices
from karyx.errors import PreconditionError, SchemaError
from karyx.game import MoebiusTable, moebius, zeta
from karyx.io import game_to_dict, load_gai_game, load_game
from karyx.lattice import LatticeShape

EXIT_OK, EXIT_USAGE, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4, 5

VECTOR_METHODS = {
    "paper": indices.importance,
    "shapley": indices.shapley_classical,
    "cells": indices.importance_by_cells,
    "grabisch-lange": indices.grabisch_lange,
}
BI_METHODS = ("hsiao-raghavan", "peters-zank")
METHODS = tuple(VECTOR_METHODS) + BI_METHODS


class UsageError(Exception):
    pass


def _weights(text):
    if text is None:
        return None
    try:
        return indices.WeightScheme(tuple(float(w) for w in text.split(",")))
    except ValueError as exc:
        raise UsageError(f"--weights: {exc}") from exc


def _evaluate(v, method, weights=None):
    if method == "hsiao-raghavan":
        return indices.hsiao_raghavan(v, weights)
    if method == "peters-zank":
        return indices.peters_zank(v)
    return VECTOR_METHODS[method](v)


def _fmt(x: float) -> str:
    x = 0.0 if x == 0 else x
    return f"{x:.10g}"


def _table(header, rows) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def _csv(rows) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["attribute", "method", "value"])
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2)


def _load(path, normalize):
    try:
        return load_game(path, normalize=normalize)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror or exc}") from exc


def cmd_compute(args) -> str:
    weights = _weights(args.weights)
    if weights is not None and args.method != "hsiao-raghavan":
        raise UsageError("--weights only applies to --method hsiao-raghavan")
    if args.check and args.method != "paper":
        raise UsageError("--check only applies to --method paper")
    v = _load(args.input, args.normalize)
    result = _evaluate(v, args.method, weights)
    n = v.shape.n
    doc = {"method": args.method, "n": n, "k": v.shape.k}
    if args.method in BI_METHODS:
        if args.method == "hsiao-raghavan":
            doc["weights"] = list((weights or indices.WeightScheme.linear(v.shape.k)).weights)
        doc["values"] = result.tolist()
        doc["row_sums"] = result.sum(axis=1).tolist()
    else:
        doc["values"] = result.tolist()
    if args.check:
        total, rhs = float(result.sum()), indices.sum_identity_rhs(v)
        doc["check"] = {"sum": total, "sum_identity_rhs": rhs, "difference": total - rhs}

    if args.format == "json":
        return _dumps(doc)
    if args.method in BI_METHODS:
        if args.format == "csv":
            return _csv([(i + 1, f"{args.method}[j={j + 1}]", repr(float(result[i, j])))
                         for i in range(n) for j in range(v.shape.k)])
        header = ["attribute"] + [f"j={j + 1}" for j in range(v.shape.k)] + ["sum"]
        rows = [[i + 1] + [_fmt(x) for x in result[i]] + [_fmt(result[i].sum())] for i in range(n)]
        return f"# {args.method}\n" + _table(header, rows)
    if args.format == "csv":
        return _csv([(i + 1, args.method, repr(float(x))) for i, x in enumerate(result)])
    out = f"# {args.method}\n" + _table(["attribute", "value"],
                                        [[i + 1, _fmt(x)] for i, x in enumerate(result)])
    if args.check:
        c = doc["check"]
        out += (f"\n# sum {_fmt(c['sum'])}  diagonal variation {_fmt(c['sum_identity_rhs'])}"
                f"  difference {_fmt(c['difference'])}")
    return out


def cmd_compare(args) -> str:
    weights = _weights(args.weights)
    v = _load(args.input, args.normalize)
    n, k = v.shape.n, v.shape.k
    names = ["paper", "cells", "grabisch-lange"] + (["shapley"] if k == 1 else [])
    vectors = {m: VECTOR_METHODS[m](v) for m in names}
    bi = {"hsiao-raghavan": indices.hsiao_raghavan(v, weights), "peters-zank": indices.peters_zank(v)}
    columns = {**vectors, **{m: t.sum(axis=1) for m, t in bi.items()}}
    doc = {
        "n": n, "k": k,
        "methods": {m: c.tolist() for m, c in columns.items()},
        "bi_index": {m: t.tolist() for m, t in bi.items()},
        "sums": {m: float(c.sum()) for m, c in columns.items()},
        "sum_identity_rhs": indices.sum_identity_rhs(v),
        "top_value": v(v.shape.top),
    }
    if args.format == "json":
        return _dumps(doc)
    if args.format == "csv":
        return _csv([(i + 1, m, repr(float(c[i]))) for m, c in columns.items() for i in range(n)])
    rows = [[i + 1] + [_fmt(c[i]) for c in columns.values()] for i in range(n)]
    rows.append(["sum"] + [_fmt(c.sum()) for c in columns.values()])
    parts = [_table(["attribute"] + list(columns), rows),
             f"# diagonal variation (paper sum reference) {_fmt(doc['sum_identity_rhs'])}",
             f"# v(k_N) (efficiency reference) {_fmt(doc['top_value'])}"]
    for m, t in bi.items():
        parts.append(f"# {m} by level\n" + _table(
            ["attribute"] + [f"j={j + 1}" for j in range(k)],
            [[i + 1] + [_fmt(x) for x in t[i]] for i in range(n)]))
    return "\n".join(parts)


def cmd_moebius(args) -> str:
    v = _load(args.input, False)
    if args.inverse:
        out, kind = zeta(MoebiusTable(v.shape, v.values)), "game"
    else:
        out, kind = moebius(v), "moebius"
    if args.format == "json":
        return _dumps(game_to_dict(out, kind))
    rows = [[",".join(map(str, x)), _fmt(val)] for x, val in zip(v.shape.points(), out.flat)]
    return _table(["x", kind], rows)


def cmd_gai_eval(args) -> str:
    try:
        v = load_gai_game(args.input)
    except OSError as exc:
        raise SchemaError(f"cannot read {args.input}: {exc.strerror or exc}") from exc
    if args.format == "json":
        return _dumps(game_to_dict(v))
    rows = [[",".join(map(str, x)), _fmt(val)] for x, val in zip(v.shape.points(), v.flat)]
    return _table(["x", "v"], rows)


def _index_functional(method, weights):
    if method in BI_METHODS:
        return lambda v: _evaluate(v, method, weights).sum(axis=1)
    return VECTOR_METHODS[method]


def cmd_verify(args) -> tuple[str, int]:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.method == "shapley" and args.k != 1:
        raise PreconditionError("--method shapley needs --k 1")
    try:
        shape = LatticeShape(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    phi = _index_functional(args.method, _weights(args.weights))
    reports = axioms.run_suite(phi, shape, args.trials, args.seed, args.tol)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = _dumps({"method": args.method, "n": args.n, "k": args.k, "trials": args.trials,
                       "seed": args.seed, "tolerance": args.tol, "passed": ok,
                       "reports": [r.to_dict() for r in reports]})
    else:
        head = (f"# verify method={args.method} n={args.n} k={args.k} "
                f"trials={args.trials} seed={args.seed} tol={args.tol:g}")
        text = "\n".join([head] + [r.summary() for r in reports])
    return text, EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="karyx", description="Importance indices for k-ary games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("json", "table", "csv")):
        p.add_argument("--format", choices=choices, default="json")

    p = sub.add_parser("compute", help="compute one index")
    p.add_argument("--input", required=True)
    p.add_argument("--method", choices=METHODS, default="paper")
    p.add_argument("--weights", help="comma-separated w1,...,wk for hsiao-raghavan")
    p.add_argument("--check", action="store_true", help="compare the sum with the diagonal variation")
    p.add_argument("--normalize", action="store_true", help="shift values so that v(0_N) = 0")
    fmt(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="all applicable indices side by side")
    p.add_argument("--input", required=True)
    p.add_argument("--weights")
    p.add_argument("--normalize", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("moebius", help="Moebius transform (or its inverse)")
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true", help="treat input as Moebius coefficients")
    fmt(p, ("json", "table"))
    p.set_defaults(func=cmd_moebius)

    p = sub.add_parser("gai-eval", help="expand a GAI model into a dense game file")
    p.add_argument("--input", required=True)
    fmt(p, ("json", "table"))
    p.set_defaults(func=cmd_gai_eval)

    p = sub.add_parser("verify", help="run the axiom checks on random games")
    p.add_argument("--method", choices=METHODS, default="paper")
    p.add_argument("--weights")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=axioms.DEFAULT_TOL)
    fmt(p, ("json", "table"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"karyx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SchemaError as exc:
        print(f"karyx: invalid input: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except PreconditionError as exc:
        print(f"karyx: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
