"""Command-line interface.

Exit codes: 0 on success, 1 for domain errors or failed verification,
2 for usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import closedform as cf
from .enumeration import (
    Partition,
    PEType,
    decompose,
    enumerate_by_sum,
    enumerate_pe_by_largest_sum,
    enumerate_pe_by_total,
    weight_exponent,
)
from .qalgebra import ContractError, QSeries
from .verify import SUITES, run_suite, weight_polynomial

FORMAT_VERSION = "1"
DEFAULT_EUCLID_ORDER = 40
DEFAULT_PE_ORDER = 24


def _envelope(command: str, parameters: dict[str, Any], result: Any) -> str:
    return json.dumps(
        {
            "format_version": FORMAT_VERSION,
            "command": command,
            "parameters": parameters,
            "result": result,
        },
        indent=2,
    )


def _emit(args: argparse.Namespace, params: dict[str, Any], result: Any, lines: list[str]) -> None:
    if args.format == "json":
        print(_envelope(args.command, params, result))
    else:
        for line in lines:
            print(line)


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.sum < 1:
        raise ContractError("--sum must be at least 1")
    params = {"sum": args.sum, "weights": args.weights, "pe": args.pe, "statistic": args.statistic}
    if args.pe:
        finder = enumerate_pe_by_total if args.statistic == "total" else enumerate_pe_by_largest_sum
        found = finder(args.pe, args.sum)
        result = [str(p) for p in found]
        _emit(args, params, result, result)
        return 0

    found = enumerate_by_sum(args.sum)
    if args.weights:
        result = [
            {"partition": str(p), "w": weight_exponent(p), "phi": 2 ** weight_exponent(p)}
            for p in found
        ]
        lines = [f"{r['partition']} w={r['w']} phi={r['phi']}" for r in result]
    else:
        result = [str(p) for p in found]
        lines = result
    _emit(args, params, result, lines)
    return 0


def _oracle_series(args: argparse.Namespace) -> QSeries:
    order = args.max
    if args.pe:
        counts = [1] + [len(enumerate_pe_by_total(args.pe, n)) for n in range(1, order + 1)]
        return QSeries.from_ints(order, counts)
    parts = [p for n in range(1, order + 1) for p in enumerate_by_sum(n)]
    series = QSeries.one(order) + weight_polynomial(parts, order)
    return series if args.weighted else series.at_x(1)


def _closed_series(args: argparse.Namespace) -> QSeries:
    if args.pe:
        return cf.pe_series(args.pe, args.max)
    return cf.euclid_series(args.max, weighted=args.weighted)


def cmd_series(args: argparse.Namespace) -> int:
    if args.max is None:
        args.max = DEFAULT_PE_ORDER if args.pe else DEFAULT_EUCLID_ORDER
    if args.max < 0:
        raise ContractError("--max must be nonnegative")
    params = {"max": args.max, "weighted": args.weighted, "pe": args.pe, "method": args.method}

    closed = _closed_series(args) if args.method in ("closed", "both") else None
    oracle = _oracle_series(args) if args.method in ("oracle", "both") else None
    result, lines = [], []
    diffs = 0
    for k in range(args.max + 1):
        row: dict[str, Any] = {"degree": k}
        if args.method == "both":
            c, o = closed.coeff(k), oracle.coeff(k)
            d = c - o
            diffs += bool(d)
            row.update(closed=str(c), oracle=str(o), diff=str(d))
            lines.append(f"q^{k}: {c}  oracle={o}  diff={d}")
        else:
            c = (closed or oracle).coeff(k)
            row["coeff"] = str(c)
            lines.append(f"q^{k}: {c}")
        result.append(row)
    _emit(args, params, result, lines)
    return 1 if diffs else 0


def cmd_decompose(args: argparse.Namespace) -> int:
    p = Partition.parse(args.partition)
    core, pad = decompose(p)
    params = {"partition": args.partition}
    result = {"core": str(core), "padding": list(pad)}
    line = f"({core}) + ({'+'.join(map(str, pad))})"
    _emit(args, params, result, [line])
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    p = Partition.parse(args.partition)
    w = weight_exponent(p)
    params = {"partition": args.partition}
    result = {"partition": str(p), "w": w, "phi": 2**w}
    _emit(args, params, result, [f"{p} w={w} phi={2**w}"])
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = {"d_max": args.dmax, "n_max": args.nmax, "order": args.max, "sum_max": args.summax}
    reports = run_suite(args.suite, **bounds)
    ok = all(r.passed for r in reports)
    params = {"suite": args.suite, **bounds}
    result = {"passed": ok, "reports": [r.to_dict() for r in reports]}
    _emit(args, params, result, [r.render() for r in reports])
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="billiard-partitions",
        description="Billiard partitions: enumeration, generating series, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions of a given size")
    p.add_argument("--sum", type=int, required=True)
    p.add_argument("--weights", action="store_true", help="append w and phi=2^w")
    p.add_argument("--pe", choices=[t.value for t in PEType])
    p.add_argument(
        "--statistic",
        choices=("total", "largest"),
        default="total",
        help="PE size: sum of all parts, or m_1+n_1",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", parents=[common], help="print generating series coefficients")
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--pe", choices=[t.value for t in PEType])
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="closed")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("decompose", parents=[common], help="split into irreducible core + padding")
    p.add_argument("partition")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("phi", parents=[common], help="weight of one partition")
    p.add_argument("partition")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--nmax", type=int, default=24)
    p.add_argument("--max", type=int, default=None, help="series order for euclid/pe")
    p.add_argument("--summax", type=int, default=40)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "series" and args.weighted and args.pe:
        parser.error("--weighted cannot be combined with --pe")
    try:
        return args.func(args)
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
