"""Command-line entry point: ``dihedral-moduli <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import moduli
from .combinatorics import enumerate_dissections
from .series import TruncatedSeries, compose

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dihedral-moduli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="Betti numbers a_{n,i} of M_{0,n}^delta for 3 <= n <= N")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--method", choices=moduli.METHODS, default="stratification")

    p = sub.add_parser("euler", help="Poincare polynomial of one space")
    p.add_argument("--space", choices=("open", "delta", "compact"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=moduli.METHODS, default="stratification",
                   help="route for --space delta (ignored otherwise)")

    p = sub.add_parser("invert", help="print f, f_delta and the residuals of their compositions")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--q0", action="store_true", help="specialise every coefficient to q = 0")

    p = sub.add_parser("verify", help="run every consistency check up to the given order")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("dissections", help="brute-force dissection counts by type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_table(args) -> int:
    table = moduli.betti_table(args.n_max, args.method)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    elif args.format == "json":
        print(table.to_json())
    else:
        print(table.render())
    return EXIT_OK


def _cmd_euler(args) -> int:
    if args.space == "open":
        poly = moduli.euler_open(args.n)
    elif args.space == "compact":
        poly = moduli.euler_compact(args.n)
    else:
        poly = moduli.euler_delta(args.n, args.method)
    print(poly)
    return EXIT_OK


def _cmd_invert(args) -> int:
    if args.order < 1:
        raise ValueError("--order must be positive")
    f = moduli.open_series(args.order)
    fd = moduli.delta_series(args.order)
    if args.q0:
        f = f.map_coefficients(lambda c: c(0))
        fd = fd.map_coefficients(lambda c: c(0))
    x = TruncatedSeries.identity(args.order)
    left, right = compose(f, fd) - x, compose(fd, f) - x
    print(f"f       = {f}")
    print(f"f_delta = {fd}")
    print(f"f(f_delta(x)) - x = {left}")
    print(f"f_delta(f(x)) - x = {right}")
    return EXIT_OK if not any(left.coefficients) and not any(right.coefficients) else EXIT_FAIL


def _published_table_check(n_max: int) -> moduli.Report:
    report = moduli.Report()
    if n_max < 5:
        return report
    for n in range(5, min(n_max, 11) + 1):
        name = f"row n={n} matches the published table"
        try:
            row = moduli.betti_numbers(moduli.euler_delta(n), n - 3)[1:]
        except moduli.PurityViolation as exc:
            report.add(name, False, str(exc))
            continue
        report.add(name, row == moduli.PUBLISHED_TABLE[n], str(row))
    return report


def _cmd_verify(args) -> int:
    if args.order < 1:
        raise ValueError("--order must be positive")
    report = moduli.verify_inversion(args.order)
    report.extend(moduli.cross_method_check(args.order + 1))
    report.extend(moduli.dissection_oracle_check(min(args.order + 2, 10)))
    report.extend(_published_table_check(args.order + 1))
    print(report)
    print("all checks passed" if report.passed else "VERIFICATION FAILED")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_dissections(args) -> int:
    counts = enumerate_dissections(args.n)
    if args.format == "json":
        print(json.dumps({str(lam): c for lam, c in counts.items()}, indent=2))
    else:
        for lam, c in counts.items():
            print(f"{lam}: {c}")
        print(f"total: {sum(counts.values())}")
    return EXIT_OK


_COMMANDS = {
    "table": _cmd_table,
    "euler": _cmd_euler,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
    "dissections": _cmd_dissections,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"dihedral-moduli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"dihedral-moduli: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
