"""Command-line front end.

    totients phi N
    totients inverse M [--algorithm scan|construct|verify]
    totients bound M
    totients classify two-p P | two-p-k P K | pow2 K | factorial N
    totients scan sophie | s-set P | lehmer | odd-doubles  [--limit N]
    totients table [--rows 1,2,4]

Every leaf takes ``--format text|json|csv`` and ``--output PATH``.
Exit status: 0 success, 1 usage error, 2 domain/overflow error,
3 when ``--algorithm verify`` finds the two inverse algorithms disagreeing.
"""
from __future__ import annotations

import argparse
import sys

from . import families, gupta, inverse
from .errors import DomainError, UnknownStatusError
from .render import FORMATS, BoundTable, Listing, dumps, payload, render
from .totient import TotientValue, phi

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class AlgorithmMismatch(Exception):
    pass


def _rows(value: str) -> list[int]:
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {value!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", metavar="PATH", help="also write the document to PATH")

    parser = _Parser(prog="totients", description="Euler totient image and preimage analysis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("phi", parents=[common], help="Euler's totient of N")
    p.add_argument("n", type=int)

    p = sub.add_parser("inverse", parents=[common], help="the preimage phi^-1(M)")
    p.add_argument("m", type=int)
    p.add_argument("--algorithm", choices=("scan", "construct", "verify"), default="construct")

    p = sub.add_parser("bound", parents=[common], help="Gupta's bound A(M)")
    p.add_argument("m", type=int)

    classify = sub.add_parser("classify", help="membership for a structured family")
    fam = classify.add_subparsers(dest="family", required=True, parser_class=_Parser)
    p = fam.add_parser("two-p", parents=[common])
    p.add_argument("p", type=int)
    p = fam.add_parser("two-p-k", parents=[common])
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p = fam.add_parser("pow2", parents=[common])
    p.add_argument("k", type=int)
    p = fam.add_parser("factorial", parents=[common])
    p.add_argument("n", type=int)

    scan = sub.add_parser("scan", help="bounded searches")
    kind = scan.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = kind.add_parser("sophie", parents=[common])
    p.add_argument("--limit", type=int, default=10_000)
    p = kind.add_parser("s-set", parents=[common])
    p.add_argument("p", type=int)
    p.add_argument("--limit", type=int, default=10_000)
    p = kind.add_parser("lehmer", parents=[common])
    p.add_argument("--limit", type=int, default=1_000_000)
    p = kind.add_parser("odd-doubles", parents=[common])
    p.add_argument("--limit", type=int, default=10_000)

    p = sub.add_parser("table", parents=[common], help="(m, A(m), phi(A(m))) rows")
    p.add_argument("--rows", type=_rows, default=list(gupta.DEFAULT_TABLE_ROWS))
    return parser


def _inverse(args):
    if args.algorithm == "scan":
        return inverse.preimage_report(args.m, gupta.scan_preimage(args.m))
    report = inverse.preimage_report(args.m)
    if args.algorithm == "verify":
        scanned = gupta.scan_preimage(args.m)
        if list(report.elements) != scanned:
            raise AlgorithmMismatch(
                f"construct gives {list(report.elements)}, scan gives {scanned}")
    return report


def dispatch(args):
    """Return (command name, parameters, result object) for parsed arguments."""
    cmd = args.command
    if cmd == "phi":
        return cmd, {"n": args.n}, TotientValue(args.n, phi(args.n))
    if cmd == "inverse":
        return cmd, {"m": args.m, "algorithm": args.algorithm}, _inverse(args)
    if cmd == "bound":
        return cmd, {"m": args.m}, gupta.gupta_bound(args.m)
    if cmd == "table":
        return cmd, {"rows": args.rows}, BoundTable(gupta.bound_table(args.rows))
    if cmd == "classify":
        name = f"classify {args.family}"
        if args.family == "two-p":
            return name, {"p": args.p}, families.classify_2p(args.p)
        if args.family == "two-p-k":
            return name, {"p": args.p, "k": args.k}, families.classify_2pk(args.p, args.k)
        if args.family == "pow2":
            return name, {"k": args.k}, families.pow2_preimage(args.k)
        return name, {"n": args.n}, families.factorial_witness(args.n)
    name = f"scan {args.kind}"
    if args.kind == "sophie":
        return name, {"limit": args.limit}, families.sophie_scan(args.limit)
    if args.kind == "s-set":
        return name, {"p": args.p, "limit": args.limit}, families.s_set(args.p, args.limit)
    if args.kind == "lehmer":
        values = inverse.lehmer_search(args.limit)
        return name, {"limit": args.limit}, Listing(f"lehmer({args.limit})", values)
    values = families.odd_doubles_in_image(args.limit)
    return name, {"limit": args.limit}, Listing(f"odd-doubles({args.limit})", values)


def document(command: str, parameters: dict, result, fmt: str) -> bytes:
    if fmt == "json":
        return dumps({"command": command, "parameters": parameters, "result": payload(result)}).encode()
    return render(result, fmt)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    try:
        command, parameters, result = dispatch(args)
    except (DomainError, OverflowError, UnknownStatusError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except AlgorithmMismatch as exc:
        print(f"mismatch: {exc}", file=stderr)
        return EXIT_MISMATCH
    out = document(command, parameters, result, args.format)
    stdout.write(out)
    stdout.flush()
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
