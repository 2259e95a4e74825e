"""
Command-line front end.

    python -m src.cli field   --p 5 --e 2
    python -m src.cli check   --p 5 --e 1 --poly "0,1,1,3"
    python -m src.cli dickson --p 7 --e 1 --n 9 --k 3
    python -m src.cli scan    --family trinomial --p-list 5,7 --e-max 2
    python -m src.cli verify  --theorem thm4.1 --e-max 3 --l-max 13

Exit codes: 0 success / agreement / permutation, 1 disagreement or not a
permutation, 2 usage or malformed input, 3 a field over the configured cap.
"""

import argparse
import io
import json
import logging
import sys
from typing import Any, Dict, Optional, Sequence

import pandas as pd
from tabulate import tabulate

from src.algebra.dickson import DicksonParams, dickson_poly
from src.algebra.galois_field import FieldSpec, build_field, format_modulus, parse_element, parse_modulus
from src.algebra.polynomial import format_poly, parse_poly
from src.criteria.permutation_tests import DEFAULT_HERMITE_CAP, METHODS, check_permutation
from src.utils.errors import CapExceededError, OracleDisagreementError, WorkbenchError
from src.utils.helpers import parse_int_range
from src.utils.logging_utils import setup_logging
from src.verification.report_collector import FORMATS
from src.verification.scan_runner import ScanRunner
from src.verification.theorems import FAMILIES, THEOREMS, Grid

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default: text on a terminal, json otherwise)")
    common.add_argument("--q-cap", type=int, default=None, help="largest field order to accept")
    common.add_argument("--hermite-cap", type=int, default=None,
                        help="largest field order for Hermite's criterion")
    common.add_argument("--config", type=str, default=None, help="YAML configuration file")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log to stderr (-v info, -vv debug)")
    return common


def _field_parser() -> argparse.ArgumentParser:
    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    field.add_argument("--e", type=int, default=1, help="extension degree")
    field.add_argument("--modulus", type=str, default=None,
                       help='ascending monic modulus coefficients, e.g. "2,1,1"')
    return field


def build_parser() -> argparse.ArgumentParser:
    common, field = _common_parser(), _field_parser()
    parser = argparse.ArgumentParser(
        prog="dickson-workbench",
        description="Permutation behaviour of reversed Dickson polynomials over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common, field], help="construct GF(p^e) and print its modulus")

    check = sub.add_parser("check", parents=[common, field], help="test whether a polynomial permutes GF(q)")
    check.add_argument("--poly", type=str, required=True, help='ascending coefficient codes, e.g. "0,1,1,3"')
    check.add_argument("--method", choices=METHODS, default="brute")

    dickson = sub.add_parser("dickson", parents=[common, field], help="generate D_{n,k}(a, x)")
    dickson.add_argument("--n", type=int, required=True)
    dickson.add_argument("--k", type=int, required=True)
    dickson.add_argument("--a", type=str, default=None, help="element code of a (default 1)")
    dickson.add_argument("--unreduced", action="store_true", help="print D_{n,k} before folding mod x^q - x")
    dickson.add_argument("--check", action="store_true", help="also report whether it permutes GF(q)")

    scan = sub.add_parser("scan", parents=[common], help="verify a family over a parameter grid")
    scan.add_argument("--family", choices=FAMILIES, required=True)
    scan.add_argument("--p-list", type=str, required=True, help='primes, e.g. "5,7"')
    scan.add_argument("--e-max", type=int, default=2)
    scan.add_argument("--l-max", type=int, default=None, help="largest l (default: family period)")
    scan.add_argument("--l", type=int, default=None, help="a single l instead of a range")
    scan.add_argument("--k", type=str, default=None, help='restrict k, e.g. "1,3" or "1-5"')
    scan.add_argument("--method", choices=METHODS, default="brute")
    scan.add_argument("--workers", type=int, default=None)

    verify = sub.add_parser("verify", parents=[common], help="verify a named classification")
    verify.add_argument("--theorem", choices=list(THEOREMS), required=True)
    verify.add_argument("--p-list", type=str, default=None)
    verify.add_argument("--e-max", type=int, default=None)
    verify.add_argument("--l-max", type=int, default=None)
    verify.add_argument("--method", choices=METHODS, default="brute")
    verify.add_argument("--workers", type=int, default=None)
    return parser


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _resolve_format(args: argparse.Namespace, config: Dict[str, Any], stream) -> str:
    if args.format:
        return args.format
    if config["output"].get("format"):
        return config["output"]["format"]
    return "text" if getattr(stream, "isatty", lambda: False)() else "json"


def _render_record(record: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "jsonl":
        return json.dumps(record) + "\n"
    flat = {k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in record.items()}
    if fmt == "csv":
        buffer = io.StringIO()
        pd.DataFrame([flat]).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    return tabulate(list(flat.items()), tablefmt="plain") + "\n"


def _field_from(args: argparse.Namespace, q_cap: int) -> FieldSpec:
    modulus = parse_modulus(args.modulus) if args.modulus else None
    if args.e >= 1 and args.p ** args.e > q_cap:
        raise CapExceededError(args.p ** args.e, q_cap)
    return build_field(args.p, args.e, modulus)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_field(args, runner: ScanRunner, fmt: str, out) -> int:
    F = _field_from(args, runner.cell_options(q_cap=args.q_cap).q_cap)
    out.write(_render_record({"p": F.p, "e": F.e, "q": F.q, "modulus": format_modulus(F)}, fmt))
    return EXIT_OK


def _cmd_check(args, runner: ScanRunner, fmt: str, out) -> int:
    # single checks get the library's Hermite cap; the tighter config cap is for grid cells
    hermite_cap = args.hermite_cap if args.hermite_cap is not None else DEFAULT_HERMITE_CAP
    options = runner.cell_options(args.method, args.q_cap, hermite_cap)
    F = _field_from(args, options.q_cap)
    f = parse_poly(F, args.poly)
    verdict = check_permutation(f, F, args.method, options.hermite_cap)
    record = {"q": F.q, "modulus": format_modulus(F), "poly": format_poly(f), "method": args.method}
    record.update(verdict.to_dict())
    out.write(_render_record(record, fmt))
    return EXIT_OK if verdict.is_permutation else EXIT_FAIL


def _cmd_dickson(args, runner: ScanRunner, fmt: str, out) -> int:
    options = runner.cell_options(q_cap=args.q_cap)
    F = _field_from(args, options.q_cap)
    a = parse_element(F, args.a) if args.a is not None else None
    f = dickson_poly(DicksonParams(args.n, args.k, a), F, reduce=not args.unreduced,
                     exact_limit=options.exact_limit)
    record = {"q": F.q, "n": args.n, "k": args.k, "a": a.code if a is not None else 1,
              "reduced": not args.unreduced, "poly": format_poly(f)}
    if args.check:
        record.update(check_permutation(f, F, "brute").to_dict())
    out.write(_render_record(record, fmt))
    return EXIT_OK


def _finish_reports(runner: ScanRunner, fmt: str, out) -> int:
    out.write(runner.collector.render(fmt))
    failures = runner.collector.failures()
    for r in failures:
        sys.stderr.write(f"disagreement: {r.family} p={r.params.p} e={r.params.e} "
                         f"l={r.params.l} k={r.params.k} predicted={r.predicted} observed={r.observed}\n")
    broken_periods = runner.periodicity_failures()
    return EXIT_OK if not failures and not broken_periods else EXIT_FAIL


def _l_values(args) -> Optional[list]:
    if args.l is not None:
        return [args.l]
    return None if args.l_max is None else list(range(args.l_max + 1))


def _cmd_scan(args, runner: ScanRunner, fmt: str, out) -> int:
    grid = Grid(
        p_list=parse_int_range(args.p_list, "prime list"),
        e_list=list(range(1, args.e_max + 1)),
        l_list=_l_values(args),
        k_list=None if args.k is None else parse_int_range(args.k, "k list"),
    )
    runner.run_scan(grid, args.family, args.method, args.q_cap, args.workers, args.hermite_cap)
    return _finish_reports(runner, fmt, out)


def _cmd_verify(args, runner: ScanRunner, fmt: str, out) -> int:
    p_list = parse_int_range(args.p_list, "prime list") if args.p_list else None
    runner.run_theorem(args.theorem, p_list, args.e_max, args.l_max, args.method, args.q_cap, args.workers,
                       args.hermite_cap)
    return _finish_reports(runner, fmt, out)


COMMANDS = {
    "field": _cmd_field,
    "check": _cmd_check,
    "dickson": _cmd_dickson,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging({0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG))
    try:
        runner = ScanRunner(config_path=args.config)
        fmt = _resolve_format(args, runner.config, out)
        return COMMANDS[args.command](args, runner, fmt, out)
    except CapExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except OracleDisagreementError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except WorkbenchError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
