"""Command-line entry point.

Subcommands: classify, unit, lfun, classnum, verify, scan, report.
Exit codes: 0 success, 1 verification or internal failure, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import InternalConsistencyError
from .atlas import (
    ScanConfig,
    ScanVerificationError,
    record_to_json_obj,
    report_hfd,
    scan,
)
from .classgroup import class_number
from .classify import (
    OrderSpec,
    classify_order,
    is_associated,
    is_ideal_preserving,
    is_locally_associated,
)
from .lfun import l_value
from .oracle import (
    OracleBoundError,
    brute_associated,
    brute_ideal_preserving,
    brute_locally_associated,
)
from .pell import FundamentalUnit, fundamental_unit, verify_unit
from .quadfield import FieldContext, OmegaKind, make_field


def _sqrt_expr(x: int, y: int, d: int) -> str:
    if y == 0:
        return str(x)
    root = f"√{d}"
    if y == 1:
        ypart = root
    elif y == -1:
        ypart = f"-{root}"
    else:
        ypart = f"{y}{root}"
    if x == 0:
        return ypart
    sign = "+" if y > 0 else ""
    return f"{x}{sign}{ypart}"


def format_unit(F: FieldContext, U: FundamentalUnit) -> str:
    if F.omega_kind is OmegaKind.HALF:
        x, y = 2 * U.u.a + U.u.b, U.u.b
        if x == 0 and y == 0:
            raise ValueError("zero is not a unit")
        body = f"({_sqrt_expr(x, y, F.d)})/2"
    else:
        body = _sqrt_expr(U.u.a, U.u.b, F.d)
    return body


def _bool_word(v: bool) -> str:
    return "true" if v else "false"


def cmd_classify(args: argparse.Namespace) -> int:
    rec = classify_order(OrderSpec(args.d, args.n))
    if args.json:
        print(json.dumps(record_to_json_obj(rec), separators=(",", ":")))
        return 0
    print(f"d={rec.d} n={rec.n} D={rec.D}")
    print(
        f"m={rec.m} L={rec.L} ip={int(rec.ideal_preserving)} "
        f"la={int(rec.locally_associated)} assoc={int(rec.associated)}"
    )
    print(f"h_maximal={rec.h_maximal} h_order={rec.h_order} hfd={int(rec.hfd)}")
    return 0


def cmd_unit(args: argparse.Namespace) -> int:
    F = make_field(args.d)
    U = fundamental_unit(F)
    if not verify_unit(F, U):
        print(f"error: unit for d={args.d} failed verification", file=sys.stderr)
        return 1
    extra = f", torsion order {U.torsion_order}" if F.d < 0 else ""
    print(f"{format_unit(F, U)}, norm {U.norm_sign}{extra}")
    return 0


def cmd_lfun(args: argparse.Namespace) -> int:
    print(l_value(args.n, args.d))
    return 0


def cmd_classnum(args: argparse.Namespace) -> int:
    F = make_field(args.d)
    U = fundamental_unit(F)
    C = class_number(F, U)
    h_plus = "-" if C.h_plus is None else str(C.h_plus)
    print(f"D={C.D} h={C.h} h_plus={h_plus} unit_norm={C.unit_norm_sign}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    spec = OrderSpec(args.d, args.n)
    F = make_field(spec.d)
    U = fundamental_unit(F)
    la, ip, assoc = is_locally_associated(spec), is_ideal_preserving(spec), is_associated(spec)
    bla = brute_locally_associated(F, U, spec.n)
    bip = brute_ideal_preserving(F, spec.n)
    bassoc = brute_associated(F, U, spec.n)
    ok = (la, ip, assoc) == (bla, bip, bassoc)
    print(
        f"{'OK' if ok else 'MISMATCH'} "
        f"(la: closed-form={_bool_word(la)} oracle={_bool_word(bla)}; "
        f"ip: {_bool_word(ip)}/{_bool_word(bip)}; "
        f"assoc: {_bool_word(assoc)}/{_bool_word(bassoc)})"
    )
    return 0 if ok else 1


def cmd_scan(args: argparse.Namespace) -> int:
    cfg = ScanConfig(
        d_min=args.d_min,
        d_max=args.d_max,
        n_max=args.n_max,
        out=args.out,
        n_min=args.n_min,
        fmt=args.format,
        resume=args.resume,
        jobs=args.jobs,
        verify=args.verify,
    )
    summary = scan(cfg)
    print(
        f"records={summary.records} hfd={summary.hfd} "
        f"elapsed={summary.elapsed:.2f}s out={cfg.out}"
    )
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    try:
        rep = report_hfd(args.path)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"hfd_total={rep.total}")
    for d in sorted(rep.per_d):
        print(f"d={d} hfd={rep.per_d[d]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadorders",
        description="Classify orders Z + n*O_K in quadratic number fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the order of index n in Q(sqrt(d))")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="emit the record as JSON")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("unit", help="fundamental unit of the maximal order")
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(fn=cmd_unit)

    p = sub.add_parser("lfun", help="value of L(n, d)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(fn=cmd_lfun)

    p = sub.add_parser("classnum", help="class number of the maximal order")
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(fn=cmd_classnum)

    p = sub.add_parser("verify", help="compare closed forms against brute-force oracles")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("scan", help="classify a (d, n) grid into CSV or JSONL")
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--resume", action="store_true", help="continue from the checkpoint")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verify", action="store_true", help="oracle-check cells within bounds")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("report", help="summarise hfd counts from a scan file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except OracleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ScanVerificationError, InternalConsistencyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
