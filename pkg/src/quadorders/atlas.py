"""Grid census: classify Z + n*O_K over rectangles of (d, n) with checkpointed output.

Rows stream to CSV or JSONL in (d, n) order, one checkpoint per completed d,
so an interrupted scan can resume and produce a byte-identical file.  Workers
parallelise over d; rows are rendered inside the worker and written by the
parent in submission order, which keeps the output independent of the worker
count.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from multiprocessing import get_context

from .arith import is_squarefree
from .classify import ClassificationRecord, OrderSpec, classify_order
from .oracle import (
    OracleBoundError,
    brute_associated,
    brute_ideal_preserving,
    brute_locally_associated,
)
from .pell import fundamental_unit
from .quadfield import make_field

CSV_HEADER = "d,n,D,m,L,ideal_preserving,locally_associated,associated,h_maximal,h_order,hfd"
FIELD_NAMES = tuple(CSV_HEADER.split(","))
_BOOL_FIELDS = ("ideal_preserving", "locally_associated", "associated", "hfd")


class ScanVerificationError(RuntimeError):
    """An oracle disagreed with a closed-form classification during --verify."""


@dataclass(slots=True)
class ScanConfig:
    d_min: int
    d_max: int
    n_max: int
    out: str
    n_min: int = 2
    fmt: str = "csv"
    resume: bool = False
    jobs: int = 1
    verify: bool = False


@dataclass(slots=True)
class Checkpoint:
    last_d: int
    rows: int
    hfd: int


@dataclass(slots=True)
class ScanSummary:
    records: int
    hfd: int
    elapsed: float


@dataclass(slots=True)
class HfdReport:
    total: int
    per_d: dict[int, int]


def record_to_csv_row(rec: ClassificationRecord) -> str:
    return (
        f"{rec.d},{rec.n},{rec.D},{rec.m},{rec.L},"
        f"{int(rec.ideal_preserving)},{int(rec.locally_associated)},"
        f"{int(rec.associated)},{rec.h_maximal},{rec.h_order},{int(rec.hfd)}"
    )


def record_to_json_obj(rec: ClassificationRecord) -> dict:
    return {
        "d": rec.d,
        "n": rec.n,
        "D": rec.D,
        "m": rec.m,
        "L": rec.L,
        "ideal_preserving": rec.ideal_preserving,
        "locally_associated": rec.locally_associated,
        "associated": rec.associated,
        "h_maximal": rec.h_maximal,
        "h_order": rec.h_order,
        "hfd": rec.hfd,
    }


def _verify_cell(rec: ClassificationRecord) -> None:
    F = make_field(rec.d)
    U = fundamental_unit(F)
    checks = (
        ("locally_associated", brute_locally_associated, rec.locally_associated),
        ("associated", brute_associated, rec.associated),
    )
    for name, fn, claimed in checks:
        try:
            got = fn(F, U, rec.n)
        except OracleBoundError:
            continue
        if got != claimed:
            raise ScanVerificationError(
                f"{name} mismatch at d={rec.d}, n={rec.n}: closed-form {claimed}, oracle {got}"
            )
    try:
        got = brute_ideal_preserving(F, rec.n)
    except OracleBoundError:
        return
    if got != rec.ideal_preserving:
        raise ScanVerificationError(
            f"ideal_preserving mismatch at d={rec.d}, n={rec.n}: "
            f"closed-form {rec.ideal_preserving}, oracle {got}"
        )


def _scan_one_d(task: tuple[int, int, int, str, bool]) -> tuple[int, list[str], int]:
    d, n_min, n_max, fmt, verify = task
    rows: list[str] = []
    hfd = 0
    for n in range(n_min, n_max + 1):
        rec = classify_order(OrderSpec(d, n))
        if verify:
            _verify_cell(rec)
        if fmt == "csv":
            rows.append(record_to_csv_row(rec))
        else:
            rows.append(json.dumps(record_to_json_obj(rec), separators=(",", ":")))
        if rec.hfd and n > 1:
            hfd += 1
    return d, rows, hfd


def checkpoint_path(out: str) -> str:
    return out + ".checkpoint"


def _write_checkpoint(path: str, ck: Checkpoint) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"d={ck.last_d}\nrows={ck.rows}\nhfd={ck.hfd}\n")
    os.replace(tmp, path)


def read_checkpoint(path: str) -> Checkpoint:
    with open(path) as fh:
        lines = fh.read().splitlines()
    try:
        fields = dict(line.split("=", 1) for line in lines if line)
        return Checkpoint(int(fields["d"]), int(fields["rows"]), int(fields["hfd"]))
    except (KeyError, ValueError) as exc:
        raise RuntimeError(f"malformed checkpoint file {path}") from exc


def _truncate_output(path: str, fmt: str, data_rows: int) -> None:
    """Cut the output back to the checkpointed prefix (header plus data_rows lines)."""
    keep = data_rows + (1 if fmt == "csv" else 0)
    offset = 0
    count = 0
    with open(path, "rb") as fh:
        for line in fh:
            count += 1
            offset += len(line)
            if count == keep:
                break
    if count < keep:
        raise RuntimeError(
            f"output file {path} has {count} lines, checkpoint claims {keep}"
        )
    with open(path, "r+b") as fh:
        fh.truncate(offset)


def _squarefree_range(d_min: int, d_max: int) -> list[int]:
    return [
        d
        for d in range(d_min, d_max + 1)
        if d not in (0, 1) and is_squarefree(d)
    ]


def scan(cfg: ScanConfig) -> ScanSummary:
    t0 = time.perf_counter()
    if cfg.fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown format {cfg.fmt!r}")
    if cfg.jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {cfg.jobs}")
    if cfg.n_min < 1:
        raise ValueError(f"n_min must be >= 1, got {cfg.n_min}")
    ds = _squarefree_range(cfg.d_min, cfg.d_max)
    if not ds or cfg.n_min > cfg.n_max:
        return ScanSummary(0, 0, time.perf_counter() - t0)

    rows_written = 0
    hfd_count = 0
    mode = "w"
    ck_path = checkpoint_path(cfg.out)
    if cfg.resume and os.path.exists(ck_path) and os.path.exists(cfg.out):
        ck = read_checkpoint(ck_path)
        _truncate_output(cfg.out, cfg.fmt, ck.rows)
        rows_written, hfd_count = ck.rows, ck.hfd
        ds = [d for d in ds if d > ck.last_d]
        mode = "a"
        if not ds:
            return ScanSummary(rows_written, hfd_count, time.perf_counter() - t0)
    elif os.path.exists(ck_path):
        os.remove(ck_path)

    tasks = [(d, cfg.n_min, cfg.n_max, cfg.fmt, cfg.verify) for d in ds]
    with open(cfg.out, mode, newline="") as fh:
        if mode == "w" and cfg.fmt == "csv":
            fh.write(CSV_HEADER + "\n")
            fh.flush()
        if cfg.jobs == 1:
            results = map(_scan_one_d, tasks)
            for d, rows, hfd_d in results:
                rows_written, hfd_count = _emit(
                    fh, ck_path, d, rows, hfd_d, rows_written, hfd_count
                )
        else:
            ctx = get_context("fork")
            with ctx.Pool(cfg.jobs) as pool:
                for d, rows, hfd_d in pool.imap(_scan_one_d, tasks, chunksize=1):
                    rows_written, hfd_count = _emit(
                        fh, ck_path, d, rows, hfd_d, rows_written, hfd_count
                    )
    return ScanSummary(rows_written, hfd_count, time.perf_counter() - t0)


def _emit(fh, ck_path, d, rows, hfd_d, rows_written, hfd_count):
    fh.write("\n".join(rows) + "\n")
    fh.flush()
    rows_written += len(rows)
    hfd_count += hfd_d
    _write_checkpoint(ck_path, Checkpoint(d, rows_written, hfd_count))
    return rows_written, hfd_count


def _parse_csv_row(line: str, lineno: int) -> dict:
    parts = line.split(",")
    if len(parts) != len(FIELD_NAMES):
        raise ValueError(f"line {lineno}: expected {len(FIELD_NAMES)} fields, got {len(parts)}")
    row = {}
    for name, part in zip(FIELD_NAMES, parts):
        try:
            value = int(part)
        except ValueError:
            raise ValueError(f"line {lineno}: field {name} is not an integer: {part!r}") from None
        if name in _BOOL_FIELDS and value not in (0, 1):
            raise ValueError(f"line {lineno}: field {name} must be 0 or 1, got {value}")
        row[name] = value
    return row


def _parse_jsonl_row(line: str, lineno: int) -> dict:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {lineno}: invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != set(FIELD_NAMES):
        raise ValueError(f"line {lineno}: unexpected fields")
    for name in FIELD_NAMES:
        v = obj[name]
        ok = isinstance(v, bool) if name in _BOOL_FIELDS else (
            isinstance(v, int) and not isinstance(v, bool)
        )
        if not ok:
            raise ValueError(f"line {lineno}: field {name} has wrong type")
    return obj


def report_hfd(path: str) -> HfdReport:
    """Count hfd-true rows with n > 1, with a per-d breakdown, from a scan file."""
    total = 0
    per_d: dict[int, int] = {}
    with open(path) as fh:
        first = fh.readline()
        if not first:
            return HfdReport(0, {})
        stripped = first.rstrip("\n")
        if stripped == CSV_HEADER:
            parse, start = _parse_csv_row, 2
        elif stripped.startswith("{"):
            parse, start = _parse_jsonl_row, 1
            fh.seek(0)
        else:
            raise ValueError("line 1: neither the CSV header nor a JSONL object")
        for lineno, line in enumerate(fh, start=start):
            line = line.rstrip("\n")
            if not line:
                raise ValueError(f"line {lineno}: blank line")
            row = parse(line, lineno)
            if row["hfd"] and row["n"] > 1:
                total += 1
                per_d[row["d"]] = per_d.get(row["d"], 0) + 1
    return HfdReport(total, per_d)
