import json
import os

import pytest

from quadorders import (
    Checkpoint,
    OrderSpec,
    ScanConfig,
    classify_order,
    record_to_csv_row,
    record_to_json_obj,
    report_hfd,
    scan,
)
from quadorders.atlas import CSV_HEADER, checkpoint_path, read_checkpoint


def small_cfg(out, **kw):
    base = dict(d_min=2, d_max=10, n_max=10, out=str(out))
    base.update(kw)
    return ScanConfig(**base)


def test_scan_small_grid(tmp_path):
    out = tmp_path / "grid.csv"
    summary = scan(small_cfg(out))
    # six squarefree d in [2, 10], nine n each
    assert summary.records == 54
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 55
    assert lines[1] == "2,2,8,2,2,0,1,0,1,1,0"
    # rows ordered by (d, n)
    keys = [tuple(map(int, ln.split(",")[:2])) for ln in lines[1:]]
    assert keys == sorted(keys)
    ck = read_checkpoint(checkpoint_path(str(out)))
    assert ck == Checkpoint(10, 54, summary.hfd)


def test_rows_match_classifier(tmp_path):
    out = tmp_path / "grid.csv"
    scan(small_cfg(out))
    for line in out.read_text().splitlines()[1:]:
        d, n = map(int, line.split(",")[:2])
        assert line == record_to_csv_row(classify_order(OrderSpec(d, n)))


def test_scan_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    scan(small_cfg(a))
    scan(small_cfg(b))
    assert a.read_bytes() == b.read_bytes()


def test_scan_worker_count_invariance(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    scan(small_cfg(a, jobs=1))
    scan(small_cfg(b, jobs=3))
    assert a.read_bytes() == b.read_bytes()


def test_resume_is_byte_identical(tmp_path):
    full, part = tmp_path / "full.csv", tmp_path / "part.csv"
    scan(ScanConfig(d_min=2, d_max=15, n_max=8, out=str(full)))
    # stop after d = 7, then resume over the whole window
    scan(ScanConfig(d_min=2, d_max=7, n_max=8, out=str(part)))
    summary = scan(ScanConfig(d_min=2, d_max=15, n_max=8, out=str(part), resume=True))
    assert full.read_bytes() == part.read_bytes()
    assert summary.records == len(full.read_text().splitlines()) - 1


def test_resume_discards_partial_tail(tmp_path):
    out = tmp_path / "grid.csv"
    scan(small_cfg(out))
    ck = read_checkpoint(checkpoint_path(str(out)))
    # simulate rows written past the last durable checkpoint
    with open(out, "a") as fh:
        fh.write("11,2,44,1,1,0,0,0,1,1,0\ngarbage-not-even-csv\n")
    reference = scan(small_cfg(tmp_path / "ref.csv", d_max=15))
    summary = scan(small_cfg(out, d_max=15, resume=True))
    assert (tmp_path / "ref.csv").read_bytes() == out.read_bytes()
    assert summary.records == reference.records


def test_jsonl_round_trip(tmp_path):
    out = tmp_path / "grid.jsonl"
    scan(small_cfg(out, fmt="jsonl"))
    lines = out.read_text().splitlines()
    assert len(lines) == 54
    for line in lines:
        obj = json.loads(line)
        rec = classify_order(OrderSpec(obj["d"], obj["n"]))
        assert obj == record_to_json_obj(rec)
    assert report_hfd(str(out)).total == report_hfd_total_csv(tmp_path)


def report_hfd_total_csv(tmp_path):
    out = tmp_path / "cmp.csv"
    scan(small_cfg(out))
    return report_hfd(str(out)).total


def test_empty_window_writes_nothing(tmp_path):
    out = tmp_path / "none.csv"
    summary = scan(ScanConfig(d_min=2, d_max=10, n_max=1, n_min=2, out=str(out)))
    assert summary.records == 0
    assert not out.exists()
    summary = scan(ScanConfig(d_min=99, d_max=99, n_max=10, out=str(out)))
    assert summary.records == 0 and not out.exists()


def test_verify_mode_small_window(tmp_path):
    out = tmp_path / "v.csv"
    summary = scan(ScanConfig(d_min=-6, d_max=6, n_max=8, out=str(out), verify=True))
    assert summary.records > 0


def test_report_counts_and_histogram(tmp_path):
    out = tmp_path / "grid.csv"
    summary = scan(ScanConfig(d_min=-30, d_max=-2, n_max=20, out=str(out)))
    rep = report_hfd(str(out))
    # the only imaginary hfd order with n > 1 is (-3, 2)
    assert rep.total == 1 == summary.hfd
    assert rep.per_d == {-3: 1}


def test_report_rejects_malformed_rows(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text(CSV_HEADER + "\n2,2,8,2,2,0,1,0,1,1\n")
    with pytest.raises(ValueError, match="line 2"):
        report_hfd(str(bad))
    bad.write_text(CSV_HEADER + "\n2,2,8,2,2,0,1,0,1,1,7\n")
    with pytest.raises(ValueError, match="line 2"):
        report_hfd(str(bad))
    bad.write_text(CSV_HEADER + "\n2,2,8,2,2,0,1,0,1,1,1\nx,y\n")
    with pytest.raises(ValueError, match="line 3"):
        report_hfd(str(bad))
    bad.write_text("not,a,header\n")
    with pytest.raises(ValueError, match="line 1"):
        report_hfd(str(bad))
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert report_hfd(str(empty)).total == 0


def test_report_rejects_malformed_jsonl(tmp_path):
    bad = tmp_path / "bad.jsonl"
    rec = classify_order(OrderSpec(2, 2))
    good_line = json.dumps(record_to_json_obj(rec))
    bad.write_text(good_line + "\n{broken\n")
    with pytest.raises(ValueError, match="line 2"):
        report_hfd(str(bad))
    obj = record_to_json_obj(rec)
    obj["hfd"] = 1  # wrong type: must be boolean
    bad.write_text(json.dumps(obj) + "\n")
    with pytest.raises(ValueError, match="line 1"):
        report_hfd(str(bad))


def test_scan_validation(tmp_path):
    with pytest.raises(ValueError):
        scan(ScanConfig(d_min=2, d_max=4, n_max=4, out=str(tmp_path / "x"), fmt="tsv"))
    with pytest.raises(ValueError):
        scan(ScanConfig(d_min=2, d_max=4, n_max=4, out=str(tmp_path / "x"), jobs=0))
