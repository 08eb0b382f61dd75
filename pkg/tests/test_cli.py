import csv
import json
import math
import os
import subprocess
import sys

import pytest

from hermite_multisect.cli import main, parse_complex, parse_int_list
from hermite_multisect.sweep import FIELDS, TIMING_FIELDS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_parsers():
    assert parse_complex("1+0i") == 1
    assert parse_complex("-2.5-3i") == -2.5 - 3j
    assert parse_complex("0.5i") == 0.5j
    assert parse_int_list("1..4,7") == [1, 2, 3, 4, 7]


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--family", "S", "--j", "2", "--k", "0", "--z", "1+0i")
    assert code == 0
    rec = json_lines(out)[0]
    assert tuple(rec) == FIELDS
    assert rec["closed_re"] == pytest.approx(math.cosh(1), rel=1e-15)

    code, out, _ = run(capsys, "eval", "--family", "G", "--j", "1", "--k", "0",
                       "--z", "0", "--x", "3")
    assert code == 0 and json_lines(out)[0]["closed_re"] == 1

    code, out, _ = run(capsys, "eval", "--family", "K-combined", "--z", "0.2+0i", "--x", "1")
    assert code == 0 and json_lines(out)[0]["rel_err"] <= 1e-10


def test_eval_operator(capsys):
    code, out, _ = run(capsys, "eval", "--family", "I", "--j", "3", "--a", "0.5",
                       "--x", "1", "--fn", "poly:0,0,0,1")
    assert code == 0
    assert json_lines(out)[0]["series_re"] == 1.75


def test_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--family", "S")
    assert code == 0 and json_lines(out)[0]["passed"]

    code, out, _ = run(capsys, "verify", "--family", "S", "--tol", "1e-16")
    assert code == 1
    report = json_lines(out)[0]
    assert report["passed"] is False and report["max_rel_err"] > 1e-16

    target = tmp_path / "k.csv"
    code, out, err = run(capsys, "table", "--family", "K-even", "--z", "0.2,0.5",
                         "--out", str(target))
    assert code == 2 and "0.5" in err
    assert not target.exists() and os.listdir(tmp_path) == []

    code, _, err = run(capsys, "table", "--family", "S", "--out",
                       str(tmp_path / "missing" / "s.csv"))
    assert code == 2 and "cannot write" in err

    code, _, err = run(capsys, "eval", "--family", "S", "--j", "1", "--k", "0",
                       "--z", "30", "--max-terms", "5")
    assert code == 3 and "partial" in err

    code, _, _ = run(capsys, "eval", "--family", "K-even", "--z", "0.5i", "--x", "0")
    assert code == 2


def test_g_verify_covers_head_correction(capsys):
    code, out, _ = run(capsys, "verify", "--family", "G")
    assert code == 0
    assert json_lines(out)[0]["grid_size"] == 5 * 9 * sum(j + 2 for j in range(1, 6))


def test_table_row_counts(capsys, tmp_path):
    grid = ["--j", "3", "--k", "0,1,4", "--z", "0.3,1+0.5i,-1.5", "--x=-1,0,2"]
    code, _, _ = run(capsys, "table", "--family", "G", *grid, "--out", str(tmp_path / "g.csv"))
    assert code == 0
    with open(tmp_path / "g.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == FIELDS and len(rows) == 28

    code, _, _ = run(capsys, "table", "--family", "G", *grid, "--format", "jsonl",
                     "--out", str(tmp_path / "g.jsonl"))
    assert code == 0
    lines = (tmp_path / "g.jsonl").read_text().splitlines()
    assert len(lines) == 27
    assert all(isinstance(json.loads(line), dict) for line in lines)


def _strip_timing_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [[r[f] for f in FIELDS if f not in TIMING_FIELDS] for r in rows]


def _strip_timing_jsonl(path):
    objs = [json.loads(line) for line in open(path)]
    return [json.dumps({k: v for k, v in o.items() if k not in TIMING_FIELDS}) for o in objs]


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_table_determinism(capsys, tmp_path, fmt, monkeypatch):
    outputs = []
    for n, threads in enumerate(("1", "4")):
        monkeypatch.setenv("HERMITE_MULTISECT_THREADS", threads)
        path = tmp_path / f"s{n}.{fmt}"
        assert run(capsys, "table", "--family", "S", "--format", fmt, "--out", str(path))[0] == 0
        outputs.append(_strip_timing_csv(path) if fmt == "csv" else _strip_timing_jsonl(path))
    assert outputs[0] == outputs[1]


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--family", "S", "--j", "4", "--k", "1",
                       "--z", "2", "--reps", "1000")
    assert code == 0
    rep = json_lines(out)[0]
    assert rep["closed"]["median_ns"] > 0 and rep["series"]["median_ns"] > 0
    assert rep["closed"]["iqr_ns"] >= 0

    code, out, _ = run(capsys, "bench", "--family", "G", "--j", "2", "--k", "0",
                       "--z", "1.5", "--x", "2", "--reps", "5")
    assert code == 0 and json_lines(out)[0]["terms_used"] >= 10

    code, out, _ = run(capsys, "bench", "--family", "I", "--j", "3", "--a", "0.4",
                       "--x", "0.5", "--fn", "poly:0,0,0,0,0,0,1",
                       "--rule-order", "20,40,80", "--reps", "3")
    assert code == 0
    runs = json_lines(out)[0]["runs"]
    assert [r["rule_order"] for r in runs] == [20, 40, 80]
    assert all(r["closed"]["median_ns"] > 0 for r in runs)

    assert run(capsys, "bench", "--family", "S", "--reps", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hermite_multisect", "eval", "--family", "S",
                           "--j", "3", "--k", "0", "--z", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms_used"] >= 1
