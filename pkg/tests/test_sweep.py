import csv
import io
import json
import math

import pytest

from hermite_multisect.core import SeriesControl
from hermite_multisect.errors import DomainError
from hermite_multisect.operators import TestFunction
from hermite_multisect.sweep import (FIELDS, TIMING_FIELDS, OutputRecord, SweepError,
                                     SweepSpec, default_spec, default_suite,
                                     evaluate_point, records_to_csv, records_to_jsonl,
                                     run_sweep, summarize, thread_count, verify)


def test_record_errors():
    rec = OutputRecord("S", 1, 0, 1j, None, 3 + 4j, 3 + 4j - 1e-3, 5)
    assert rec.abs_err == pytest.approx(1e-3)
    assert rec.rel_err == pytest.approx(1e-3 / 6)
    assert tuple(rec.to_dict()) == FIELDS


def test_spec_defaults():
    s = SweepSpec("S")
    assert s.js == [1, 2, 3, 4, 5, 6]
    assert len(s.zs) == 25
    assert s.xs == [None]
    assert s.ks_for(3) == [0, 1, 2, 3, 4, 5]
    assert len(s.points()) == sum(25 * (j + 3) for j in range(1, 7))
    g = default_spec("G")
    assert len(g.zs) == 9 and len(g.xs) == 5
    assert g.ks_for(5) == list(range(7))
    with pytest.raises(DomainError):
        SweepSpec("Q")


def test_k_points_ignore_js():
    spec = default_spec("K-odd")
    assert {(j, k) for j, k, _, _ in spec.points()} == {(2, 1)}
    assert max(abs(z) for z in spec.zs) <= 0.4


def test_evaluate_point_examples():
    rec = evaluate_point("S", 2, 0, 1 + 0j, None)
    assert rec.closed.real == pytest.approx(math.cosh(1), rel=1e-15)
    assert rec.abs_err <= 1e-15
    rec = evaluate_point("G", 1, 0, 0j, 3.0)
    assert rec.closed == 1
    rec = evaluate_point("I", 1, 0, 0.5 + 0.5j, 1.0, fn=TestFunction.monomial(2))
    assert rec.closed == pytest.approx((1.5 + 0.5j) ** 2)
    with pytest.raises(DomainError):
        evaluate_point("I", 2, 0, 0.5j, 0.0)


@pytest.mark.parametrize("family", ["S", "G", "K-even", "K-odd", "K-combined", "I"])
def test_default_sweeps_pass(family):
    report = verify(default_spec(family))
    assert report.passed, report.to_dict()
    assert report.grid_size == len(default_spec(family).points())


def test_suite_contains_gaussian_operator_sweep():
    suite = default_suite()
    assert [s.family for s in suite].count("I") == 2
    assert suite[-1].fn.kind == "gaussian"
    assert verify(suite[-1]).passed


def test_tolerance_override():
    report = verify(SweepSpec("S", js=[3], zs=[2 + 1j]), tolerance=1e-30)
    assert not report.passed
    assert report.tolerance == 1e-30


def test_sweep_error_names_point():
    spec = SweepSpec("K-even", zs=[0.1 + 0j, 0.5 + 0j], xs=[0.0])
    with pytest.raises(SweepError) as info:
        run_sweep(spec)
    assert info.value.point[2] == 0.5
    assert isinstance(info.value.cause, DomainError)


def test_truncation_cause():
    spec = SweepSpec("S", js=[1], ks=[0], zs=[30 + 0j], control=SeriesControl(max_terms=5))
    with pytest.raises(SweepError) as info:
        run_sweep(spec)
    assert type(info.value.cause).__name__ == "TruncationError"


def test_threads_keep_grid_order(monkeypatch):
    spec = default_spec("G")
    serial = run_sweep(spec, threads=1)
    parallel = run_sweep(spec, threads=4)
    strip = lambda recs: [{k: v for k, v in r.to_dict().items() if k not in TIMING_FIELDS}
                          for r in recs]
    assert strip(serial) == strip(parallel)
    monkeypatch.setenv("HERMITE_MULTISECT_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("HERMITE_MULTISECT_THREADS", "0")
    assert thread_count() >= 1
    monkeypatch.setenv("HERMITE_MULTISECT_THREADS", "many")
    with pytest.raises(DomainError):
        thread_count()
    monkeypatch.delenv("HERMITE_MULTISECT_THREADS")
    assert thread_count() == 1


def test_csv_round_trip_recomputes_abs_err():
    records = run_sweep(SweepSpec("G", js=[2, 3], ks=[0, 4], zs=[1 + 0.5j, -1.5 + 0j],
                                  xs=[-3.0, 0.7]))
    rows = list(csv.DictReader(io.StringIO(records_to_csv(records))))
    assert len(rows) == len(records)
    for row in rows:
        closed = complex(float(row["closed_re"]), float(row["closed_im"]))
        series = complex(float(row["series_re"]), float(row["series_im"]))
        assert abs(closed - series) == float(row["abs_err"])


def test_jsonl_matches_csv_fields():
    records = run_sweep(SweepSpec("S", js=[2], zs=[1j]))
    lines = records_to_jsonl(records).splitlines()
    assert len(lines) == 5
    for line in lines:
        obj = json.loads(line)
        assert tuple(obj) == FIELDS
        assert obj["x"] is None
        assert abs(complex(obj["closed_re"], obj["closed_im"])
                   - complex(obj["series_re"], obj["series_im"])) == obj["abs_err"]
    header = records_to_csv(records).splitlines()[0]
    assert header == ",".join(FIELDS)


def test_summarize_argmax():
    recs = [OutputRecord("G", 1, 0, 0j, 0.0, 1 + 0j, 1 + 0j, 1),
            OutputRecord("G", 2, 1, 0.5j, 1.0, 1 + 0j, 1 + 1e-10j, 4)]
    rep = summarize("G", recs)
    assert rep.argmax_params["j"] == 2
    assert rep.terms_used_max == 4
    assert rep.passed
