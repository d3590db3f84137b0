import csv
import json
from dataclasses import replace

import pytest

from hypersum import cli
from hypersum.errors import DomainTooThinError
from hypersum.harness import (
    RunConfig,
    SampleStats,
    _eval_bound,
    load_boxes,
    run,
    sample_domain,
    select,
    to_json,
    write_csv,
)
from hypersum.identities import ParamPoint, get, registry

STAMP = "1970-01-01T00:00:00+00:00"


def test_every_identity_has_a_box():
    boxes = load_boxes()["identities"]
    for ident in registry():
        assert ident.id in boxes


def test_bound_expressions():
    assert _eval_bound("a+0.2", {"a": 1.0}) == pytest.approx(1.2)
    assert _eval_bound("-v*c", {"v": 2.0, "c": 0.5}) == -1.0
    assert _eval_bound("abs(a)+0.2", {"a": -1.0}) == pytest.approx(1.2)
    with pytest.raises(ValueError):
        _eval_bound("__import__('os')", {})


def test_thm10_box():
    pts = sample_domain(get("thm10_3F2_neg1_sec_beta"), 42, 50)
    assert len(pts) == 50
    for p in pts:
        assert 0.1 < p.a < 1.9 and p.b > p.a + 0.2
        assert p.b - p.a > 0 and p.b + p.a > 0


def test_sampling_is_deterministic():
    ident = get("thm4_7F6_pos1")
    assert sample_domain(ident, 7, 25) == sample_domain(ident, 7, 25)
    assert sample_domain(ident, 7, 25) != sample_domain(ident, 8, 25)


def test_thm4_covers_both_regimes():
    pts = sample_domain(get("thm4_7F6_pos1"), 42, 25)
    assert any(abs(p.a) > abs(p.b) for p in pts)
    assert any(abs(p.a) < abs(p.b) for p in pts)


def test_conditional_exclusion_is_counted():
    stats = SampleStats()
    pts = sample_domain(get("thm7_8F7_neg1"), 42, 25, stats)
    assert stats.conditional_excluded > 0
    assert all(p.v < 1.0 for p in pts)


def test_thin_domain_raises():
    ident = replace(get("trigamma_3f2"), domain=lambda p: False)
    with pytest.raises(DomainTooThinError):
        sample_domain(ident, 1, 1)


def test_filter_glob():
    ids = [i.id for i in select("thm*")]
    assert len(ids) == 11
    assert {i.split("_")[0] for i in ids} == {f"thm{k}" for k in range(1, 11)}


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(series_tol=0.0)
    with pytest.raises(ValueError):
        RunConfig(samples_per_identity=0)


def test_report_is_reproducible_and_17_digit(tmp_path):
    cfg = RunConfig(seed=5, samples_per_identity=3, identity_filter="thm1*")
    first = to_json(run(cfg, workers=0), STAMP)
    second = to_json(run(cfg, workers=0), STAMP)
    assert first == second
    data = json.loads(first)
    assert set(data) == {"timestamp", "config", "records", "summary"}
    assert data["summary"]["passed"]
    assert '"pass_threshold": 1e-08' in first
    # numbers are written with 17 significant digits
    rec = data["records"][0]
    text = first[first.index('"lhs"'):].split("\n")[0]
    assert len(text.split(": ")[1].rstrip(",").replace("-", "").replace(".", "").split("e")[0]) == 17
    assert rec["rel_residual"] == pytest.approx(rec["abs_residual"] / (1 + abs(rec["rhs"])), rel=1e-12)


def test_parallel_matches_serial():
    cfg = RunConfig(seed=3, samples_per_identity=4, identity_filter="integral_sinh*")
    serial = run(cfg, workers=0)
    parallel = run(cfg, workers=2)
    assert to_json(serial, STAMP) == to_json(parallel, STAMP)


def test_csv_report(tmp_path):
    result = run(RunConfig(seed=1, samples_per_identity=2, identity_filter="tan_form"), workers=0)
    path = tmp_path / "r.csv"
    write_csv(result, str(path))
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 2
    assert rows[0]["identity_id"] == "tan_form" and rows[0]["status"] == "pass"


def test_cli_eval(capsys):
    assert cli.main(["eval", "pfq", "--num", "1,1", "--den", "2", "--z", "-1"]) == 0
    out = capsys.readouterr().out
    assert "0.693147180559945" in out
    assert "ConditionallyConvergent" in out


def test_cli_eval_conjugate_pair(capsys):
    assert cli.main(["eval", "pfq", "--num", "1,1.5,0.5+0.3j", "--den", "0.5,1.5+0.3j", "--z", "-1"]) == 0
    assert "0.7226954257149" in capsys.readouterr().out


def test_cli_integrate(capsys):
    args = ["integrate", "--family", "CoshCoshOverCoshV", "--a", "0", "--b", "0", "--c", "1", "--v", "2"]
    assert cli.main(args) == 0
    line = capsys.readouterr().out.splitlines()[0]
    assert abs(float(line.split()[1]) - 1.0) <= 1e-10


def test_cli_errors_are_reported(capsys):
    args = ["integrate", "--family", "SinhSinhOverCoshV", "--a", "1", "--b", "1", "--c", "1", "--v", "1"]
    assert cli.main(args) == 2
    assert "DecayError" in capsys.readouterr().err


def test_cli_list(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert "thm1_6F5_neg1" in out and "red2_7F6_neg1" in out


def test_cli_verify(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = cli.main(["verify", "--identity", "trigamma_3f2", "--samples", "3", "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["summary"]["records"] == 3
    assert "PASS  trigamma_3f2" in capsys.readouterr().out


def test_skipped_statuses():
    from hypersum.harness import _task

    cfg = RunConfig()
    rec = _task(("vanishing_3f2", 0, {"a": 0.6, "b": 0.3}, cfg))
    assert rec.status == "skipped_domain"
    tight = RunConfig(series_tol=1e-300)
    rec = _task(("digamma_diff_3f2", 0, {"a": 0.3, "b": 0.7}, tight))
    assert rec.status == "skipped_nonconverged"
