from __future__ import annotations

import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from hyperamalgam import harness as hz
from hyperamalgam.cli import main
from hyperamalgam.dyadic import Dyadic
from hyperamalgam.errors import ConfigError, UnknownSuite


def test_empty_report_is_valid_json():
    rep = hz.SuiteReport("discrete-exact", 0)
    obj = json.loads(hz.emit(rep))
    assert obj["cases"] == []
    assert obj["summary"]["total"] == 0
    assert set(obj) == {"suite", "version", "seed", "config", "cases", "summary"}


def test_dyadic_encoding():
    assert hz._encode(Dyadic(1, 1)) == {"num": 1, "exp": 1}
    assert hz._encode(Fraction(1, 3)) == {"num": 1, "den": 3}
    assert hz._encode([math.inf, -math.inf]) == ["inf", "-inf"]
    assert hz._encode(math.nan) == "nan"


def test_round_trip():
    cases = [hz.Case("a", {"p": math.inf}, Dyadic(3, 2), Fraction(1, 3), None, True),
             hz.Case("b", {"x": [1, 2]}, 0.25, math.inf, {"c": Dyadic(1, 1)}, None)]
    rep = hz.SuiteReport("naimark", 7, cases, {"seed": 7})
    back = hz.parse_report(hz.emit(rep))
    assert back.cases == rep.cases
    assert (back.suite, back.seed, back.config, back.version) == (rep.suite, rep.seed, rep.config, rep.version)
    assert hz.emit(back) == hz.emit(rep)


def test_csv_flattens_cases(tmp_path):
    rep = hz.run_suite("naimark")
    out = tmp_path / "r.csv"
    text = hz.emit(rep, "csv", out)
    lines = text.strip().splitlines()
    assert lines[0] == "suite,id,inputs,lhs,rhs,constant,pass"
    assert len(lines) == 1 + len(rep.cases)
    assert out.read_text() == text


def test_unknown_suite_and_bad_config():
    with pytest.raises(UnknownSuite):
        hz.run_suite("no-such-suite")
    with pytest.raises(ConfigError):
        hz.RunConfig(tol_abs=0.0)
    with pytest.raises(ConfigError):
        hz.RunConfig(p=0.5)
    with pytest.raises(ConfigError):
        hz.emit(hz.SuiteReport("x", 0), "xml")


def test_naimark_suite_passes():
    rep = hz.run_suite("naimark", hz.RunConfig(a=-16.0))
    assert rep.ok and rep.summary["asserted"] > 0


def test_naimark_records_without_asserting_above_minus_nine():
    rep = hz.run_suite("naimark", hz.RunConfig(a=-4.0, p=2.0))
    general = [c for c in rep.cases if c.id.startswith("naimark/")]
    assert general and all(c.passed is None for c in general)


def test_report_is_byte_stable():
    cfg = hz.RunConfig(seed=3)
    a = hz.emit(hz.run_suite("wiener-discrete", cfg))
    b = hz.emit(hz.run_suite("wiener-discrete", cfg))
    assert a == b


def test_cases_sorted_and_pool_matches_serial():
    serial = hz.run_suite("transforms-theorem", hz.RunConfig(workers=1))
    pooled = hz.run_suite("transforms-theorem", hz.RunConfig(workers=2))
    assert [c.id for c in serial.cases] == sorted(c.id for c in serial.cases)
    assert hz.emit(serial) == hz.emit(pooled)


def test_cli_exit_codes(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("HYPERAMALGAM_SEED", raising=False)
    out = tmp_path / "n.json"
    assert main(["--suite", "naimark", "--out", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["suite"] == "naimark" and obj["summary"]["failed"] == 0
    assert main(["--suite", "naimark", "--tol-abs", "-1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["--suite", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["--suite", "naimark", "--p", "0.5"])


def test_cli_env_seed_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERAMALGAM_SEED", "11")
    out = tmp_path / "w.json"
    assert main(["--suite", "wiener-discrete", "--seed", "2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["seed"] == 11
    monkeypatch.setenv("HYPERAMALGAM_SEED", "x")
    assert main(["--suite", "wiener-discrete"]) == 2


def test_cli_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hyperamalgam", "--suite", "naimark", "--format", "csv"],
                         capture_output=True, text=True, timeout=60)
    assert res.returncode == 0
    assert res.stdout.startswith("suite,id,")
    assert "asserted cases passed" in res.stderr
