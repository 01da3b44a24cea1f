import json

import pytest
from click.testing import CliRunner

from grassmod.cli import cli, main


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, ["--cache-dir", str(tmp_path / "c"), *args])

    return invoke


def test_enum_text_and_json(run, tmp_path):
    res = run("enum", "2", "2", "1")
    assert res.exit_code == 0 and res.output.startswith("Gr(1, F_2^2): 3 subspaces")
    out = tmp_path / "gr.json"
    res = run("enum", "2", "4", "2", "--out", str(out))
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data["count"] == "35" and len(data["subspaces"]) == 35
    assert (tmp_path / "c" / "enum" / "gr_q2_n4_r2.grsm").exists()


def test_enum_too_large(run):
    res = run("enum", "2", "9", "4")
    assert res.exit_code == 64 and "TooLarge" in res.output


def test_enum_cap_flag(run):
    assert run("--max-grassmannian", "10", "enum", "2", "4", "2").exit_code == 64


def test_eta(run):
    res = run("eta", "2", "3", "1", "2", "1", "--json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["column_counts"] == ["3"] and data["rows"] == "7"
    assert run("eta", "2", "3", "2", "2", "0").exit_code == 64


def test_spin(run):
    res = run("spin", "2", "4", "2", "--json")
    data = json.loads(res.output)
    assert res.exit_code == 0 and data["dim"] == "34" and data["in_augmentation_kernel"] is True
    res = run("spin", "2", "3", "1", "--vector", "0:1")
    assert res.exit_code == 0 and "spin dimension 7 of 7" in res.output
    assert run("spin", "2", "3", "1", "--vector", "0-1").exit_code == 64


def test_verify_pass_and_json(run):
    res = run("verify", "lemma6.delta", "p=3", "Nmax=10")
    assert res.exit_code == 0 and "lemma6.delta: pass" in res.output
    res = run("verify", "remark1.duality", "q=2", "n=4", "--json")
    assert res.exit_code == 0 and json.loads(res.output)["status"] == "pass"


def test_verify_witness(run):
    res = run("verify", "prop4.simple", "q=2", "dimV=3", "--json")
    data = json.loads(res.output)
    assert res.exit_code == 0 and data["witness"]


def test_verify_usage_errors(run):
    assert run("verify", "no.such.check").exit_code == 64
    assert run("verify", "lemma6.delta", "bogus=1").exit_code == 64
    assert run("verify", "lemma6.delta", "novalue").exit_code == 64


def test_verify_skipped_exit_code(run):
    res = run("--max-grassmannian", "0", "verify", "remark1.duality", "q=2", "n=3")
    assert res.exit_code == 4


def test_verify_is_deterministic_and_timings_optional(run, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("verify", "lemma4.beta", "trials=5", "--seed", "9", "--out", str(a))
    run("verify", "lemma4.beta", "trials=5", "--seed", "9", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert "runtime_ms" not in json.loads(a.read_text())
    res = run("verify", "lemma4.beta", "trials=5", "--timings", "--json")
    assert "runtime_ms" in json.loads(res.output)


def test_verify_io_failure(run, tmp_path):
    res = run("verify", "lemma6.delta", "p=2", "--out", str(tmp_path / "missing" / "x.json"))
    assert res.exit_code == 74


def test_suite_quick(run):
    res = run("suite", "quick")
    assert res.exit_code == 0 and "suite quick: pass" in res.output
    assert run("suite", "medium").exit_code == 64


def test_list_checks(run):
    res = run("list-checks", "--json")
    data = json.loads(res.output)
    assert "lemma6.delta" in data and all(isinstance(v, str) and v for v in data.values())
    assert run("list-checks").exit_code == 0


def test_cache_stat_and_gc(run):
    run("eta", "2", "3", "1", "2", "1")
    res = run("cache", "stat", "--json")
    assert json.loads(res.output)["incidence"] == "1"
    res = run("cache", "gc", "--all")
    assert res.exit_code == 0 and res.output.startswith("removed")
    assert json.loads(run("cache", "stat", "--json").output)["incidence"] == "0"


def test_no_cache_flag(run, tmp_path):
    run("--no-cache", "eta", "2", "3", "1", "2", "1")
    assert not (tmp_path / "c" / "incidence").exists()


def test_main_entry_point():
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
