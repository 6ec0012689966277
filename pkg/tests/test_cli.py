"""CLI behavior: output formats, exit codes, examples, cache, determinism."""

import csv
import json
import subprocess
import sys

import pytest

from ncfact.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_md(capsys):
    code, out, err = run_cli(capsys, "info", "G(3,3,4)")
    assert code == 0
    assert "| degrees | 3,4,6,9 |" in out
    assert "| order | 648 |" in out
    assert "| ll-number | 243 |" in out
    assert "| two-reflection | yes |" in out
    assert err.startswith("[info ")
    _, out, _ = run_cli(capsys, "info", "G(3,1,3)")
    assert "| two-reflection | no |" in out


def test_count_examples(capsys):
    code, out, _ = run_cli(capsys, "count", "B3", "red")
    assert code == 0 and "red: 27" in out
    code, out, _ = run_cli(capsys, "count", "D4", "fact-k", "3")
    assert code == 0 and "fact-k 3: 189" in out
    code, out, _ = run_cli(capsys, "count", "A3", "composition", "2,1")
    assert code == 0 and "composition 2,1: 6" in out
    code, out, _ = run_cli(capsys, "count", "A3", "by-class")
    assert code == 0
    assert "A1xA1: 4" in out and "A2: 8" in out


def test_verify_md_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "A3")
    assert code == 0
    assert "PASS (" in out and "FAIL" not in out
    assert "| nc-size-catalan | 14 | 14 | ok |" in out


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "A4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"group", "checks", "rows", "meta"}
    assert payload["group"] == "A4"
    assert payload["meta"]["seconds"] is None
    assert payload["meta"]["budget"] is None
    for check in payload["checks"]:
        assert set(check) == {"name", "expected", "actual", "pass"}
        assert isinstance(check["expected"], str)
        assert check["pass"] is True
    for row in payload["rows"]:
        assert set(row) == {"class_id", "label", "d1p", "hp", "r", "u",
                            "count"}
        assert all(isinstance(v, str) for v in row.values())
    # sorted keys + indent fixed by the format contract
    assert out.rstrip("\n") == json.dumps(payload, indent=2, sort_keys=True)


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "B3", "--format", "csv")
    assert code == 0
    sections = out.rstrip("\n").split("\n\n")
    assert len(sections) == 2
    checks = list(csv.reader(sections[0].splitlines()))
    assert checks[0] == ["name", "expected", "actual", "pass"]
    assert all(line[3] == "true" for line in checks[1:])
    rows = list(csv.reader(sections[1].splitlines()))
    assert rows[0] == ["class_id", "label", "d1p", "hp", "r", "u", "count"]
    assert len(rows) == 1 + 3  # three rank-2 classes in this group


def test_verify_p_max(capsys):
    code, out, _ = run_cli(capsys, "verify", "I2(5)", "--format", "json",
                           "--p-max", "2")
    assert code == 0
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert "multichains-p2" in names
    assert "multichains-p3" not in names
    assert "factorization-binomial-p2" in names


def test_table_group_and_families(capsys):
    code, out, _ = run_cli(capsys, "table", "H3")
    assert code == 0 and "PASS (1 checks)" in out
    assert out.count("| 10 |") >= 3  # every class has h' = 10

    code, out, _ = run_cli(capsys, "table", "B")
    assert code == 0 and "row-B" in out and "n**(n-2)" in out

    code, out, _ = run_cli(capsys, "table", "G24")
    assert code == 0 and "reference only" in out

    code, out, _ = run_cli(capsys, "table", "GEEN", "--format", "json")
    assert code == 0
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert len(names) == 5 and all(n.startswith("row-GEEN") for n in names)


def test_table_gd1n_internal_identities(capsys):
    code, out, _ = run_cli(capsys, "table", "G(3,1,3)")
    assert code == 0
    assert "no table row for this family" in out
    assert "Z3xA1" in out and "A2" in out


def test_exit_code_usage_errors(capsys):
    assert run_cli(capsys, "info", "Q7")[0] == 2
    assert run_cli(capsys, "count", "A3", "composition", "2,2")[0] == 2
    assert run_cli(capsys, "count", "A3", "composition", "x,y")[0] == 2
    assert run_cli(capsys, "count", "A3", "fact-k", "0")[0] == 2
    assert run_cli(capsys, "count", "A3", "fact-k")[0] == 2
    assert run_cli(capsys, "table", "NOPE")[0] == 2
    assert run_cli(capsys, "verify", "A1", "--p-max", "0")[0] == 2


def test_exit_code_budget(capsys):
    assert run_cli(capsys, "count", "E8", "red")[0] == 3
    assert run_cli(capsys, "verify", "E7", "--budget", "10")[0] == 3


def test_exit_code_failed_check(capsys, monkeypatch):
    monkeypatch.setattr("ncfact.cli.count_reduced", lambda nc: 999)
    code, out, _ = run_cli(capsys, "count", "B3", "red")
    assert code == 1
    assert "red: 999" in out


def test_argparse_plumbing(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["--help"]) == 0
    capsys.readouterr()
    assert main(["count", "A3", "bogus-kind"]) == 2
    capsys.readouterr()


def test_determinism_and_cache(capsys, tmp_path):
    cache = tmp_path / "cache.json"
    outputs = []
    for argv in (
        ["verify", "A4", "--format", "json"],
        ["verify", "A4", "--format", "json", "--no-cache"],
        ["verify", "A4", "--format", "json", "--cache", str(cache)],
        ["verify", "A4", "--format", "json", "--cache", str(cache)],
    ):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        outputs.append(out)
    assert len(set(outputs)) == 1
    assert cache.exists()
    stored = json.loads(cache.read_text())
    assert len(stored) == 1
    # corrupt cache must be ignored, then rewritten
    cache.write_text("{ not json")
    code, out, _ = run_cli(capsys, "verify", "A4", "--format", "json",
                           "--cache", str(cache))
    assert code == 0 and out == outputs[0]
    assert json.loads(cache.read_text())


def test_cache_key_distinguishes_params(capsys, tmp_path):
    cache = tmp_path / "cache.json"
    run_cli(capsys, "count", "A3", "red", "--cache", str(cache))
    run_cli(capsys, "count", "A3", "fact-k", "2", "--cache", str(cache))
    run_cli(capsys, "count", "B3", "red", "--cache", str(cache))
    assert len(json.loads(cache.read_text())) == 3


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "ncfact.cli", "info", "A2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "| order | 6 |" in proc.stdout
    assert proc.stderr.startswith("[info ")
