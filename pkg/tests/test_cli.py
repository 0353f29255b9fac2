import io
import json
import subprocess
import sys

import pytest

from qpf.cli import main


def run_cli(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


@pytest.fixture()
def appendix_system(tmp_path):
    data = {
        "ring": "rational",
        "rows": 2,
        "cols": 2,
        "entries": [["0/1", "2/1"], ["-2/1", "0/1"]],
        "rhs": ["3/1", "4/1"],
    }
    path = tmp_path / "sys2.json"
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture()
def skew4(tmp_path):
    entries = [
        ["0/1", "1/1", "2/1", "3/1"],
        ["-1/1", "0/1", "4/1", "5/1"],
        ["-2/1", "-4/1", "0/1", "6/1"],
        ["-3/1", "-5/1", "-6/1", "0/1"],
    ]
    data = {"ring": "rational", "rows": 4, "cols": 4, "entries": entries}
    path = tmp_path / "skew4.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_solve_appendix_example(appendix_system):
    code, text = run_cli(["solve", "--input", appendix_system, "--method", "both"])
    assert code == 0
    assert "x = (-2/1, 3/2)" in text
    assert "agree=True" in text


def test_solve_json_report(appendix_system):
    code, text = run_cli(["solve", "--input", appendix_system,
                          "--method", "both", "--report", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["solutions"]["direct"] == ["-2/1", "3/2"]
    assert payload["solutions"]["qpf"] == ["-2/1", "3/2"]
    assert payload["agree"] is True


def test_pfaffian_prints_eight(skew4):
    code, text = run_cli(["pfaffian", "--input", skew4])
    assert code == 0
    assert text.splitlines()[0] == "8"


def test_bad_input_exit_code(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _ = run_cli(["pfaffian", "--input", str(path)])
    assert code == 2


def test_verify_single_suite_exit_zero():
    code, text = run_cli(["verify", "--suite", "classical", "--report", "json",
                          "--seed", "7"])
    assert code == 0
    payload = json.loads(text)
    assert payload["summary"]["failed"] == 0
    assert payload["summary"]["total"] > 0


def test_verify_determinism_same_seed():
    _, first = run_cli(["verify", "--suite", "ratio", "--report", "json",
                        "--seed", "11"])
    _, second = run_cli(["verify", "--suite", "ratio", "--report", "json",
                         "--seed", "11"])
    assert first == second


def test_env_seed_override(monkeypatch):
    monkeypatch.setenv("QPF_SEED", "13")
    _, with_env = run_cli(["verify", "--suite", "ratio", "--report", "json",
                           "--seed", "99"])
    monkeypatch.delenv("QPF_SEED")
    _, explicit = run_cli(["verify", "--suite", "ratio", "--report", "json",
                           "--seed", "13"])
    assert with_env == explicit


def test_btoda_command():
    code, text = run_cli(["btoda", "--ring", "block", "--block-dim", "2",
                          "--n", "1", "--instances", "1", "--seed", "3",
                          "--report", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["summary"]["failed"] == 0


def test_sop_command():
    code, text = run_cli(["sop", "--n", "1", "--ring", "block", "--seed", "5",
                          "--report", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["residuals_zero"] is True
    assert payload["coefficients"]["2"][-1] != "0/1"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qpf.cli", "verify", "--suite", "ratio",
         "--seed", "2", "--report", "text"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "failed=0" in proc.stdout
