import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from localspec.cli import parse_set, run
from localspec.report import TOP_LEVEL_KEYS, dumps

DATA = Path(__file__).resolve().parents[1] / "data"


def call(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, out)
    return code, out.getvalue()


def test_check_cycle_json():
    code, text = call(["check", "--generate", "cycle", "6", "--set", "0"])
    assert code == 0
    doc = json.loads(text)
    assert tuple(doc) == TOP_LEVEL_KEYS
    assert doc["verdicts"]["status"] == "CPRC"
    assert set(doc["verdicts"]["characterizations"]) == {
        "combinatorial", "theorem1", "collinearity", "spectral_excess"}


def test_check_hamming_from_file():
    code, text = call(["check", "--generate", "hypercube", "7", "--set",
                       f"@{DATA / 'hamming74.txt'}"])
    assert code == 0
    assert json.loads(text)["set"] == [0, 11, 22, 29, 39, 44, 49, 58, 69, 78, 83, 88, 98, 105,
                                       116, 127]


def test_check_not_cprc():
    code, text = call(["check", "--generate", "hypercube", "3", "--set", "0,3"])
    assert code == 1
    assert json.loads(text)["verdicts"]["status"] == "NOT_CPRC"


def test_graph_file_and_text_format():
    code, text = call(["check", "--graph", str(DATA / "k3.txt"), "--set", "0",
                       "--format", "text"])
    assert code == 0
    assert "CPRC" in text


def test_stdin_graph(monkeypatch):
    code, text = call(["local", "--graph", "-", "--set", "0"], stdin="0 1\n1 2\n2 3\n3 0\n",
                      monkeypatch=monkeypatch)
    assert code == 0
    ls = json.loads(text)["local_spectrum"]
    assert ls["dual_degree"] == 2


def test_spectrum_and_polys():
    code, text = call(["spectrum", "--generate", "petersen"])
    assert code == 0
    spec = json.loads(text)["spectrum"]
    assert spec["multiplicities"] == [1, 5, 4]
    code, text = call(["polys", "--generate", "cycle", "4", "--set", "0"])
    assert code == 0
    assert json.loads(text)["polynomials"] is not None
    code, text = call(["polys", "--generate", "cycle", "4", "--set", "0", "--format", "text"])
    assert code == 0 and text.strip()


@pytest.mark.parametrize("argv, stdin", [
    (["check", "--graph", "-", "--set", "0"], "0 1\n2 3\n"),
    (["check", "--graph", "-", "--set", "0"], "0 0\n"),
    (["check", "--generate", "cycle", "5", "--set", "9"], None),
    (["check", "--generate", "cycle", "5", "--set", "a"], None),
    (["check", "--generate", "cycle", "5"], None),
    (["check", "--generate", "cycle", "x", "--set", "0"], None),
    (["check", "--generate", "wheel", "5", "--set", "0"], None),
    (["check", "--graph", "/nonexistent/file", "--set", "0"], None),
    (["check", "--generate", "cycle", "5", "--set", "0", "--tol-eig", "-1"], None),
])
def test_errors_exit_3(argv, stdin, monkeypatch, capsys):
    code, _ = call(argv, stdin=stdin, monkeypatch=monkeypatch)
    assert code == 3
    assert "error" in capsys.readouterr().err


def test_parse_set(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("# code\n1\n\n4\n")
    assert parse_set(f"@{f}") == [1, 4]
    assert parse_set("3, 5,") == [3, 5]


def test_dumps_format():
    text = dumps({"a": [1, 2.5], "b": float("nan"), "c": {"d": True}})
    doc = json.loads(text)
    assert doc == {"a": [1, 2.5], "b": None, "c": {"d": True}}
    assert dumps({"x": 0.1}) == dumps({"x": 0.1})


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "localspec.cli", "check", "--generate",
                           "cycle", "4", "--set", "0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdicts"]["status"] == "CPRC"
