import json
import subprocess
import sys

import pytest

from hombraid import fixtures
from hombraid.cli import main, run
from hombraid.linalg import Matrix, matrix_from_json, permutation_tau
from hombraid.serialize import candidate_from_json, dumps, read_json


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("fixtures")
    assert run(["fixtures", "--out", str(out)]).code == 0
    return out


def invoke(argv, corpus_dir):
    args = [str(corpus_dir / a) if a.endswith(".json") else a for a in argv]
    return run(args)


@pytest.mark.parametrize("argv, code", fixtures.EXPECTED, ids=[" ".join(a) for a, _ in fixtures.EXPECTED])
def test_expected_exit_codes(argv, code, corpus_dir):
    outcome = invoke(argv, corpus_dir)
    assert outcome.code == code, outcome.payload
    json.loads(dumps(outcome.payload))
    assert outcome.payload["pass"] is (code == 0)


def test_stdout_is_json_and_summary_on_stderr(corpus_dir, capsys):
    code = main(["check", "hom-lie", str(corpus_dir / "sl2_broken.json")])
    out, err = capsys.readouterr()
    assert code == 1
    report = json.loads(out)
    jacobi = next(c for c in report["checks"] if c["name"] == "hom-jacobi")
    assert len(jacobi["witness"]["basis"]) == 3
    assert "FAIL" in err


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["check"], ["check", "nope", "x.json"], ["build", "b-alpha"],
    ["braid", "x.json", "--n", "three"], ["check", "hybe", "/nonexistent.json"], ["--format", "xml"],
])
def test_usage_errors_exit_2_with_json(argv, capsys):
    assert main(argv) == 2
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is False and payload["error"]


def test_help_is_still_json(capsys):
    assert main(["--help"]) == 0
    out, err = capsys.readouterr()
    assert json.loads(out)["pass"] is True
    assert "usage" in err


def test_build_roundtrip(corpus_dir, tmp_path):
    out = tmp_path / "balpha.json"
    first = invoke(["build", "b-alpha", "sl2_lambda.json", "--out", str(out)], corpus_dir)
    assert first.code == 0
    text = out.read_text()
    assert dumps(read_json(out)) == text
    again = run(["check", "hybe", str(out)])
    assert again.code == 0 and again.payload["checks"] == first.payload["checks"]
    assert candidate_from_json(read_json(out)).B.shape == (16, 16)


def test_build_tau_alpha_identity(corpus_dir):
    outcome = invoke(["build", "tau-alpha", "hom_module_id2.json"], corpus_dir)
    assert matrix_from_json(outcome.payload["candidate"]["B"]) == permutation_tau(2)


def test_build_b_r_is_signed_swap(corpus_dir):
    outcome = invoke(["build", "b-r", "z2_qt_module.json"], corpus_dir)
    B = matrix_from_json(outcome.payload["candidate"]["B"])
    assert B == Matrix.diag([1, 1, 1, -1]) @ permutation_tau(2)


def test_braid_words(corpus_dir):
    ident = invoke(["braid", "sl2_balpha.json", "--n", "3", "--word", "1 -1"], corpus_dir)
    assert matrix_from_json(ident.payload["matrix"]) == Matrix.identity(64)
    a = invoke(["braid", "sl2_balpha.json", "--n", "3", "--lambda", "1", "--word", "1 2 1"], corpus_dir)
    b = invoke(["braid", "sl2_balpha.json", "--n", "3", "--lambda", "1", "--word", "2 1 2"], corpus_dir)
    assert a.payload["matrix"] == b.payload["matrix"]
    assert a.payload["lambda"] == "1"


def test_braid_cap_flag(corpus_dir, monkeypatch):
    assert invoke(["braid", "tau_identity.json", "--n", "3", "--cap", "4"], corpus_dir).code == 2
    monkeypatch.setenv("HOMBRAID_CAP", "4")
    assert invoke(["braid", "tau_identity.json", "--n", "3"], corpus_dir).code == 2


def test_bad_lambda(corpus_dir):
    assert invoke(["braid", "sl2_balpha.json", "--lambda", "abc"], corpus_dir).code == 2


def test_module_entry_point(corpus_dir):
    proc = subprocess.run([sys.executable, "-m", "hombraid", "check", "hybe", str(corpus_dir / "tau_identity.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True


def test_fixtures_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert run(["fixtures", "--out", str(blocker / "sub")]).code == 2
