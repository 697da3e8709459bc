import json
import subprocess
import sys

import pytest

from heckemac.cli import (
    EXIT_FAIL,
    EXIT_OK,
    EXIT_SCALE,
    EXIT_USAGE,
    MATRICES,
    ExportEnvelope,
    latex_entry,
    main,
)
from heckemac.exactring import parse_fraction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_kappa_json(capsys):
    code, out, _ = run(capsys, "tables", "--n", "3", "--matrix", "kappa", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["n"] == 3 and d["matrix_name"] == "kappa"
    assert d["row_labels"] == ["3", "2,1", "1,1,1"]
    assert d["col_labels"] == ["s1s2s1", "s1s2", "s2s1", "s1", "s2", "1"]
    assert d["entries"][0] == ["q - 1", "1", "1", "0", "0", "0"]


@pytest.mark.parametrize("n", [1, 3, 4])
@pytest.mark.parametrize("name", MATRICES)
def test_json_round_trip(capsys, name, n):
    code, out, _ = run(capsys, "tables", "--n", str(n), "--matrix", name)
    assert code == EXIT_OK
    env = ExportEnvelope.from_json(out)
    assert env.to_json() == out
    values = env.values()
    assert [[str(v) for v in row] for row in values] == env.entries
    assert all(parse_fraction(str(v)) == v for row in values for v in row)


def test_csv_and_latex(capsys):
    code, out, _ = run(capsys, "tables", "--n", "2", "--matrix", "a", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "a,2,\"1,1\""
    code, out, _ = run(capsys, "tables", "--n", "2", "--matrix", "a", "--format", "latex")
    assert out.startswith("\\begin{array}")
    assert "-qt + 1" in out


def test_latex_entry():
    assert latex_entry("q^2*t - 2*q + 1") == "q^{2}t - 2q + 1"
    assert latex_entry("(1)/(q - 1)") == "\\frac{1}{q - 1}"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "k.json"
    assert main(["tables", "--n", "2", "--matrix", "K", "--out", str(target)]) == EXIT_OK
    assert ExportEnvelope.from_json(target.read_text()).matrix_name == "K"


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--suite", "all")
    assert code == EXIT_OK
    assert out.splitlines()[-1].endswith("checks passed")
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "triangularity")
    assert code == EXIT_FAIL
    assert any(line.startswith("FAIL") for line in out.splitlines())


def test_oracle_text_and_json(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2", "--p", "5", "--check", "lusztig")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "4/4 cells match (n=2, p=5)"
    code, out, _ = run(capsys, "oracle", "--n", "2", "--p", "3", "--check", "all", "--format", "json")
    assert code == EXIT_OK
    assert all(r["match"] for r in json.loads(out))


@pytest.mark.parametrize("argv,expected", [
    (["tables", "--n", "3", "--matrix", "nope"], EXIT_USAGE),
    (["tables", "--n", "x", "--matrix", "A"], EXIT_USAGE),
    (["bogus"], EXIT_USAGE),
    (["tables", "--n", "9", "--matrix", "A"], EXIT_SCALE),
    (["tables", "--n", "8", "--matrix", "kappa"], EXIT_SCALE),
    (["tables", "--n", "0", "--matrix", "A"], EXIT_SCALE),
    (["oracle", "--n", "3", "--p", "7"], EXIT_SCALE),
    (["oracle", "--n", "2", "--p", "4"], EXIT_SCALE),
])
def test_exit_codes(capsys, argv, expected):
    code, _, _ = run(capsys, *argv)
    assert code == expected


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heckemac", "tables", "--n", "2", "--matrix", "C"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["entries"] == [["1", "0"], ["1", "1"]]
