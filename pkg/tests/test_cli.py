import io

import pytest

from symgb.cli import run_command

F1 = "x1^3*x3 + x1^2*x2^3"
F2 = "x2^2*x3^2 - x2^2*x1 + x1*x3^2"


def run(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out)
    return code, out.getvalue()


def test_gb_prints_basis_and_summary():
    code, text = run("gb", "x1 + x2", "x1*x2")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "x1"
    assert "# stabilized: true" in lines
    assert "# orders visited: 2 3 4" in lines


def test_gb_with_oracle_and_file_output(tmp_path):
    path = tmp_path / "basis.txt"
    code, text = run("gb", F1, F2, "--oracle", "-o", str(path))
    assert code == 0 and text == ""
    assert "# stabilized: true" in path.read_text()


def test_gb_max_order(tmp_path):
    path = tmp_path / "last.txt"
    code, _ = run("gb", F1, F2, "--max-order", "3", "-o", str(path))
    assert code == 3
    assert "max order exceeded" in path.read_text()


def test_gb_from_corpus_file_over_prime_field(tmp_path):
    gens = tmp_path / "gens.txt"
    gens.write_text("# generators\nx1 + x2\n\nx1*x2\n")
    code, text = run("gb", str(gens), "--field", "fp:5")
    assert code == 0 and text.startswith("x1\n")


def test_member_round_trip(tmp_path):
    basis = tmp_path / "basis.txt"
    assert run("gb", "x1 + x2", "x1*x2", "-o", str(basis))[0] == 0
    code, text = run("member", "x5^2 - x3", "--basis", str(basis), "--oracle")
    assert code == 0 and text.startswith("true")
    code, text = run("member", "1", "--basis", str(basis))
    assert code == 1 and text.startswith("false")


def test_member_from_generators():
    code, text = run("member", "x1", "--generators", "x1 + x2", "-g", "x1*x2")
    assert code == 0 and text.startswith("true")


def test_member_refuses_unmarked_basis(tmp_path):
    basis = tmp_path / "basis.txt"
    basis.write_text("x1\n")
    assert run("member", "x2", "--basis", str(basis))[0] == 2
    assert run("member", "x2", "--basis", str(basis), "--assume-groebner")[0] == 0


def test_reduce():
    code, text = run("reduce", "x3^2*x2^2 + x2*x1", "-b", "x3*x1 + x2*x1")
    assert code == 0
    assert text.splitlines() == ["x2^3*x1 + x2*x1", "# steps: 2"]


def test_compare():
    code, text = run("compare", "x5^5*x2^2*x1^3", "x5^9*x4^6*x3^4*x2*x1^5")
    assert code == 0
    assert text.splitlines() == ["witness: (23)", "one-line: 1 3 2 4 5",
                                 "match: (1,1) (2,3) (5,5)"]
    assert run("compare", "x4^2*x2^2*x1", "x4*x3^4*x2^3") == (0, "incomparable\n")


def test_orbit_gb():
    code, text = run("orbit-gb", "x1^2*x3")
    assert code == 0
    assert text.splitlines()[-3:] == ["# minimal basis", "x2^2*x1", "x2*x1^2"]


@pytest.mark.parametrize("argv", [
    ["gb", "x0"],
    ["gb"],
    ["gb", "x1", "--field", "fp:4"],
    ["compare", "x1 + x2", "x1"],
    ["orbit-gb", "x1 + x2"],
    ["frobnicate"],
    ["gb", "x1", "--max-order", "0"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2
    assert capsys.readouterr().err
