import json

import pytest

from blchang.algebra import godel, lukasiewicz, tabulate
from blchang.blalg import format_blalg, write_blalg
from blchang.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_builtin(capsys):
    code, out, _ = run(capsys, "validate", "lukasiewicz:4")
    assert code == 0
    assert out.startswith("# blchang validate lukasiewicz:4\n# seed=0\n")
    assert "RESULT: all axioms hold" in out


def test_validate_corrupted_table(tmp_path, capsys):
    T = tabulate(lukasiewicz(3)).mutated("otimes", 1, 1, 1)
    path = tmp_path / "bad.blalg"
    path.write_text(format_blalg(T))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert "FAIL" in out and "witness" in out


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", "no/such/file.blalg")
    assert code == 2 and "no such file" in err


def test_bad_usage(capsys):
    assert run(capsys, "validate", "product:3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_mv_center_of_tower(capsys):
    code, out, _ = run(capsys, "mv-center", "sum(lukasiewicz:3, lukasiewicz:2)")
    assert code == 0 and "{0, 1/2, 1}" in out


def test_good_seqs_sum(capsys):
    code, out, _ = run(capsys, "good-seqs", "godel:q", "--sum", "(1/2)", "(3/4)")
    assert code == 0 and "(1,1/2)" in out


def test_chang_on_chains(capsys):
    code, out, _ = run(capsys, "chang", "godel:q")
    assert code == 0 and "G_L ≅ Z; S(L) trivial" in out
    code, out, _ = run(capsys, "chang", "product:q")
    assert code == 0 and "nontrivial" in out and "Z ×lex Q+" in out
    code, out, _ = run(capsys, "chang", "lukasiewicz:3")
    assert code == 0 and "MV-algebra; S(L) = 0" in out and "round trip" in out and ": ok" in out


def test_gamma_tables(capsys):
    code, out, _ = run(capsys, "gamma", "Z(u=3)")
    assert code == 0
    assert "elements: 0 1 2 3" in out
    assert "0 0 1 2\n" in out


def test_homs_between_files(tmp_path, capsys):
    a, b = tmp_path / "g3.blalg", tmp_path / "l4.blalg"
    write_blalg(godel(3), a)
    write_blalg(lukasiewicz(4), b)
    code, out, _ = run(capsys, "homs", str(a), str(b))
    assert code == 0 and ": 1\n" in out
    code, out, _ = run(capsys, "homs", str(b), str(a))
    assert code == 0 and ": 0\n" in out


def test_suite_pass_and_fail(tmp_path, capsys):
    code, out, _ = run(capsys, "suite", "S4", "--sizes", "3", "--samples", "200")
    assert code == 0 and "GLOBAL: PASS (subset)" in out
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "suite", "S6", "--sizes", "4", "--samples", "200", "--json", str(report))
    assert code == 1 and "GLOBAL: FAIL" in out and "L3(+)L2" in out
    data = json.loads(report.read_text())
    assert data["status"] == "FAIL"


def test_unknown_suite(capsys):
    assert run(capsys, "suite", "S42")[0] == 2


@pytest.mark.parametrize("argv", [["--help"], ["suite", "--help"]])
def test_help_exits_cleanly(argv, capsys):
    assert run(capsys, *argv)[0] == 0
