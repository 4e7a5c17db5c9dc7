import json
import subprocess
import sys

import pytest

from symz.classical import base_poly, monomial_symmetric
from symz.cli import main
from symz.exactpoly import MultiPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_cheb(capsys):
    assert run(capsys, "cheb", "--kind", "Tmonic", "--m", "2")[:2] == (0, "u^2 - 2")


def test_classical_prints_json(capsys):
    code, out, _ = run(capsys, "classical", "--kind", "s", "--n", "2", "--lambda", "2,1")
    assert code == 0
    z1, z2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    assert MultiPoly.from_json(out) == z1 * z1 * z2 + z1 * z2 * z2


def test_phi_roundtrip(tmp_path, capsys):
    P = monomial_symmetric(4, (2,)) + monomial_symmetric(4, (1, 1)).scale(5)
    path = tmp_path / "p.json"
    path.write_text(P.dumps())
    code, out, _ = run(capsys, "phi", "--n", "2", "--input", str(path), "--certify")
    assert code == 0
    assert str(MultiPoly.from_json(out)) == "z1^2 + 5*z1*z2 + z2^2 + 6"
    path.write_text(base_poly("e", 3, 3).dumps())
    code, out, _ = run(capsys, "phi", "--n", "1", "--odd", "--input", str(path))
    assert MultiPoly.from_json(out) == 1


def test_phi_rejects_wrong_arity(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(base_poly("e", 3, 1).dumps())
    assert run(capsys, "phi", "--n", "2", "--input", str(path))[0] == 2


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--kind", "hz", "--n", "2", "--m", "2")
    z1, z2 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    assert MultiPoly.from_json(out) == z1 * z1 + z1 * z2 + z2 * z2 - 2
    code, out, _ = run(capsys, "family", "--kind", "sz", "--n", "2", "--lambda", "2,1", "--eval", "--points", "1/2,3")
    assert (code, out) == (0, "35/4")
    assert run(capsys, "family", "--kind", "sz", "--n", "2")[0] == 2
    assert run(capsys, "family", "--kind", "qz", "--n", "2", "--m", "1")[0] == 2


@pytest.mark.parametrize(
    "argv, want",
    [
        (["--zroots", "5", "--m", "2", "det"], "24/1"),
        (["--zroots", "1/2,3", "--m", "3", "det"], "-175/8"),
        (["--zroots", "1/2,3", "--m", "3", "factor"], "-175/8"),
        (["--zroots", "5", "--m", "2", "adjugate", "--p", "1", "--q", "2"], "-1/1"),
        (["--zroots", "5", "--m", "3", "minor", "--rows", "1,2", "--cols", "2,3"], "1/1"),
        (["--zroots", "-1", "--m", "2", "nullvector"], "-1/1 1/1"),
        (["--zroots=-1,1", "--m", "3", "nullvector"], "1/1 0/1 -1/1"),
        (["--zroots=7,-7/4", "--m", "5", "det"], "50193/128"),
        (["--leading", "2", "--zroots", "", "--m", "3", "factor", "--route", "trench", "--u", "3"], "-2632/1"),
        (["--leading", "2", "--zroots", "7", "--m", "3", "det"], "-2632/1"),
    ],
)
def test_toeplitz(capsys, argv, want):
    code, out, _ = run(capsys, "toeplitz", *argv)
    assert (code, out) == (0, want)


def test_toeplitz_errors(capsys):
    assert run(capsys, "toeplitz", "--zroots", "3", "--m", "2", "nullvector")[0] == 2
    assert run(capsys, "toeplitz", "--zroots", "x", "--m", "2", "det")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "partition_rect,omega_palpowersum_closed_form", "--json", "--seed", "3")
    assert code == 0
    data = json.loads(out)
    assert [d["name"] for d in data] == ["omega_palpowersum_closed_form", "partition_rect"]
    assert data[0]["status"] == "fail" and data[0]["expected_fail"]
    code, _, err = run(capsys, "verify", "--suite", "unknown_name")
    assert code == 2 and "unknown_name" in err


def test_usage_error_exit_code(capsys):
    assert run(capsys, "nonsense")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symz", "cheb", "--kind", "U", "--m", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "u^3 - 2*u"
