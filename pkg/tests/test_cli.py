import json

import pytest

from qca.cli import main
from qca.qtorus import QuantumTorus, parse
from qca.lattice import kronecker
from qca.scalars import SqrtRing


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lambda_check(capsys):
    code, out, _ = run(capsys, "lambda", "--quiver", "kronecker", "--check")
    assert code == 0 and out.strip() == "compatible, D = I2"


def test_lambda_solve(capsys):
    code, out, _ = run(capsys, "--format", "json", "lambda", "--quiver", "a2")
    assert code == 0 and len(json.loads(out)["lambda"]) == 4


def test_matrices(capsys):
    code, out, _ = run(capsys, "matrices", "--quiver", "kronecker", "--format", "json")
    assert json.loads(out)["btilde"][2] == [-1, 0]


def test_ccmap_regular_expansion(capsys):
    code, out, _ = run(capsys, "ccmap", "--quiver", "kronecker", "--module", "rp1", "--q", "2")
    assert code == 0
    assert "X = X[(1,-1,0,0)] + X[(-1,1,1,1)] + X[(-1,-1,0,1)]" in out


def test_ccmap_roundtrip_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "ccmap", "--quiver", "kronecker", "--module", "s2", "--q", "3",
                       "--shift", "1:1")
    data = json.loads(out)
    torus = QuantumTorus(kronecker().lam)
    x = parse(data["value"]["text"], torus, SqrtRing(3))
    assert data["object"] == "M[0, 1] + P1[1]"
    assert len(x.terms) == 2


def test_mutate(capsys):
    code, out, _ = run(capsys, "mutate", "--quiver", "kronecker", "--seq", "1", "--formal")
    assert "X1 = X[(-1,2,1,0)] + X[(-1,0,0,0)]" in out


def test_verify_exhaustive_hall(capsys):
    code, out, _ = run(capsys, "verify", "hall", "--quiver", "a2", "--q", "2", "--exhaustive", "2")
    assert code == 0 and "0 fail" in out


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "onedim", "--quiver", "a2", "--M", "s2", "--N", "s1")
    assert code == 0 and out.startswith("PASS")


def test_verify_lemma31_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "lemma31", "--quiver", "a3", "--count", "10")
    assert code == 0 and json.loads(out)["summary"]["PASS"] == 10


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "kronecker", "--quiver", "kronecker", "--bound", "1")
    assert code == 0 and "X_delta^1" in out and "pass" in out


@pytest.mark.parametrize("argv", [
    ["ccmap", "--quiver", "kronecker", "--module", "missing.json"],
    ["ccmap", "--quiver", "kronecker", "--module", "rp1", "--q", "4"],
    ["mutate", "--quiver", "kronecker", "--seq", "3"],
    ["verify", "hall", "--quiver", "kronecker"],
    ["ccmap", "--quiver", "kronecker", "--module", "s1", "--shift", "9:1"],
    ["nonsense"],
])
def test_malformed_input_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bad_json(tmp_path, capsys):
    f = tmp_path / "q.json"
    f.write_text("{not json")
    code, _, err = run(capsys, "matrices", "--quiver", str(f))
    assert code == 2 and "invalid JSON" in err


def test_incompatible_lambda_exit_1(tmp_path, capsys):
    f = tmp_path / "q.json"
    f.write_text(json.dumps({"m": 2, "n": 1, "arrows": [[1, 2]], "lambda": [[0, -1], [1, 0]]}))
    code, out, _ = run(capsys, "lambda", "--quiver", str(f), "--check")
    assert code == 1 and "not compatible" in out


def test_non_unit_diagonal_reported(tmp_path, capsys):
    f = tmp_path / "q.json"
    f.write_text(json.dumps({"m": 2, "n": 1, "arrows": [[1, 2]], "lambda": [[0, 2], [-2, 0]]}))
    code, out, _ = run(capsys, "lambda", "--quiver", str(f), "--check")
    assert code == 0 and out.strip() == "compatible, D = diag(2)"
