import json

import pytest

from torusrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_matrices_rank_one(capsys):
    code, out = run(capsys, "matrices", "--p", "5", "--c", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 5 and payload["c"] == 1
    assert payload["basis"] == "Qprime"
    assert payload["convention"] == {"rows": "m", "cols": "n"}
    assert len(payload["t"]) == 1 and len(payload["t"][0]) == 1
    assert len(payload["t"][0][0]) == 4  # power-basis coefficient vector


def test_matrices_shape_and_triangularity(capsys):
    code, out = run(capsys, "matrices", "--p", "5", "--c", "0")
    payload = json.loads(out)
    zero = [0, 0, 0, 0]
    assert payload["t"][1][0] == zero       # upper triangular
    assert payload["tstar"][0][1] == zero   # lower triangular
    assert payload["t"][0][0] == [1, 0, 0, 0]


def test_matrices_deterministic(capsys):
    _, first = run(capsys, "matrices", "--p", "7", "--c", "2")
    _, second = run(capsys, "matrices", "--p", "7", "--c", "2")
    assert first == second
    assert first.endswith("\n")


def test_matrices_csv(capsys):
    code, out = run(capsys, "matrices", "--p", "5", "--c", "0", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "matrix,row,col,coeffs"
    assert len(lines) == 1 + 2 * 4  # header + two 2x2 matrices
    assert lines[1].startswith("t,0,0,")


def test_usage_errors(capsys):
    assert run(capsys, "matrices", "--p", "4")[0] == 2
    assert run(capsys, "matrices", "--p", "5", "--c", "2")[0] == 2
    assert run(capsys, "hadic", "--p", "5", "--word", "TSX")[0] == 2
    assert run(capsys, "hadic", "--p", "5", "--n-trunc", "-1")[0] == 2
    assert run(capsys, "matrices", "--p", "103")[0] == 2  # beyond --max-p


def test_hadic_braid_words_agree(capsys):
    _, lhs = run(capsys, "hadic", "--p", "5", "--word", "TST", "--n-trunc", "3")
    _, rhs = run(capsys, "hadic", "--p", "5", "--word", "STS", "--n-trunc", "3")
    assert json.loads(lhs)["entries"] == json.loads(rhs)["entries"]


def test_hadic_identity_words(capsys):
    _, empty = run(capsys, "hadic", "--p", "7", "--c", "1", "--word", "", "--n-trunc", "2")
    _, order = run(capsys, "hadic", "--p", "7", "--c", "1", "--word", "T" * 7, "--n-trunc", "2")
    assert json.loads(empty)["entries"] == json.loads(order)["entries"]
    payload = json.loads(empty)
    assert payload["entries"][0][0] == {"p": 7, "N": 2, "digits": [1, 0, 0]}
    assert payload["entries"][0][1] == {"p": 7, "N": 2, "digits": [0, 0, 0]}


def test_hadic_csv(capsys):
    code, out = run(capsys, "hadic", "--p", "5", "--word", "TS", "--n-trunc", "1",
                    "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "row,col,digits"
    assert len(lines) == 5


def test_fp_rank_one(capsys):
    code, out = run(capsys, "fp", "--p", "7", "--c", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["t_hat"] == [[1]]
    assert payload["tstar_hat"] == [[1]]
    assert payload["intertwine_ok"] is True


def test_fp_full(capsys):
    _, out = run(capsys, "fp", "--p", "5", "--c", "0")
    payload = json.loads(out)
    assert payload["t_hat"] == [[1, 2], [0, 1]]
    assert payload["tstar_hat"] == [[1, 0], [2, 1]]
    assert payload["poly_t"] == [[1, 1], [0, 1]]
    assert payload["intertwine_ok"] is True


def test_fp_csv_has_flag_row(capsys):
    _, out = run(capsys, "fp", "--p", "5", "--c", "1", "--format", "csv")
    assert out.strip().split("\n")[-1] == "intertwine_ok,0,0,1"


def test_verify_scopes(capsys):
    code, out = run(capsys, "verify", "--p", "5", "--scope", "rep")
    assert code == 0
    assert out.strip().split("\n")[-1] == "OK"
    assert "PASS p=5 c=0 rep.braid" in out

    code, out = run(capsys, "verify", "--p", "5", "--scope", "fp")
    assert code == 0
    assert "fp.double_factorial_congruence" in out

    code, out = run(capsys, "verify", "--scope", "identity", "--n-max", "4")
    assert code == 0
    assert "identity.binomial_grid" in out


def test_verify_rejects_bad_primes(capsys):
    assert run(capsys, "verify", "--p", "9")[0] == 2
    assert run(capsys, "verify", "--p", "103")[0] == 2


def test_verify_skein_scope(capsys):
    code, out = run(capsys, "verify", "--p", "5", "--scope", "skein")
    assert code == 0
    assert "skein.structure_constants_agree" in out
