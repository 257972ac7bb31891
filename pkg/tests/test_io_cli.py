import json
from pathlib import Path

import pytest

from rbhopf import io
from rbhopf.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_PARSE, main
from rbhopf.groups import s3_factorization, symmetric3
from rbhopf.hopf import EnvelopingAlgebra, GroupAlgebra
from rbhopf.lie import example1_operator, heisenberg, sl2
from rbhopf.operators import extend_lie_rb, split_rb_hopf

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_lie_round_trip():
    for L in (sl2(), heisenberg()):
        assert io.lie_algebra_from_json(io.lie_algebra_to_json(L)) == L
    R = example1_operator()
    assert io.lie_operator_from_json(io.lie_operator_to_json(R)) == R


def test_group_round_trip():
    G = symmetric3()
    assert io.group_from_json(io.group_to_json(G)).same_table(G)


def test_hopf_operator_round_trip():
    U = EnvelopingAlgebra(sl2(), "sl2")
    B = extend_lie_rb(U.lie, example1_operator(), U)
    data = io.hopf_operator_to_json(B, U.basis(3))
    back = io.hopf_operator_from_json(json.loads(io.dumps(data)), U)
    assert back.agrees_with(B, U.basis(3))
    FG = GroupAlgebra(symmetric3(), "S3")
    S = split_rb_hopf(FG, *s3_factorization(FG.group))
    back = io.hopf_operator_from_json(io.hopf_operator_to_json(S), FG)
    assert back.agrees_with(S, FG.basis())


def test_floats_rejected(tmp_path):
    p = tmp_path / "op.json"
    p.write_text(json.dumps({"convention": "columns", "matrix": [[0.5]]}))
    with pytest.raises(io.SpecError):
        io.load_lie_operator(str(p), io.BUILTIN_ALGEBRAS["abelian1"]())


def test_extend_lie_eval(capsys):
    code, out = run(capsys, "extend-lie", "--algebra", "builtin:sl2", "--operator",
                    str(FIXTURES / "example1.json"), "--eval", "0,1,1")
    assert code == EXIT_OK
    assert json.loads(out) == {"hy": "1/2", "y": "1"}


def test_enumerate_v4(capsys):
    code, out = run(capsys, "enumerate-group-rb", "--group", "builtin:V4")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == 16


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "verify-lie", "--algebra", str(FIXTURES / "sl2_tampered.json"))[0] == EXIT_FAIL
    assert run(capsys, "verify-group", "--group", "builtin:S3", "--operator",
               str(FIXTURES / "s3_mirror.json"))[0] == EXIT_FAIL
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify-lie", "--algebra", str(bad))[0] == EXIT_PARSE
    assert run(capsys, "verify-lie", "--algebra", str(tmp_path / "missing.json"))[0] == EXIT_PARSE
    assert run(capsys, "verify-lie", "--max-degree", "0")[0] == EXIT_PARSE
    assert run(capsys, "enumerate-group-rb", "--group", "builtin:Q8", "--cap", "6")[0] == EXIT_BUDGET


def test_identity_operator_fails_rb_lie(capsys, tmp_path):
    p = tmp_path / "id.json"
    p.write_text(json.dumps({"convention": "columns", "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}))
    code, out = run(capsys, "verify-rb-lie", "--operator", str(p))
    assert code == EXIT_FAIL
    assert json.loads(out)["ok"] is False


@pytest.mark.parametrize("argv", [
    ["verify-lie"],
    ["verify-rb-lie"],
    ["verify-group", "--operator", "builtin:split"],
    ["extend-group", "--operator", "builtin:split"],
    ["extend-lie", "--max-degree", "2"],
    ["verify-rb-hopf", "--group", "builtin:S3", "--operator", "builtin:antipode"],
    ["verify-rb-hopf", "--algebra", "builtin:sl2", "--max-degree", "2"],
    ["tilde", "--algebra", "builtin:sl2", "--max-degree", "2"],
    ["tilde", "--group", "builtin:S3", "--operator", "builtin:split"],
    ["split"],
    ["split", "--algebra", "builtin:sl2", "--max-degree", "2"],
    ["descendent", "--group", "builtin:S3", "--operator", "builtin:split"],
    ["descendent", "--algebra", "builtin:sl2", "--max-degree", "1"],
    ["post-lie", "--max-degree", "2"],
], ids=lambda a: " ".join(a))
def test_subcommands_pass_and_are_deterministic(capsys, argv):
    code, first = run(capsys, *argv)
    assert code == EXIT_OK, first
    _, second = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["ok"] is True


def test_text_format_and_out_file(capsys, tmp_path):
    out = tmp_path / "r.txt"
    assert main(["verify-group", "--operator", "builtin:inverse", "--format", "text", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.rstrip().endswith("OK")
    assert capsys.readouterr().out == ""


def test_descendent_group_in_cli(capsys):
    _, out = run(capsys, "descendent", "--group", "builtin:S3", "--operator", "builtin:inverse")
    data = json.loads(out)
    G = symmetric3()
    assert data["descendent_group"]["cayley"] == [[G.mul(h, g) for h in G.elements()] for g in G.elements()]
