"""CLI surface: exit codes, formats, determinism."""

import csv
import io
import json

import pytest

from hurwitz_ga.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_rows(capsys):
    code, out, _ = run_cli(capsys, "classify", "3", "0")
    assert code == 0
    assert out.strip() == "G(3,0): CxH, H, C, O, Os"
    code, out, _ = run_cli(capsys, "classify", "0", "3")
    assert code == 0
    assert out.strip() == "G(0,3): CsxH, H, Cs, Os, O"


def test_classify_usage_error(capsys):
    code, out, err = run_cli(capsys, "classify", "2", "2")
    assert code == 2
    assert "p + q" in err


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "2", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "signature": "G(2,1)",
        "tensor": "CsxHs",
        "even": "Hs",
        "pseudoscalar": "Cs",
        "bullet_plus": "Os",
        "bullet_minus": "Os",
    }


def test_table_text_octonions(capsys):
    code, out, _ = run_cli(capsys, "table", "O", "--format", "text")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    header = rows[0]
    e1_row = rows[header.index("e1")]
    assert e1_row[header.index("e2")] == "e4"


def test_table_ga_entry(capsys):
    code, out, _ = run_cli(capsys, "table", "ga:0,3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    header = rows[0]
    e1_row = next(r for r in rows if r[0] == "e1")
    assert e1_row[header.index("e1")] == "-1"


def test_table_bullet_json(capsys):
    code, out, _ = run_cli(capsys, "table", "bullet:3,0:+", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "bullet:3,0:+"
    assert data["product"][1][1] == {"k": 0, "s": -1}


def test_table_biquaternion(capsys):
    code, out, _ = run_cli(capsys, "table", "biq:C,H", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis_labels"][:3] == ["1", "iota", "i"]
    # iota^2 = -1
    assert data["product"][1][1] == {"k": 0, "s": -1}


def test_table_unknown_spec(capsys):
    code, _, err = run_cli(capsys, "table", "sedenions")
    assert code == 2
    assert "unknown algebra spec" in err
    code, _, _ = run_cli(capsys, "table", "bullet:9,9:+")
    assert code == 2
    code, _, _ = run_cli(capsys, "table", "biq:H,C")
    assert code == 2


@pytest.mark.parametrize("suite", ["involutions", "isomorphisms"])
def test_verify_fast_suites_pass(capsys, suite):
    code, out, _ = run_cli(capsys, "verify", suite, "--trials", "50")
    assert code == 0
    assert "0 failed" in out


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "hurwitz-properties", "--trials", "50", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "verify hurwitz-properties"
    assert set(data["summary"]) == {"pass", "fail"}
    assert data["summary"]["fail"] == 0
    assert data["summary"]["pass"] == len(data["checks"])
    for rec in data["checks"]:
        assert rec["status"] in ("pass", "fail")


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_verify_deterministic_output(capsys):
    args = ("verify", "composition", "--trials", "25", "--seed", "9", "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_seed_env_var(capsys, monkeypatch):
    monkeypatch.setenv("HURWITZ_GA_SEED", "123")
    code, out1, _ = run_cli(capsys, "verify", "norm-lemma", "--trials", "25", "--format", "json")
    assert code == 0
    monkeypatch.setenv("HURWITZ_GA_SEED", "not-a-number")
    code, _, err = run_cli(capsys, "verify", "norm-lemma", "--trials", "25")
    assert code == 2
    assert "HURWITZ_GA_SEED" in err


def test_witness_zero_divisor(capsys):
    code, out, _ = run_cli(capsys, "witness", "zero-divisor", "0", "3", "+")
    assert code == 0
    assert "x . y = 0" in out
    assert "N(x) = 0" in out

    code, out, _ = run_cli(capsys, "witness", "zero-divisor", "3", "0", "+")
    assert code == 0
    assert "none exists (norm positive definite)" in out


def test_witness_non_assoc(capsys):
    code, out, _ = run_cli(capsys, "witness", "non-assoc", "3", "0", "+")
    assert code == 0
    assert "associator" in out
    assert "0 failed" in out


def test_witness_isomorphism_json(capsys):
    code, out, _ = run_cli(
        capsys, "witness", "isomorphism", "0", "3", "-", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["summary"] == {"pass": 2, "fail": 0}
    embedded = json.loads(data["witness"][0])
    assert embedded["source"] == "bullet:0,3:-"
    assert embedded["target"] == "O"


def test_witness_bad_variant(capsys):
    code, _, err = run_cli(capsys, "witness", "non-assoc", "3", "0", "x")
    assert code == 2
    assert "variant" in err


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
