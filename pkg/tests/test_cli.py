"""Command-line behavior: output shapes, exit codes, deterministic sweeps."""

import json

import pytest

from fibsemi.cli import main
from fibsemi.oracle import MAX_BITS_ENV

GOLDEN_SWEEP = """\
a,b,n,d,kappa,frobenius,genus,verified,error
1,1,3,2,2,3,2,true,
1,1,3,3,,,,,"gcd(V_n, F_d) = 2"
1,1,3,4,2,11,6,true,
1,1,4,2,2,13,7,true,
1,1,4,3,2,23,12,true,
1,1,4,4,,,,,"gcd(V_n, F_d) = 3"
1,1,5,2,3,42,22,true,
1,1,5,3,2,79,40,true,
1,1,5,4,2,131,66,true,
1,1,6,2,3,123,63,true,
1,1,6,3,,,,,"gcd(V_n, F_d) = 2"
1,1,6,4,3,369,188,true,
1,3,3,2,3,25,14,true,
1,3,3,3,,,,,"gcd(V_n, F_d) = 2"
1,3,3,4,2,83,42,true,
1,3,4,2,3,87,46,true,
1,3,4,3,2,167,84,true,
1,3,4,4,2,275,138,true,
1,3,5,2,4,246,124,true,
1,3,5,3,2,459,230,true,
1,3,5,4,3,738,371,true,
1,3,6,2,4,673,341,true,
1,3,6,3,,,,,"gcd(V_n, F_d) = 2"
1,3,6,4,,,,,"gcd(V_n, F_d) = 3"
"""


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_summary_text(capsys):
    code, out, _ = run(["summary", "--fib", "--n", "5", "--d", "2"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "S = <5, 13, 34>",
        "embedding dimension: 3",
        "frobenius number: 42",
        "genus: 22",
    ]


def test_summary_json(capsys):
    code, out, _ = run(
        ["summary", "--seq", "1,3", "--n", "4", "--d", "2", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "a": 1,
        "b": 3,
        "n": 4,
        "d": 2,
        "embedding_dimension": 3,
        "min_generators": [7, 18, 47],
        "frobenius": 87,
        "genus": 46,
    }


def test_summary_trivial_semigroup(capsys):
    code, out, _ = run(["summary", "--fib", "--n", "2", "--d", "2"], capsys)
    assert code == 0
    assert "frobenius number: -1" in out


def test_apery_rows(capsys):
    code, out, _ = run(["apery", "--fib", "--n", "5", "--d", "2"], capsys)
    assert code == 0
    assert out.splitlines() == ["0 0", "1 26", "2 47", "3 13", "4 34"]


def test_verify_passes(capsys):
    code, out, _ = run(["verify", "--lucas", "--n", "4", "--d", "2"], capsys)
    assert code == 0
    assert "4/4 checks passed" in out


def test_verify_odd_step(capsys):
    code, out, _ = run(["verify", "--fib", "--n", "7", "--d", "3"], capsys)
    assert code == 0
    assert "4/4 checks passed" in out


def test_invalid_params_exit_2(capsys):
    code, _, err = run(["summary", "--seq", "2,4", "--n", "3", "--d", "2"], capsys)
    assert code == 2
    assert "gcd(V_1, V_2)" in err
    code, _, err = run(["summary", "--fib", "--n", "6", "--d", "3"], capsys)
    assert code == 2
    assert "gcd(V_n, F_d)" in err
    code, _, err = run(["summary", "--fib", "--n", "0", "--d", "2"], capsys)
    assert code == 2


def test_oracle_ceiling_exit_3(capsys, monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "4096")
    code, _, err = run(["verify", "--fib", "--n", "9", "--d", "2"], capsys)
    assert code == 3
    assert "ceiling" in err


def test_unwritable_output_exit_4(capsys, tmp_path):
    out = tmp_path / "missing" / "rows.csv"
    code, _, err = run(
        ["sweep", "--fib", "--n", "3:4", "--d", "2", "--out", str(out)], capsys
    )
    assert code == 4
    assert "cannot write" in err


def test_sweep_golden_csv(capsys, tmp_path):
    out = tmp_path / "rows.csv"
    code, _, _ = run(
        ["sweep", "--fib", "--lucas", "--n", "3:6", "--d", "2,3,4",
         "--out", str(out), "--verify"],
        capsys,
    )
    assert code == 0
    assert out.read_text() == GOLDEN_SWEEP


def test_sweep_repeat_is_byte_identical(capsys, tmp_path):
    args = ["sweep", "--seq", "2,5", "--seq", "3,4", "--n", "3:7", "--d", "2,4"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(args + ["--out", str(a)], capsys)[0] == 0
    assert run(args + ["--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    header, *rows = a.read_text().splitlines()
    assert header == "a,b,n,d,kappa,frobenius,genus,verified,error"
    assert len(rows) == 20
    # unverified sweep leaves the verified column empty
    assert all(r.split(",")[7] == "" for r in rows)


def test_sweep_json(capsys, tmp_path):
    out = tmp_path / "rows.json"
    code, _, _ = run(
        ["sweep", "--fib", "--n", "5:5", "--d", "2", "--format", "json",
         "--out", str(out), "--verify"],
        capsys,
    )
    assert code == 0
    rows = json.loads(out.read_text())
    assert rows == [
        {
            "a": 1, "b": 1, "n": 5, "d": 2,
            "kappa": 3, "frobenius": 42, "genus": 22,
            "verified": True, "error": None,
        }
    ]


def test_sweep_seed_dedup(capsys, tmp_path):
    out = tmp_path / "rows.csv"
    code, _, _ = run(
        ["sweep", "--fib", "--seq", "1,1", "--n", "4:4", "--d", "2", "--out", str(out)],
        capsys,
    )
    assert code == 0
    assert len(out.read_text().splitlines()) == 2  # header + one row


def test_sweep_requires_some_seed(capsys, tmp_path):
    code, _, err = run(
        ["sweep", "--n", "3:4", "--d", "2", "--out", str(tmp_path / "x.csv")], capsys
    )
    assert code == 2
    assert "no sequences" in err


def test_sweep_infeasible_rows_are_marked(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "4096")
    out = tmp_path / "rows.csv"
    code, _, _ = run(
        ["sweep", "--fib", "--n", "8:8", "--d", "2", "--out", str(out), "--verify"],
        capsys,
    )
    assert code == 0
    row = out.read_text().splitlines()[1].split(",")
    assert row[4:7] == ["4", "932", "470"]
    assert row[7] == "false"


def test_bad_seq_argument_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["summary", "--seq", "1;3", "--n", "4", "--d", "2"])
    assert exc.value.code == 2
    capsys.readouterr()
