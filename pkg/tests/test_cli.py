import json

import pytest

from nthilbert.cli import main
from nthilbert.exactlin import matrix_from_csv
from nthilbert.ntdht import embedded_forward16


def test_build_matrix(tmp_path):
    out = tmp_path / "m.csv"
    assert main(["build-matrix", "--n", "16", "--modulus", "16", "--variant", "paper", "--out", str(out)]) == 0
    assert matrix_from_csv(out.read_text()) == embedded_forward16()
    assert out.read_bytes().endswith(b"0,1\n")


def test_build_matrix_bad_modulus(tmp_path):
    assert main(["build-matrix", "--n", "4", "--modulus", "12", "--out", str(tmp_path / "m")]) == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nope"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["transform", "--out", "x.csv"])
    assert e.value.code == 1


def test_transform_preset(tmp_path, capsys):
    out = tmp_path / "t.csv"
    assert main(["transform", "--preset", "fig2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "index,value_original,value_transformed,value_recovered"
    assert lines[1] == "0,1,32,1"
    assert "transitions=1" in capsys.readouterr().out


def test_transform_fig1_prints_erratum(tmp_path, capsys):
    assert main(["transform", "--preset", "fig1", "--out", str(tmp_path / "t.csv")]) == 0
    assert "15 values" in capsys.readouterr().err


def test_transform_input_and_reduce(tmp_path, capsys):
    src = tmp_path / "in.csv"
    src.write_text("value\n" + "\n".join(str(i % 4) for i in range(8)) + "\n")
    out = tmp_path / "t.csv"
    assert main(["transform", "--input", str(src), "--spec", "8,8,odd-diff", "--reduce-mod",
                 "--out", str(out)]) == 0
    vals = [int(l.split(",")[2]) for l in out.read_text().splitlines()[1:]]
    assert all(0 <= v < 8 for v in vals)


def test_transform_bad_input(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("1\n2\n")
    assert main(["transform", "--input", str(src), "--out", str(tmp_path / "o")]) == 3
    src.write_text("1/2\n" * 16)
    assert main(["transform", "--input", str(src), "--out", str(tmp_path / "o")]) == 3


def test_transform_singular_spec(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("1\n" * 32)
    assert main(["transform", "--input", str(src), "--spec", "32,16,odd-diff",
                 "--out", str(tmp_path / "o")]) == 2


def test_roundtrip(capsys):
    assert main(["roundtrip", "--trials", "50", "--seed", "5"]) == 0
    assert "failures=0" in capsys.readouterr().out


def test_classic(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("index,value\n0,1\n")
    out = tmp_path / "g.csv"
    assert main(["classic", "--input", str(src), "--window", "5", "--k-range=-3..3",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "index,value,value_scaled"
    assert lines[1].startswith("-3,-1/3,")
    assert lines[4].startswith("0,0,")


def test_search(tmp_path):
    out = tmp_path / "s.jsonl"
    assert main(["search", "--n-list", "2,4", "--mod-exp", "1..3", "--out", str(out)]) == 0
    recs = [json.loads(l) for l in out.read_text().splitlines()]
    assert len(recs) == 2 * 3 * 2
    assert {r["inverse_found"] for r in recs if r["n"] == 2} == {True}
    assert {r["inverse_found"] for r in recs if r["n"] == 4} == {False}
    assert set(recs[0]) >= {"n", "modulus", "variant", "det_parity", "inverse_found",
                            "roundtrip_ok", "counterexample"}
    assert main(["search", "--n-list", "2", "--mod-exp", "3", "--out", str(out)]) == 3


def test_compare_printed(tmp_path):
    out = tmp_path / "c.json"
    assert main(["compare-printed", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["erratum_rows"] == [14, 15]
    assert report["total_compared"] == 224


def test_figures(tmp_path):
    assert main(["figures", "--out-dir", str(tmp_path / "a"), "--svg"]) == 0
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert names == [f"fig{i}.{e}" for i in range(1, 5) for e in ("csv", "svg")]
