import json
import subprocess
import sys

import pytest

from gridthresh import formulas
from gridthresh.cli import CSV_COLUMNS, count_row, main
from gridthresh.verify import parse_checks, run_verify


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--m", "3", "--n", "3", "--quantities", "t,t3,t4")
    assert code == 0
    assert out == "m,n,t,t3,t4\n3,3,58,40,18\n"


def test_count_plane(capsys):
    code, out, _ = run(capsys, "count", "--m", "3", "--n", "3", "--quantities", "plane")
    assert out.splitlines()[1] == "3,3,29,20,9,43,15,5"


def test_count_all_columns(capsys):
    code, out, _ = run(capsys, "count", "--m", "4", "--n", "4")
    header, row = out.splitlines()
    assert header.split(",") == CSV_COLUMNS
    values = dict(zip(CSV_COLUMNS, map(int, row.split(","))))
    assert (values["tc"], values["tc3"], values["tc4"], values["te"], values["tv"]) == (47, 33, 14, 82, 36)


def test_count_json_sigma(capsys):
    code, out, _ = run(capsys, "count", "--m", "2", "--n", "2", "--quantities", "sigma", "--format", "json")
    data = json.loads(out)
    assert (data["sigma_num"], data["sigma_den"]) == (24, 7)
    assert data["sigma_decimal"].startswith("3.428571")


def test_count_bad_dims(capsys):
    code, _, err = run(capsys, "count", "--m", "1", "--n", "5")
    assert code == 2
    assert "m >= 2" in err


def test_count_bad_quantity(capsys):
    code, _, _ = run(capsys, "count", "--m", "2", "--n", "2", "--quantities", "zeta")
    assert code == 2


def test_count_row_is_closed_form():
    row = count_row(formulas.GridDims(5, 6))
    assert row["t"] == formulas.t_count((5, 6))
    assert set(row) == set(CSV_COLUMNS)


def test_enumerate(tmp_path, capsys):
    path = tmp_path / "e.jsonl"
    code, _, _ = run(capsys, "enumerate", "--m", "2", "--n", "2", "--output", str(path))
    assert code == 0
    recs = [json.loads(line) for line in path.read_text().splitlines()]
    funcs, summary = recs[:-1], recs[-1]
    assert len(funcs) == 14
    assert summary["summary"] is True
    assert (summary["t3"], summary["t4"]) == (8, 6)
    assert all(r["size"] in (3, 4) for r in funcs)
    assert [int(r["bits"], 16) for r in funcs] == sorted(int(r["bits"], 16) for r in funcs)


def test_enumerate_3x3(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "3", "--n", "3")
    assert len(out.splitlines()) == 59


def test_enumerate_unwritable(tmp_path, capsys):
    code, _, _ = run(capsys, "enumerate", "--m", "2", "--n", "2", "--output", str(tmp_path / "no" / "x"))
    assert code == 2


def test_teach_worked_left(capsys):
    code, out, _ = run(capsys, "teach", "--m", "10", "--n", "10", "--line", "55,7,5", "--format", "json")
    data = json.loads(out)
    assert {(x, y): v for x, y, v in data["points"]} == {(5, 4): 0, (8, 0): 1, (3, 7): 1}
    assert data["size"] == 3


def test_teach_worked_right(capsys):
    code, out, _ = run(capsys, "teach", "--m", "10", "--n", "10", "--line", "22,3,2")
    assert "size=4" in out and "kappa=2" in out


def test_teach_degenerate(capsys):
    code, _, err = run(capsys, "teach", "--m", "2", "--n", "2", "--line", "0,0,0")
    assert code == 2
    assert "degenerate" in err


def test_arrange_plane(capsys):
    code, out, _ = run(capsys, "arrange", "--m", "3", "--n", "3", "--mode", "plane")
    assert code == 0
    assert "geometric: 29/20/9/43/15/5" in out
    assert "formula:   29/20/9/43/15/5" in out
    assert out.rstrip().endswith("MATCH")


def test_arrange_triangle(capsys, tmp_path):
    svg = tmp_path / "t.svg"
    code, out, _ = run(capsys, "arrange", "--m", "4", "--n", "4", "--mode", "triangle", "--svg", str(svg))
    assert "geometric: 47/33/14/82/36" in out
    assert svg.read_text().count('class="vertex"') == 36


def test_arrange_2x2(capsys):
    code, out, _ = run(capsys, "arrange", "--m", "2", "--n", "2")
    assert code == 0 and "MATCH" in out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-m", "3", "--max-n", "3", "--checks", "all")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out


def test_verify_ordering_independent_of_jobs():
    a = run_verify(3, 3, parse_checks("formulas,identities"), jobs=1)
    b = run_verify(3, 3, parse_checks("formulas,identities"), jobs=2)
    assert a.lines() == b.lines()


def test_verify_catches_corrupted_formula(monkeypatch, capsys):
    real = formulas.t3_t4

    def broken(dims):
        t3, t4 = real(dims)
        d = formulas.GridDims.of(dims)
        return (t3 + 1, t4 - 1) if (d.m, d.n) == (3, 2) else (t3, t4)

    monkeypatch.setattr(formulas, "t3_t4", broken)
    code, out, _ = run(capsys, "verify", "--max-m", "3", "--max-n", "3", "--checks", "teaching")
    assert code == 1
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert fails
    assert all("m=3 n=2" in line for line in fails)
    assert "(t3, t4)" in fails[0]


def test_verify_bad_checks(capsys):
    code, _, _ = run(capsys, "verify", "--max-m", "2", "--max-n", "2", "--checks", "bogus")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "gridthresh.cli", "count", "--m", "2", "--n", "2", "--quantities", "t"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout == "m,n,t\n2,2,14\n"
