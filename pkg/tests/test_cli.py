import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from stringy_calc.cli import main
from stringy_calc.stringy import stratification_from_json

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_exit(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def write(tmp_path, obj, name="s.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# -- hilb ---------------------------------------------------------------------


def test_hilb_rows(capsys):
    code, out, _ = run(capsys, "hilb", "--max", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["rows"] == [
        {"n": 0, "a_n": "1"},
        {"n": 1, "a_n": "24"},
        {"n": 2, "a_n": "324"},
    ]


def test_hilb_single_row(capsys):
    _, out, _ = run(capsys, "hilb", "--max", "0", "--format", "csv")
    assert csv_rows(out) == [{"n": "0", "a_n": "1"}]


def test_hilb_golden(capsys):
    _, out, _ = run(capsys, "hilb", "--max", "8")
    assert out == (GOLDEN / "hilb_8.txt").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ["hilb", "--max", "-1"],
        ["hilb", "--max", "x"],
        ["hilb"],
        ["hilb", "--max", "3", "--format", "xml"],
        ["obstruction", "--max", "1"],
        ["stringy"],
        ["stringy", "--model", "ogrady", "--strata", "f.json"],
        ["frobnicate"],
    ],
)
def test_bad_flags_exit_2(capsys, argv):
    assert run_exit(capsys, *argv) == 2


def test_max_order_cap(capsys, monkeypatch):
    monkeypatch.setenv("STRINGY_CALC_MAX_ORDER", "10")
    code, out, err = run(capsys, "hilb", "--max", "11")
    assert code == 2 and out == "" and "STRINGY_CALC_MAX_ORDER" in err
    assert run(capsys, "hilb", "--max", "10")[0] == 0
    # --vw needs index 4N-3
    assert run(capsys, "obstruction", "--max", "4", "--vw")[0] == 2


# -- obstruction --------------------------------------------------------------


def test_obstruction_golden(capsys):
    _, out, _ = run(capsys, "obstruction", "--max", "20", "--format", "csv")
    assert out == (GOLDEN / "obstruction_20.csv").read_text()
    flagged = {int(r["n"]) for r in csv_rows(out) if r["obstructed"] == "true"}
    assert flagged == {5, 6, 8, 11, 12, 13, 15, 16, 17, 18, 19, 20}


def test_obstruction_single_row(capsys):
    _, out, _ = run(capsys, "obstruction", "--max", "2", "--format", "json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 1 and rows[0]["obstructed"] is False


def test_obstruction_vw(capsys):
    _, out, _ = run(capsys, "obstruction", "--max", "5", "--vw", "--format", "json")
    rows = {r["n"]: r for r in json.loads(out)["rows"]}
    assert rows[5]["est_vw_differ"] is True
    assert rows[5]["fractional_part"] == "1/7"


def test_csv_and_json_agree(capsys):
    _, j, _ = run(capsys, "obstruction", "--max", "12", "--vw", "--format", "json")
    _, c, _ = run(capsys, "obstruction", "--max", "12", "--vw", "--format", "csv")
    jrows = json.loads(j)["rows"]
    crows = csv_rows(c)
    assert len(jrows) == len(crows)
    for jr, cr in zip(jrows, crows):
        assert list(jr) == list(cr)
        for k, v in jr.items():
            want = ("true" if v else "false") if isinstance(v, bool) else str(v)
            assert cr[k] == want


def test_json_has_no_floats(capsys):
    _, out, _ = run(capsys, "obstruction", "--max", "20", "--vw", "--format", "json")
    json.loads(out, parse_float=lambda s: pytest.fail(f"float {s} in output"))


# -- stringy ------------------------------------------------------------------


def test_stringy_model_n5(capsys):
    _, out, _ = run(
        capsys, "stringy", "--model", "ogrady", "--n", "5", "--e-stable", "0", "--format", "json"
    )
    rep = json.loads(out)
    assert rep["e_st"].endswith("/7")


def test_stringy_model_unknown_stable_part(capsys):
    _, out, _ = run(capsys, "stringy", "--model", "ogrady", "--n", "2")
    assert "105948 + e(M^s)" in out


def test_stringy_model_requires_n(capsys):
    assert run(capsys, "stringy", "--model", "ogrady")[0] == 2
    assert run(capsys, "stringy", "--model", "ogrady", "--n", "1")[0] == 2


def test_stringy_model_symbolic_needs_epolys(capsys):
    code, out, err = run(capsys, "stringy", "--model", "ogrady", "--n", "3", "--symbolic")
    assert code == 5 and out == "" and "MissingEpoly" in err


def test_stringy_smooth(capsys, tmp_path):
    f = write(tmp_path, {"divisors": [], "strata": [{"subset": [], "euler": "7"}]})
    _, out, _ = run(capsys, "stringy", "--strata", f, "--format", "csv")
    assert {r["field"]: r["value"] for r in csv_rows(out)}["e_st"] == "7"


def test_stringy_symbolic_golden(capsys):
    _, out, _ = run(capsys, "stringy", "--strata", str(GOLDEN / "one_divisor.json"), "--symbolic")
    assert out == (GOLDEN / "stringy_one_divisor.txt").read_text()


def test_stringy_json_roundtrip(capsys):
    src = str(GOLDEN / "one_divisor.json")
    _, out, _ = run(capsys, "stringy", "--strata", src, "--symbolic", "--format", "json")
    rep = json.loads(out)
    assert rep["limit_at_one"] == rep["e_st"] == "3/2"
    again = stratification_from_json(rep["stratification"])
    assert again == stratification_from_json(Path(src).read_text())


def test_stringy_csv_matches_json(capsys):
    src = str(GOLDEN / "one_divisor.json")
    _, j, _ = run(capsys, "stringy", "--strata", src, "--symbolic", "--format", "json")
    _, c, _ = run(capsys, "stringy", "--strata", src, "--symbolic", "--format", "csv")
    rep = json.loads(j)
    flat = {r["field"]: r["value"] for r in csv_rows(c)}
    assert set(flat) == set(rep) - {"stratification"}
    for k, v in flat.items():
        want = rep[k]
        assert v == (" ".join(want) if isinstance(want, list) else want)


def test_stringy_not_log_terminal(capsys, tmp_path):
    f = write(
        tmp_path,
        {"divisors": [{"name": "D1", "discrepancy": "-1/1"}], "strata": [{"subset": [], "euler": "1"}]},
    )
    code, out, err = run(capsys, "stringy", "--strata", f)
    assert code == 3 and out == "" and "NotLogTerminal" in err


@pytest.mark.parametrize(
    "content",
    [
        "{broken",
        '{"divisors": [], "strata": [{"subset": ["X"], "euler": "1"}]}',
        '{"divisors": [], "strata": [{"subset": [], "euler": "2", "epoly": ["1", "0"]}]}',
        '{"divisors": []}',
    ],
)
def test_stringy_schema_errors(capsys, tmp_path, content):
    code, out, _ = run(capsys, "stringy", "--strata", write(tmp_path, content))
    assert code == 4 and out == ""


def test_stringy_missing_file(capsys, tmp_path):
    assert run(capsys, "stringy", "--strata", str(tmp_path / "nope.json"))[0] == 4


def test_stringy_symbolic_unavailable(capsys, tmp_path):
    f = write(
        tmp_path,
        {
            "divisors": [{"name": "D", "discrepancy": "1/2"}],
            "strata": [
                {"subset": [], "euler": "1", "epoly": ["1"]},
                {"subset": ["D"], "euler": "1", "epoly": ["1"]},
            ],
        },
    )
    code, out, _ = run(capsys, "stringy", "--strata", f)
    assert code == 0 and "5/3" in out
    assert run(capsys, "stringy", "--strata", f, "--symbolic")[0] == 5


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stringy_calc", "obstruction", "--max", "7", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    flagged = [r["n"] for r in csv_rows(proc.stdout) if r["obstructed"] == "true"]
    assert flagged == ["5", "6"]
    assert proc.stderr == ""
