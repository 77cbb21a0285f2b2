import json
import subprocess
import sys

import pytest

from refinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_avoid_123(capsys):
    code, out, _ = run(capsys, "table", "--stat", "avoid", "--pattern", "123", "--n-max", "8")
    assert code == 0
    assert out.splitlines()[8] == "35 0 35 0 0 0 0 0 0"


def test_table_once_321(capsys):
    _, out, _ = run(capsys, "table", "--stat", "once", "--pattern", "321", "--n-max", "8")
    assert out.splitlines()[7] == "0 14 0 18 0 5 0 0"


def test_table_top_rows(capsys):
    _, out, _ = run(capsys, "table", "--stat", "avoid", "--pattern", "132", "--n-max", "2")
    assert out == "1\n0 1\n1 0 1\n"


def test_table_csv_layout(capsys):
    _, out, _ = run(capsys, "table", "--stat", "avoid", "--pattern", "132", "--n-max", "2", "--format", "csv")
    assert out == "n,k=0,k=1,k=2\n0,1,,\n1,0,1,\n2,1,0,1\n"


def test_table_json_schema(capsys):
    _, out, _ = run(capsys, "table", "--stat", "once", "--pattern", "231", "--n-max", "5", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"stat", "pattern", "rows"}
    assert data["rows"][5] == [0, 0, 0, 2, 0, 0]


def test_formula_and_oracle_tables_agree(capsys):
    _, a, _ = run(capsys, "table", "--stat", "once", "--pattern", "312", "--n-max", "7", "--source", "oracle")
    _, b, _ = run(capsys, "table", "--stat", "once", "--pattern", "312", "--n-max", "7")
    assert a == b


def test_table_is_byte_stable(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run(capsys, "table", "--stat", "avoid", "--pattern", "231", "--n-max", "10", "--format", "csv", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_table_rejects_long_pattern(capsys):
    code, _, err = run(capsys, "table", "--stat", "avoid", "--pattern", "1234")
    assert code == 2 and "S_3" in err


def test_verify_full(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "8")
    assert code == 0
    assert "S6 cycle table: 2^14^1 gives 20 vs 18" in out
    assert out.splitlines()[-1].startswith("ALL PASS")


def test_verify_bijections_only(capsys):
    code, out, _ = run(capsys, "verify", "--sections", "bijections", "--n-max", "6")
    assert code == 0
    assert "delta" in out and "cells" in out


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "0")
    assert code == 0 and "ALL PASS" in out


def test_verify_unknown_section(capsys):
    code, _, err = run(capsys, "verify", "--sections", "nope")
    assert code == 2 and "unknown section" in err


def test_verify_exit_code_tracks_failures(monkeypatch, capsys):
    from refinv import cli
    from refinv.formulas import Check

    bad = Check("broken")
    bad.expect("cell", 1, 2)
    monkeypatch.setattr(cli, "run", lambda sections, n_max: [bad])
    code, out, _ = run(capsys, "verify", "--n-max", "3")
    assert code == 1 and "FAIL broken" in out


@pytest.mark.parametrize(
    "name, arg, expected",
    [
        ("delta", "3 4 1 2 5 7 6 8", "UUDDUUDU"),
        ("delta-inv", "UUDDUUDU", "3 4 1 2 5 7 6 8"),
        ("zeta", "6 8 9 7 5 1 4 2 3", "UUUDDUDDU"),
        ("zeta-inv", "UUUDDUDDU", "6 8 9 7 5 1 4 2 3"),
        ("k", "3 2 1", "UDUDUD"),
        ("k-inv", "UUDD", "1 2"),
        ("gamma", "2 1", "1 2"),
        ("big-gamma", "UDUD", "UUDD"),
        ("big-gamma", "2 1", "1 2"),
        ("mdp", "UUDU|UUDDUD", "UUDUUUUDDU"),
        ("mdp-inv", "UUDUUUUDDU", "UUDU|UUDDUD"),
    ],
)
def test_bij(capsys, name, arg, expected):
    code, out, _ = run(capsys, "bij", name, arg)
    assert code == 0 and out == expected + "\n"


def test_bij_domain_error(capsys):
    code, out, err = run(capsys, "bij", "delta", "2 3 1")
    assert code == 2 and out == ""
    assert err.strip() == "error: 2 3 1 is not an involution"


def test_bij_render(capsys):
    _, out, _ = run(capsys, "bij", "delta", "2 1", "--render")
    assert out == "UD\n/\\\n__\n"


def test_render_command(capsys):
    _, out, _ = run(capsys, "render", "UUDD")
    assert out == " /\\\n/  \\\n____\n"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "refinv", "table", "--stat", "avoid", "--pattern", "321", "--n-max", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert res.stdout == "1\n0 1\n1 0 1\n0 2 0 1\n"
