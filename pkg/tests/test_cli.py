"""Denominator-spec grammar and the three subcommands, driven through main()."""

import json
import shutil
import subprocess

import pytest

from unitfrac.cli import main, parse_denom_spec
from unitfrac.multiset import Multiset

# ------------------------------------------------------------ spec grammar


def test_spec_single_values():
    assert parse_denom_spec("2,3,4,12") == Multiset([2, 3, 4, 12])


def test_spec_range():
    assert parse_denom_spec("1..10") == Multiset(range(1, 11))


def test_spec_squares():
    assert parse_denom_spec("squares(1..5)") == Multiset([1, 4, 9, 16, 25])


def test_spec_multiplicities_accumulate():
    assert parse_denom_spec("2,2,1..3") == Multiset([1, 2, 2, 2, 3])


def test_spec_tolerates_spaces():
    assert parse_denom_spec(" 2 , 3..4 , squares( 2..3 ) ") == Multiset([2, 3, 4, 4, 9])


@pytest.mark.parametrize(
    "spec,fragment",
    [
        ("2,x,3", "position 2"),
        ("", "bad item"),
        ("0", "positive"),
        ("5..3", "descending"),
        ("squares(3..1)", "descending"),
        ("2;3", "bad item"),
        ("-4", "bad item"),
    ],
)
def test_spec_rejects_junk(spec, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_denom_spec(spec)


# ------------------------------------------------------------------- solve


def test_solve_text_output(capsys):
    rc = main(["solve", "--denoms", "2,3,4,12", "--target", "1/3"])
    out = capsys.readouterr()
    assert rc == 0
    assert out.out.splitlines() == ["3", "4 12"]


def test_solve_no_representation(capsys):
    rc = main(["solve", "--denoms", "2,2,4,4", "--target", "3/8"])
    out = capsys.readouterr()
    assert rc == 1
    assert out.out == ""
    assert "no representation" in out.err


def test_solve_json_output(capsys):
    rc = main(["solve", "--denoms", "2,3,4,12", "--target", "1/3", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert payload["target"] == "1/3"
    assert payload["complete"] is True
    assert payload["count"] == 2
    assert payload["representations"] == [[3], [4, 12]]
    assert set(payload["stats"]) == {"branches_expanded", "elapsed_ms"}
    assert payload["stats"]["branches_expanded"] > 0


def test_solve_first_reports_incomplete(capsys):
    rc = main(["solve", "--denoms", "2,3,4,12", "--target", "1/3", "--first", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert payload["complete"] is False
    assert payload["count"] == 1
    # discovery order, not canonical order: {4,12} comes out of the tree first
    assert payload["representations"] == [[4, 12]]


def test_solve_first_when_unsolvable_is_complete(capsys):
    rc = main(["solve", "--denoms", "2,2,4,4", "--target", "3/8", "--first", "--json"])
    payload = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert payload["complete"] is True
    assert payload["representations"] == []


def test_solve_progress_goes_to_stderr(capsys):
    rc = main(["solve", "--denoms", "1..12", "--target", "1", "--progress"])
    out = capsys.readouterr()
    assert rc == 0
    assert "branches expanded" not in out.out


def test_solve_invalid_target(capsys):
    rc = main(["solve", "--denoms", "2,3", "--target", "abc"])
    assert rc == 2
    assert capsys.readouterr().err.startswith("error:")


def test_solve_invalid_denoms(capsys):
    rc = main(["solve", "--denoms", "2,,3", "--target", "1"])
    assert rc == 2
    assert "bad item" in capsys.readouterr().err


# ------------------------------------------------------------------ gvalue


def test_gvalue_finds_six(capsys):
    rc = main(["gvalue", "2", "--n-max", "10"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "smallest n with a representation of 2 in {1..n}: 6" in out
    assert "witnesses: 1" in out
    assert "1 2 3 6" in out


def test_gvalue_range_exhausted(capsys):
    rc = main(["gvalue", "2", "--n-max", "5"])
    out = capsys.readouterr()
    assert rc == 1
    assert "no representation of 2 within {1..5}" in out.err


def test_gvalue_first_flag(capsys):
    rc = main(["gvalue", "2", "--n-max", "10", "--first"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "witnesses: 1 (first only)" in out


def test_gvalue_invalid_target(capsys):
    assert main(["gvalue", "2/0"]) == 2
    assert capsys.readouterr().err.startswith("error:")


# -------------------------------------------------------------- conjecture


def test_conjecture_small_range(capsys):
    rc = main(["conjecture", "5", "6", "--c-max", "50", "--bounds", "4,10"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.splitlines() == ["d=5 c=4: 2 4 5 20", "d=6 c=2: 2 4 6 12"]


def test_conjecture_failure_row_sets_exit_code(capsys):
    rc = main(["conjecture", "4", "4", "--bounds", "10"])
    out = capsys.readouterr().out
    assert rc == 1
    assert "d=4: no witness" in out


def test_conjecture_empty_range(capsys):
    rc = main(["conjecture", "7", "5"])
    assert rc == 0
    assert capsys.readouterr().out == ""


def test_conjecture_rejects_empty_bounds(capsys):
    assert main(["conjecture", "5", "6", "--bounds", ","]) == 2
    assert "error:" in capsys.readouterr().err


# ------------------------------------------------------------ installed cmd


def test_console_script_is_wired_up():
    exe = shutil.which("unitfrac")
    assert exe, "console script not on PATH"
    proc = subprocess.run(
        [exe, "solve", "--denoms", "2,3,6", "--target", "1"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2 3 6"
