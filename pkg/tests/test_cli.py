import csv
import io
import json
import subprocess
import sys

import pytest

from gradus import checks
from gradus.cli import UsageError, main, parse_root, parse_root_list
from gradus.rootsys import build


def run_cli(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as e:  # argparse errors
        code = e.code
    out, err = capsys.readouterr()
    return code, out, err


def test_show_json_payload(capsys):
    code, out, err = run_cli(["show", "A2:1,0", "--json"], capsys)
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["grading"] == "A2:1,0"
    assert data["marks"] == [1, 0]
    assert data["coxeter_number"] == 3
    assert data["abelian"] is True
    assert data["positive_slice_sizes"] == [1, 2]
    assert data["theta"] == "a1+a2"


def test_show_human_output(capsys):
    code, out, _ = run_cli(["show", "B2:es"], capsys)
    assert code == 0
    assert out.startswith("grading: B2:0,1\n")
    assert "extra_special: True" in out


def test_show_rejects_zero_marks(capsys):
    code, out, err = run_cli(["show", "A2:0,0"], capsys)
    assert code == 2
    assert "marks" in err


def test_ideals_json(capsys):
    code, out, _ = run_cli(["ideals", "A2:1,0", "--json", "--poly"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["count"] == 3
    assert data["antichain_count"] == 3
    assert data["m_polynomial"] == [1, 1, 1]


def test_ideals_csv_listing(capsys):
    code, out, _ = run_cli(["ideals", "A2:1,0", "--csv", "--list"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3
    assert rows[0]["size"] == "0"
    assert rows[-1]["roots"] == "a1 a1+a2"


def test_weyl_counts(capsys):
    code, out, _ = run_cli(["weyl", "B2:es", "--json", "--min", "--max"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["coset_count"] == 4
    assert data["min_count"] == 3 and data["max_count"] == 3
    assert data["ideal_polynomial"] == [1, 1, 1]
    words = [row["word"] for row in data["minimal"]]
    assert words == ["e", "s2", "s2 s1 s2"]


def test_element_pinned(capsys):
    code, out, _ = run_cli(["element", "B2:es", "--ideal", "a2", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["w_min"]["word"] == "s2"
    assert data["w_max"]["word"] == "s1 s2"
    assert data["max_of_ideal"] == ["a2"]
    assert data["min_of_complement"] == ["a1+a2"]
    assert data["fiber_size"] == 2


def test_element_empty_ideal(capsys):
    code, out, _ = run_cli(["element", "B2:es", "--ideal", "", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["w_min"]["word"] == "e"
    assert data["fiber_size"] == 1


def test_element_rejects_non_ideal(capsys):
    code, _, err = run_cli(["element", "B2:es", "--ideal", "a1+a2"], capsys)
    assert code == 2
    assert "not a lower ideal" in err


def test_arrangement_report(capsys):
    code, out, _ = run_cli(["arrangement", "G2:es", "--json", "--charpoly"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["region_count"] == 5
    assert data["ideal_count"] == 5
    assert data["char_poly"] == [4, -5, 1]
    assert data["exponents_match"] is True


def test_verify_scoped(capsys):
    code, out, _ = run_cli(["verify", "--suite", "ideals", "B2:es"], capsys)
    assert code == 0
    assert "0 failures" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "rootsys", "--json", "A2"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["failures"] == 0
    assert data["total"] == len(data["checks"])
    assert all(row["ok"] for row in data["checks"])


def test_verify_exit_one_on_failure(capsys):
    @checks.suite("zz-always-red")
    def _always_red(rs, gradings):
        yield checks.CheckResult("zz-always-red", "unit", "forced", False, "boom")

    try:
        code, out, _ = run_cli(["verify", "--suite", "zz-always-red", "A2"], capsys)
        assert code == 1
        assert "FAIL" in out
    finally:
        del checks.SUITES["zz-always-red"]


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(["verify", "--suite", "nope", "A2"], capsys)
    assert code == 2


def test_json_and_csv_conflict(capsys):
    code, _, err = run_cli(["show", "A2:1,0", "--json", "--csv"], capsys)
    assert code == 2


def test_out_writes_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(["show", "A3:0,1,0", "--json", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    code2, direct, _ = run_cli(["show", "A3:0,1,0", "--json"], capsys)
    assert path.read_text() == direct


def test_json_double_run_identical(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run_cli(["arrangement", "B3:0,1,0", "--json"], capsys)
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]
    assert runs[0].endswith("\n")


def test_parse_root():
    rs = build("B2")
    assert parse_root(rs, "a1+2a2").coords == (1, 2)
    assert parse_root(rs, "2a2 + a1").coords == (1, 2)
    assert parse_root(rs, "A2").coords == (0, 1)
    with pytest.raises(UsageError):
        parse_root(rs, "a5")
    with pytest.raises(UsageError):
        parse_root(rs, "2a1")
    with pytest.raises(UsageError):
        parse_root(rs, "zz")


def test_parse_root_list():
    rs = build("B2")
    assert parse_root_list(rs, "") == []
    got = parse_root_list(rs, "a2, a1+a2")
    assert [r.coords for r in got] == [(0, 1), (1, 1)]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gradus.cli", "ideals", "G2:es", "--json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 5
