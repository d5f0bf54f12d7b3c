import json

import pytest

from symsens.cli import EXIT_OK, EXIT_SIZE, EXIT_USAGE, EXIT_VERIFY, main, render_table
from symsens.distribution import SensitivityHistogram


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def normalize(text):
    return [("".join(line.split())) for line in text.splitlines() if line.strip()]


def test_table_matches_fixture(capsys, fixtures_dir):
    status, out, _ = run(capsys, "table", "3")
    assert status == EXIT_OK
    assert normalize(out) == normalize((fixtures_dir / "listing_n3.txt").read_text())


def test_table_small_n(capsys):
    status, out, _ = run(capsys, "table", "1", "--format", "csv")
    assert status == EXIT_OK
    assert out.splitlines()[1:] == ["11,2,0", "10,1+1,1", "01,1+1,1", "00,2,0"]
    rows = json.loads(render_table(2, "json"))
    assert len(rows) == 8 and {r["sensitivity"] for r in rows} == {0, 2}


def test_table_too_large(capsys):
    status, _, err = run(capsys, "table", "7")
    assert status == EXIT_SIZE
    assert "census" in err


@pytest.mark.parametrize(
    "bits, comp, s, at_max, trivial",
    [("1110", "3+1", 3, True, False), ("1111", "4", 0, False, True), ("110010", "2+2+1+1", 5, True, False)],
)
def test_analyze_json(capsys, bits, comp, s, at_max, trivial):
    status, out, _ = run(capsys, "analyze", bits, "--format", "json")
    report = json.loads(out)
    assert status == EXIT_OK
    assert report["composition"] == comp
    assert report["sensitivity"] == s
    assert report["max_sensitivity"] is at_max
    assert report["trivial"] is trivial


def test_analyze_human_and_csv(capsys):
    _, out, _ = run(capsys, "analyze", "1110")
    assert "3+1" in out and "yes" in out
    _, out, _ = run(capsys, "analyze", "1010", "--format", "csv")
    assert out.splitlines()[1] == "3,1010,1+1+1+1,3 3 3 3,3,true,false"


def test_analyze_file(capsys, tmp_path):
    sym = tmp_path / "and.txt"
    sym.write_text("n=2\n0001\n")
    status, out, _ = run(capsys, "analyze", "--file", str(sym), "--format", "json")
    assert status == EXIT_OK and json.loads(out)["compact_truth_table"] == "001"

    asym = tmp_path / "asym.txt"
    asym.write_text("n=2\n0100\n")
    status, out, _ = run(capsys, "analyze", "--file", str(asym), "--format", "json")
    report = json.loads(out)
    assert status == EXIT_VERIFY and report["symmetric"] is False
    a, b = report["witness"]
    assert a["input"].count("1") == b["input"].count("1") and a["value"] != b["value"]


def test_analyze_usage_errors(capsys, tmp_path):
    assert run(capsys, "analyze", "10x")[0] == EXIT_USAGE
    assert run(capsys, "analyze")[0] == EXIT_USAGE
    assert run(capsys, "analyze", "--file", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE
    assert run(capsys, "nonsense")[0] == EXIT_USAGE


def test_analyze_file_cap(capsys, tmp_path):
    big = tmp_path / "big.txt"
    big.write_text("n=21\n0x0\n")
    assert run(capsys, "analyze", "--file", str(big))[0] == EXIT_SIZE
    assert run(capsys, "analyze", "--file", str(big), "--cap", "21")[0] == EXIT_USAGE


def test_census_formats_round_trip(capsys):
    status, out, _ = run(capsys, "census", "3", "--format", "csv")
    assert status == EXIT_OK
    assert out.splitlines()[1:] == ["3,0,2", "3,2,2", "3,3,12"]
    assert SensitivityHistogram.from_csv(out).nonzero() == {0: 2, 2: 2, 3: 12}

    _, out, _ = run(capsys, "census", "2", "--format", "json")
    assert json.loads(out) == {"n": 2, "counts": {"0": 2, "2": 6}, "total": 8}
    assert SensitivityHistogram.from_json(out).nonzero() == {0: 2, 2: 6}

    _, out, _ = run(capsys, "census", "1")
    assert "s = 0  2" in out and "s = 1  2" in out


def test_census_verify(capsys):
    status, out, err = run(capsys, "census", "8", "--verify")
    assert status == EXIT_OK
    assert out.count("PASS") == 3 and "FAIL" not in out
    status, out, err = run(capsys, "census", "4", "--verify", "--format", "json")
    assert status == EXIT_OK and err.count("PASS") == 3
    json.loads(out)


def test_census_cap(capsys):
    status, _, err = run(capsys, "census", "25")
    assert status == EXIT_SIZE and "compact tables" in err
    assert run(capsys, "census", "25", "--cap", "30")[0] == EXIT_USAGE


def test_count_rows(capsys):
    status, out, _ = run(capsys, "count", "--max-n", "3", "--format", "csv")
    assert status == EXIT_OK
    assert out.splitlines() == [
        "n,total,no_ones,max_sens,ratio",
        "1,4,2,2,1/2",
        "2,8,2,6,3/4",
        "3,16,4,12,3/4",
    ]
    _, out, _ = run(capsys, "count", "--max-n", "3")
    assert "0.500000000000" in out and "0.750000000000" in out


def test_count_large(capsys, tmp_path):
    target = tmp_path / "series.json"
    status, out, _ = run(capsys, "count", "--max-n", "64", "--format", "json", "--out", str(target))
    assert status == EXIT_OK and out == ""
    rows = json.loads(target.read_text())["rows"]
    assert rows[-1]["max_sens"] == 36893466926999387786
    _, out, _ = run(capsys, "count", "--max-n", "20")
    assert out.splitlines()[-1].split()[-1] == "0.993548393250"
    assert run(capsys, "count", "--max-n", "0")[0] == EXIT_USAGE
