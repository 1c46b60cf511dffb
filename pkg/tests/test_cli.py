import json

import pytest

from sgcount import oracle
from sgcount.cli import (
    THREADS_ENV_VAR,
    bench_rows,
    main,
    output_records,
    render_ratio,
)
from sgcount.explorer import count

from known_values import GENUS_COUNTS


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out.splitlines(), captured.err


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((12, 7), "1.71428"),
        ((23, 12), "1.91666"),
        ((7, 4), "1.75000"),
        ((1, 1), "1.00000"),
        ((2, 1), "2.00000"),
        ((3437839, 2091030), "1.64408"),
        ((204, 118), "1.72881"),
    ],
)
def test_ratio_truncates_at_five_digits(pair, expected):
    assert render_ratio(*pair) == expected


def test_count_csv(capsys):
    rc, lines, _ = run_cli(capsys, "count", "--genus", "10", "--format", "csv")
    assert rc == 0
    assert lines[0] == "genus,count,ratio"
    assert lines[-1] == "10,204,1.72881"
    assert len(lines) == 12


def test_count_default_format_is_csv(capsys):
    rc, lines, _ = run_cli(capsys, "count", "--genus", "0")
    assert rc == 0
    assert lines == ["genus,count,ratio", "0,1,"]


def test_count_with_threads(capsys):
    rc, lines, _ = run_cli(capsys, "count", "--genus", "29", "--threads", "4")
    assert rc == 0
    assert "29,3437839,1.64408" in lines


def test_count_formats_encode_identical_numbers(capsys):
    rc, csv_lines, _ = run_cli(capsys, "count", "--genus", "6", "--format", "csv")
    assert rc == 0
    rc, table_lines, _ = run_cli(capsys, "count", "--genus", "6", "--format", "table")
    assert rc == 0
    rc, json_lines, _ = run_cli(capsys, "count", "--genus", "6", "--format", "json")
    assert rc == 0

    csv_rows = [line.split(",") for line in csv_lines[1:]]
    table_rows = [line.split() for line in table_lines]
    payload = json.loads("\n".join(json_lines))
    for g, (csv_row, table_row, rec) in enumerate(zip(csv_rows, table_rows, payload)):
        assert int(csv_row[0]) == int(table_row[0]) == rec["genus"] == g
        assert int(csv_row[1]) == int(table_row[1]) == rec["count"] == GENUS_COUNTS[g]
        if g == 0:
            assert csv_row[2] == "" and rec["ratio"] is None and len(table_row) == 2
        else:
            assert csv_row[2] == table_row[2] == rec["ratio"]


def test_count_bound_error_exits_nonzero(capsys):
    rc, lines, err = run_cli(capsys, "count", "--genus", "200")
    assert rc == 1
    assert lines == []
    assert "error" in err


def test_count_rejects_zero_threads(capsys):
    rc, _, err = run_cli(capsys, "count", "--genus", "3", "--threads", "0")
    assert rc == 1
    assert "thread count" in err


def test_threads_env_override(capsys, monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "2")
    rc, lines, _ = run_cli(capsys, "count", "--genus", "8")
    assert rc == 0
    assert lines[-1].startswith(f"8,{GENUS_COUNTS[8]},")


def test_list_two_layers(capsys):
    rc, lines, _ = run_cli(capsys, "list", "--genus", "2", "--format", "csv")
    assert rc == 0
    assert lines[0] == "genus,conductor,multiplicity,generators,gaps"
    rows = {tuple(line.split(",")) for line in lines[1:]}
    assert rows == {
        ("0", "0", "1", "1", ""),
        ("1", "2", "2", "2 3", "1"),
        ("2", "3", "3", "3 4 5", "1 2"),
        ("2", "4", "2", "2 5", "1 3"),
    }


def test_list_degenerate(capsys):
    rc, lines, _ = run_cli(capsys, "list", "--genus", "0")
    assert rc == 0
    assert lines[1:] == ["0,0,1,1,"]


def test_listed_generators_reproduce_gaps(capsys):
    G = 4
    rc, lines, _ = run_cli(capsys, "list", "--genus", str(G), "--format", "csv")
    assert rc == 0
    B = 4 * G + 1
    for line in lines[1:]:
        _, _, _, gens_s, gaps_s = line.split(",")
        gens = {int(v) for v in gens_s.split()}
        gaps = frozenset(int(v) for v in gaps_s.split()) if gaps_s else frozenset()
        assert oracle.gap_set(oracle.closure(gens, B)) == gaps


def test_list_json_round_trip(capsys):
    rc, lines, _ = run_cli(capsys, "list", "--genus", "1", "--format", "json")
    assert rc == 0
    payload = json.loads("\n".join(lines))
    assert payload == [
        {"genus": 0, "conductor": 0, "multiplicity": 1, "generators": [1], "gaps": []},
        {"genus": 1, "conductor": 2, "multiplicity": 2, "generators": [2, 3], "gaps": [1]},
    ]


def test_list_rejects_large_bound(capsys):
    rc, _, err = run_cli(capsys, "list", "--genus", "15")
    assert rc == 1
    assert "listing bound" in err


@pytest.mark.parametrize("genus", [1, 6, 12])
def test_verify_passes(capsys, genus):
    rc, lines, _ = run_cli(capsys, "verify", "--genus", str(genus))
    assert rc == 0
    assert len(lines) == 4
    assert all(line.startswith("ok") for line in lines)


def test_verify_rejects_large_bound(capsys):
    rc, _, err = run_cli(capsys, "verify", "--genus", "15")
    assert rc == 1
    assert "verification bound" in err


def test_bench_reports_pairs_and_kernel(capsys):
    rc, lines, err = run_cli(capsys, "bench", "--genus", "3", "--kernel", "vector")
    assert rc == 0
    assert "kernel=vector" in err
    assert lines[0] == "genus,seconds"
    assert len(lines) == 5
    for g, line in enumerate(lines[1:]):
        genus_s, seconds_s = line.split(",")
        assert int(genus_s) == g
        assert float(seconds_s) >= 0.0


def test_bench_reports_scalar_distinctly(capsys):
    rc, _, err = run_cli(capsys, "bench", "--genus", "1", "--kernel", "scalar")
    assert rc == 0
    assert "kernel=scalar" in err


def test_bench_counts_match_count():
    for g, _, counts in bench_rows(4, 1, "auto"):
        assert counts == count(g)


def test_output_records_shape():
    records = output_records(count(3))
    assert [r.genus for r in records] == [0, 1, 2, 3]
    assert records[0].ratio == ""
    assert records[3].ratio == "2.00000"


def test_console_script_entry_point():
    import shutil
    import subprocess

    exe = shutil.which("sgcount")
    if exe is None:
        pytest.skip("console script not on PATH")
    out = subprocess.run(
        [exe, "count", "--genus", "5"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.splitlines()[-1] == "5,12,1.71428"
