import csv
import io
import json
from pathlib import Path

from ballotperm.cli import main

FIXTURE = Path(__file__).parent / "data" / "b008292.txt"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_b_csv_sums_to_45(capsys):
    code, out, _ = run(capsys, "table", "--stat", "b", "--n", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert all(row[0] == "5" for row in rows)
    assert sum(int(row[2]) for row in rows) == 45


def test_table_a_first_json(capsys):
    code, out, _ = run(capsys, "table", "--stat", "A_first", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["stat"] == "A_first" and doc["n"] == 3
    entries = {(e["d"], e["j"]): int(e["count"]) for e in doc["entries"]}
    assert entries == {(0, 1): 1, (1, 1): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1}


def test_table_a_n0(capsys):
    code, out, _ = run(capsys, "table", "--stat", "A", "--n", "0", "--format", "csv")
    assert code == 0
    assert out.strip() == "0,0,1"


def test_csv_and_json_carry_identical_data(capsys):
    code, out_json, _ = run(capsys, "table", "--stat", "E", "--n", "5")
    code2, out_csv, _ = run(capsys, "table", "--stat", "E", "--n", "5",
                            "--format", "csv")
    assert code == code2 == 0
    from_json = {(e["d"], e["j"]): e["count"] for e in json.loads(out_json)["entries"]}
    from_csv = {(int(r[1]), int(r[2])): r[3]
                for r in csv.reader(io.StringIO(out_csv))}
    assert from_json == from_csv


def test_table_counts_are_decimal_strings(capsys):
    code, out, _ = run(capsys, "table", "--stat", "b", "--n", "14", "--format", "json")
    assert code == 0
    for e in json.loads(out)["entries"]:
        assert isinstance(e["count"], str) and e["count"].isdigit()


def test_unknown_stat_is_usage_error(capsys):
    code, _, _ = run(capsys, "table", "--stat", "nope", "--n", "3")
    assert code == 2


def test_table_cap(capsys):
    code, _, err = run(capsys, "table", "--stat", "b", "--n", "15")
    assert code == 2 and "force" in err


def test_table_l_even_n_domain_error(capsys):
    code, _, err = run(capsys, "table", "--stat", "l", "--n", "4")
    assert code == 2 and "odd" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--stat", "b", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert {(e["d"],): int(e["count"]) for e in doc["entries"]} == {(0,): 1, (1,): 2}
    code, _, _ = run(capsys, "oracle", "--stat", "b", "--n", "11")
    assert code == 2


def test_oracle_matches_table_for_b(capsys):
    _, via_table, _ = run(capsys, "table", "--stat", "b", "--n", "6", "--format", "csv")
    _, via_oracle, _ = run(capsys, "oracle", "--stat", "b", "--n", "6", "--format", "csv")
    assert via_table == via_oracle


def test_verify_low_order_passes(capsys):
    code, out, _ = run(capsys, "verify", "--order", "4", "--n-max-oracle", "4")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 8 and all(r["passed"] for r in reports)


def test_verify_default_order(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 8 and all(r["passed"] for r in reports)
    assert all(r["order"] in (10, 7) for r in reports)


def test_verify_order_one_is_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--order", "1", "--n-max-oracle", "3")
    assert code == 0


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "--order", "20")
    assert code == 2 and "force" in err
    code, _, _ = run(capsys, "verify", "--order", "5", "--n-max-oracle", "12")
    assert code == 2


def test_verify_injected_mutation(capsys):
    code, out, _ = run(capsys, "verify", "--order", "4", "--n-max-oracle", "3",
                       "--inject-mutation", "ballot_gf")
    assert code == 1
    reports = json.loads(out)
    bad = [r for r in reports if not r["passed"]]
    assert bad and all("discrepancy" in r for r in bad)


def test_verify_with_oeis_bfile(capsys):
    code, out, _ = run(capsys, "verify", "--order", "3", "--n-max-oracle", "3",
                       "--oeis-bfile", str(FIXTURE), "--n", "10")
    assert code == 0
    assert json.loads(out)[-1]["name"] == "eulerian_oeis"


def test_verify_oeis_mismatch(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n2 7\n")
    code, out, _ = run(capsys, "verify", "--order", "3", "--n-max-oracle", "3",
                       "--oeis-bfile", str(bad))
    assert code == 1
    code, _, err = run(capsys, "verify", "--order", "3", "--n-max-oracle", "3",
                       "--oeis-bfile", str(tmp_path / "missing.txt"))
    assert code == 2
    garbled = tmp_path / "garbled.txt"
    garbled.write_text("1 2 3\n")
    code, _, _ = run(capsys, "verify", "--order", "3", "--n-max-oracle", "3",
                     "--oeis-bfile", str(garbled))
    assert code == 2


def test_dump(capsys):
    code, out, _ = run(capsys, "dump", "--series", "eulerian_gf", "--order", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t^0 x^1 y^0 z^0 : 1/1"
    assert all(" : " in line for line in lines)


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run(capsys, "table", "--stat", "A", "--n", "4",
                       "--out", str(target))
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert [e["count"] for e in doc["entries"]] == ["1", "11", "11", "1"]


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, )[0] == 2
    assert run(capsys, "--help")[0] == 0
