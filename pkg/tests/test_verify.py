import json
from pathlib import Path

import pytest

from ballotperm import counts, verify
from ballotperm.verify import (CheckReport, check_ballot_totals,
                               check_m_equidistribution, check_oeis_eulerian,
                               run_all)

FIXTURE = Path(__file__).parent / "data" / "b008292.txt"


def test_run_all_passes(tmp_path):
    reports = run_all(order=6, n_max_oracle=5)
    assert len(reports) == 8
    assert all(r.passed for r in reports)
    names = [r.name for r in reports]
    assert names == ["ballot_totals", "m_equidistribution", "first_letter_gf",
                     "symmetrized_first_letter", "factor_counts",
                     "functional_equation", "ballot_cyclic_factor",
                     "neighbor_pair_gf"]
    # reports serialize cleanly
    doc = json.dumps([r.to_json_dict() for r in reports])
    parsed = json.loads(doc)
    assert parsed[0]["passed"] is True and "elapsed_ms" in parsed[0]


def test_reports_deterministic():
    a = run_all(order=5, n_max_oracle=4)
    b = run_all(order=5, n_max_oracle=4)
    strip = lambda r: (r.name, r.order, r.passed, r.first_discrepancy)
    assert [strip(r) for r in a] == [strip(r) for r in b]


@pytest.mark.parametrize("name", counts.CATALOG_SERIES)
def test_every_mutation_is_caught(name):
    reports = run_all(order=6, n_max_oracle=5, mutation=name)
    failed = [r for r in reports if not r.passed]
    assert failed, f"corrupting {name} went unnoticed"
    assert all(r.first_discrepancy is not None for r in failed)


def test_mutated_ballot_series_fails_totals():
    cat = counts.build_catalog(7)
    bad = verify.mutate_catalog(cat, "ballot_gf")
    report = check_ballot_totals(6, catalog=bad)
    assert not report.passed
    assert report.first_discrepancy[0] == (3,)


def test_recursion_mutation_is_caught():
    counts.clear_caches()
    real = counts.eulerian_first

    def warped(n, d, j):
        if (n, d, j) == (4, 1, 2):
            return real(n, d, j) + 1
        return real(n, d, j)

    # patch by hand: everything memoized downstream must be dropped afterwards
    try:
        counts.eulerian_first = warped
        report = verify.check_first_letter_gf(5)
        assert not report.passed
        assert report.first_discrepancy[0] == (4, 1, 2)
    finally:
        counts.eulerian_first = real
        counts.clear_caches()


def test_check_report_passed_iff_no_discrepancy():
    r = CheckReport("x", 3, True)
    assert r.to_json_dict() == {"name": "x", "order": 3, "passed": True,
                                "elapsed_ms": 0.0}
    r = CheckReport("x", 3, False, ((1, 2), 3, 4), 0.5)
    d = r.to_json_dict()
    assert d["discrepancy"] == {"index": [1, 2], "lhs": "3", "rhs": "4"}


def test_m_equidistribution_small():
    assert check_m_equidistribution(4).passed


def test_ballot_totals_order_zero():
    # the empty permutation alone; the empty double-factorial products are 1
    assert check_ballot_totals(0).passed


def test_oeis_fixture_matches():
    report = check_oeis_eulerian(FIXTURE, n_max=10)
    assert report.passed


def test_oeis_empty_file_matches(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert check_oeis_eulerian(path, n_max=5).passed


def test_oeis_detects_alteration(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 1\n2 1\n3 1\n4 1\n5 5\n")
    report = check_oeis_eulerian(path, n_max=5)
    assert not report.passed
    assert report.first_discrepancy == ((5, 3, 1), 4, 5)


def test_oeis_parse_failure(tmp_path):
    path = tmp_path / "garbled.txt"
    path.write_text("1 1\nnot numbers\n")
    with pytest.raises(ValueError):
        check_oeis_eulerian(path)
    path.write_text("1 one\n")
    with pytest.raises(ValueError):
        check_oeis_eulerian(path)
