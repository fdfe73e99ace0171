from math import factorial

import pytest

from ballotperm import oracle
from ballotperm.counts import ballot_total
from ballotperm.oracle import (CountTable, oracle_E, oracle_b_factor,
                               oracle_ballot_desc, oracle_eulerian_first,
                               oracle_l, oracle_odd_order_M, oracle_p_cyclic)


def test_count_table_access():
    t = CountTable("b", 3, {(0,): 1, (1,): 2})
    assert t[0] == 1 and t[(1,)] == 2 and t[5] == 0
    assert t.total() == 3
    assert t.sorted_items() == [((0,), 1), ((1,), 2)]


def test_eulerian_first_small():
    assert oracle_eulerian_first(1).entries == {(0, 1): 1}
    assert oracle_eulerian_first(3).entries == {
        (0, 1): 1, (1, 1): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1}


def test_eulerian_first_row_sums():
    t = oracle_eulerian_first(3)
    rows = [sum(t[(d, j)] for j in range(1, 4)) for d in range(3)]
    assert rows == [1, 4, 1]
    for n in range(1, 7):
        assert oracle_eulerian_first(n).total() == factorial(n)


def test_ballot_desc():
    assert oracle_ballot_desc(0).entries == {(0,): 1}
    assert oracle_ballot_desc(3).entries == {(0,): 1, (1,): 2}
    assert oracle_ballot_desc(4).total() == 9
    for n in range(8):
        assert oracle_ballot_desc(n).total() == ballot_total(n)


def test_odd_order_m():
    assert oracle_odd_order_M(1).entries == {(0,): 1}
    assert oracle_odd_order_M(3).entries == {(0,): 1, (1,): 2}
    t5 = oracle_odd_order_M(5)
    assert t5.total() == 45
    assert t5.entries == oracle_ballot_desc(5).entries


def test_e_table():
    assert oracle_E(3).entries == {(1, 2): 2}
    assert oracle_E(4)[(1, 2)] == 2
    for n in range(3, 7):
        t = oracle_E(n)
        for j in range(2, n):
            assert sum(t[(d, j)] for d in range(n)) == 2 * factorial(n - 2)


def test_e_table_splits_into_disjoint_orientations():
    from itertools import permutations

    from ballotperm.permstat import descents, has_factor_inj

    for n in (4, 5):
        t = oracle_E(n)
        for d in range(n):
            for j in range(2, n):
                fwd = bwd = 0
                for w in permutations(range(1, n + 1)):
                    if descents(w) == d:
                        both = has_factor_inj(w, 1, j) and has_factor_inj(w, j, 1)
                        assert not both
                        fwd += has_factor_inj(w, 1, j)
                        bwd += has_factor_inj(w, j, 1)
                assert t[(d, j)] == fwd + bwd


def test_b_factor():
    t = oracle_b_factor(3)
    assert t[(1, 1, 2)] == 1 and t[(1, 2, 1)] == 1
    assert all(i != j for (_, i, j) in t.entries)


def test_b_factor_vs_p_cyclic_bridge():
    bt, pt = oracle_b_factor(4), oracle_p_cyclic(4)
    for d in range(4):
        for j in range(2, 4):
            assert bt[(d, 1, j)] + bt[(d, j, 1)] == 2 * pt[(d, 1, j)]


def test_p_cyclic():
    assert oracle_p_cyclic(3).entries == {(1, 1, 2): 1, (1, 2, 1): 1}
    assert all(i != j for (_, i, j) in oracle_p_cyclic(5).entries)


def test_p_cyclic_toeplitz():
    for n in range(3, 7):
        t = oracle_p_cyclic(n)
        for d in range(n):
            for i in range(1, n - 1):
                for j in range(1, n - 1):
                    if i != j:
                        assert t[(d, i, j)] == t[(d, i + 1, j + 1)]


def test_l_table():
    assert oracle_l(1).entries == {(0,): 1}
    assert oracle_l(3).entries == {(1,): 2}
    assert oracle_l(5)[(1,)] == 2
    with pytest.raises(ValueError):
        oracle_l(4)


def test_preconditions():
    with pytest.raises(ValueError):
        oracle_eulerian_first(0)
    with pytest.raises(ValueError):
        oracle_E(2)
    with pytest.raises(ValueError):
        oracle_ballot_desc(oracle.ENUMERATION_CAP + 1)


def test_determinism():
    before = dict(oracle_ballot_desc(4).entries)
    oracle.clear_caches()
    assert oracle_ballot_desc(4).entries == before
