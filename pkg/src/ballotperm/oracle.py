"""Ground-truth counts by exhaustive enumeration of S_n and its subsets.

Enumeration order is lexicographic.  Every table is deterministic and, once
built, must be treated as immutable (results are cached).  By default n is
capped at 10 (10! words is the limit of desk-scale enumeration); pass
force=True to go beyond.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .permstat import (cycle_decompose, cyclic_ascents, cyclic_descents,
                       descents, is_ballot, is_odd_order, m_statistic)

ENUMERATION_CAP = 10


@dataclass(frozen=True)
class CountTable:
    """Sparse nonnegative counts keyed by index tuples; a missing key means 0."""

    stat: str
    n: int
    entries: dict[tuple[int, ...], int]

    def __getitem__(self, key) -> int:
        if not isinstance(key, tuple):
            key = (key,)
        return self.entries.get(key, 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.entries.items())


def _check_n(n: int, minimum: int, force: bool) -> None:
    if n < minimum:
        raise ValueError(f"need n >= {minimum}, got {n}")
    if n > ENUMERATION_CAP and not force:
        raise ValueError(f"n = {n} exceeds the enumeration cap {ENUMERATION_CAP}; "
                         f"pass force=True to override")


def _words(n: int):
    return permutations(range(1, n + 1))


def oracle_eulerian_first(n: int, force: bool = False) -> CountTable:
    """(d, j) -> permutations of length n with d descents and first letter j."""
    _check_n(n, 1, force)
    return _eulerian_first(n)


@lru_cache(maxsize=None)
def _eulerian_first(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        key = (descents(w), w[0])
        entries[key] = entries.get(key, 0) + 1
    return CountTable("A_first", n, entries)


def oracle_ballot_desc(n: int, force: bool = False) -> CountTable:
    """(d,) -> ballot permutations of length n with d descents."""
    _check_n(n, 0, force)
    return _ballot_desc(n)


@lru_cache(maxsize=None)
def _ballot_desc(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        if is_ballot(w):
            key = (descents(w),)
            entries[key] = entries.get(key, 0) + 1
    return CountTable("b", n, entries)


def oracle_odd_order_M(n: int, force: bool = False) -> CountTable:
    """(d,) -> odd order permutations of length n whose M statistic is d."""
    _check_n(n, 1, force)
    return _odd_order_m(n)


@lru_cache(maxsize=None)
def _odd_order_m(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        cycles = cycle_decompose(w)
        if all(len(c) % 2 for c in cycles):
            m = sum(min(cyclic_descents(c), cyclic_ascents(c)) for c in cycles)
            entries[(m,)] = entries.get((m,), 0) + 1
    return CountTable("M", n, entries)


def oracle_E(n: int, force: bool = False) -> CountTable:
    """(d, j) -> permutations of length n with d descents having 1nj or jn1 as a factor."""
    _check_n(n, 3, force)
    return _e_table(n)


@lru_cache(maxsize=None)
def _e_table(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        k = w.index(n)
        if 0 < k < n - 1:
            a, b = w[k - 1], w[k + 1]
            if a == 1:
                key = (descents(w), b)
            elif b == 1:
                key = (descents(w), a)
            else:
                continue
            entries[key] = entries.get(key, 0) + 1
    return CountTable("E", n, entries)


def oracle_b_factor(n: int, force: bool = False) -> CountTable:
    """(d, i, j) -> ballot permutations of length n with d descents and factor inj."""
    _check_n(n, 3, force)
    return _b_factor(n)


@lru_cache(maxsize=None)
def _b_factor(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        k = w.index(n)
        if 0 < k < n - 1 and is_ballot(w):
            key = (descents(w), w[k - 1], w[k + 1])
            entries[key] = entries.get(key, 0) + 1
    return CountTable("b_factor", n, entries)


def oracle_p_cyclic(n: int, force: bool = False) -> CountTable:
    """(d, i, j) -> odd order permutations with M = d and cyclic factor inj."""
    _check_n(n, 3, force)
    return _p_cyclic(n)


@lru_cache(maxsize=None)
def _p_cyclic(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        if not is_odd_order(w):
            continue
        j = w[n - 1]            # successor of n in its cycle
        i = w.index(n) + 1      # predecessor of n
        if i == n or i == j:    # the cycle through n is shorter than 3
            continue
        key = (m_statistic(w), i, j)
        entries[key] = entries.get(key, 0) + 1
    return CountTable("p", n, entries)


def oracle_l(n: int, force: bool = False) -> CountTable:
    """(d,) -> full n-cycles on [n] with M statistic d; n must be odd."""
    if n % 2 == 0:
        raise ValueError(f"cycle statistic tables need odd n, got {n}")
    _check_n(n, 1, force)
    return _l_table(n)


@lru_cache(maxsize=None)
def _l_table(n: int) -> CountTable:
    entries: dict[tuple[int, ...], int] = {}
    for w in _words(n):
        cycles = cycle_decompose(w)
        if len(cycles) == 1 and len(cycles[0]) == n:
            c = cycles[0]
            key = (min(cyclic_descents(c), cyclic_ascents(c)),)
            entries[key] = entries.get(key, 0) + 1
    return CountTable("l", n, entries)


def clear_caches() -> None:
    """Drop all cached enumeration tables (used by determinism tests)."""
    for fn in (_eulerian_first, _ballot_desc, _odd_order_m, _e_table,
               _b_factor, _p_cyclic, _l_table):
        fn.cache_clear()
