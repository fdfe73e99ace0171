"""Recursions, partition sums, and the closed-form generating series catalog.

Every counting sequence here is computable along at least two independent
routes: the memoized recursions and partition sums in this module, exhaustive
enumeration (`oracle`), and coefficient extraction from the closed forms
assembled by `build_catalog`.  The verification suite (`verify`) holds the
routes against each other with exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import series
from .oracle import CountTable
from .series import MultiSeries


@lru_cache(maxsize=None)
def eulerian_first(n: int, d: int, j: int) -> int:
    """Permutations of length n with d descents and first letter j.

    Out-of-range indices count zero permutations, which is exactly what the
    recursion over the second letter needs at its boundary.
    """
    if n < 1 or not 0 <= d <= n - 1 or not 1 <= j <= n:
        return 0
    if n == 1:
        return 1
    return (sum(eulerian_first(n - 1, d - 1, i) for i in range(1, j))
            + sum(eulerian_first(n - 1, d, i) for i in range(j, n)))


@lru_cache(maxsize=None)
def eulerian(n: int, d: int) -> int:
    """Eulerian number: permutations of length n with d descents; eulerian(0, 0) = 1."""
    if n == 0:
        return 1 if d == 0 else 0
    if n < 0 or d < 0 or d >= n:
        return 0
    return sum(eulerian_first(n, d, j) for j in range(1, n + 1))


def eulerian_explicit(n: int, d: int) -> int:
    """Eulerian number by the classical alternating binomial sum.

    Independent of both the first-letter recursion and brute force; used to
    cross-check external sequence data.
    """
    if n == 0:
        return 1 if d == 0 else 0
    if n < 0 or d < 0 or d >= n:
        return 0
    return sum((-1) ** k * comb(n + 1, k) * (d + 1 - k) ** n for k in range(d + 1))


def u_count(n: int, d: int, j: int) -> int:
    """Permutations of length n with first letter j and d-1 descents or n-d-1 ascents.

    Symmetric under d <-> n-d.
    """
    return eulerian_first(n, n - d - 1, j) + eulerian_first(n, d - 1, j)


def _choose(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def e_count_rec(n: int, d: int, j: int) -> int:
    """Permutations of length n with d descents having 1nj or jn1 as a factor.

    Splits the word at the factor: the length-l piece containing j, reversed
    and standardized, becomes a symmetrized first-letter count over a chosen
    letter set, while the other piece is a plain descent count.  The two
    trailing terms handle the word starting with 1nj and cancel the boundary
    double count.
    """
    total = 0
    for l in range(1, n - 1):
        # k spans 0..l inclusive: the u_count term A(l, k-1, u+1) is live up
        # to k = l (the j-piece may be strictly decreasing)
        for k in range(l + 1):
            rest = eulerian(n - l - 2, d - k - 1)
            if rest == 0:
                continue
            for u in range(j - 1):
                w = _choose(j - 2, u) * _choose(n - j - 1, l - 1 - u)
                if w:
                    total += w * rest * u_count(l, k, u + 1)
    total += eulerian_first(n - 2, d - 1, j - 1) - eulerian_first(n - 2, d - 2, j - 1)
    return total


def l_count(n: int, d: int) -> int:
    """Full n-cycles on [n] whose M statistic is d; n must be odd.

    For n > 1 this is twice an Eulerian number: dropping the largest letter
    from the cycle word leaves a permutation with d-1 or n-d-1 descents, and
    the two cases are disjoint for odd n.
    """
    if n % 2 == 0:
        raise ValueError(f"cycle length must be odd, got {n}")
    if n < 1 or d < 0 or 2 * d > n - 1:
        return 0
    if n == 1:
        return 1
    return 2 * eulerian(n - 1, d - 1)


def double_factorial(n: int) -> int:
    """n!! = n (n-2) (n-4) ..., with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial needs n >= -1, got {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def ballot_total(n: int) -> int:
    """Closed product for the number of ballot permutations of length n."""
    if n % 2 == 0:
        return double_factorial(n - 1) ** 2
    return double_factorial(n) * double_factorial(n - 2)


def _ballot_log_series(order: int) -> MultiSeries:
    # sum over odd n of l(n, d) t^d x^n / n!
    terms: dict[tuple[int, int, int, int], Fraction] = {}
    for n in range(1, order + 1, 2):
        for d in range((n - 1) // 2 + 1):
            c = l_count(n, d)
            if c:
                terms[(d, n, 0, 0)] = Fraction(c, factorial(n))
    return MultiSeries(order, terms)


def ballot_series(order: int) -> MultiSeries:
    """EGF of ballot permutations refined by descents: exp of the odd-cycle series."""
    return series.exp_series(_ballot_log_series(order))


def ballot_desc_table(max_n: int) -> CountTable:
    """(n, d) -> ballot permutations of length n with d descents, n <= max_n,
    computed through the exponential closed form."""
    b = ballot_series(max_n)
    entries: dict[tuple[int, ...], int] = {}
    for n in range(max_n + 1):
        for d in range(max(1, (n - 1) // 2 + 1)):
            v = series.extract_egf(b, n, d)
            if v:
                entries[(n, d)] = v
    return CountTable("b", max_n, entries)


@lru_cache(maxsize=None)
def _odd_cycle_arrangements(m: int, total_m: int) -> int:
    """Ways to arrange a labeled m-set into disjoint odd cycles with M summing
    to total_m, by summing over multisets of (length, M) cycle types."""
    if m < 0 or total_m < 0:
        return 0
    pairs = [(nu, de, l_count(nu, de))
             for nu in range(m if m % 2 else m - 1, 0, -2)
             for de in range((nu - 1) // 2, -1, -1) if l_count(nu, de)]

    def over_types(idx: int, m_left: int, d_left: int) -> Fraction:
        if m_left == 0:
            return Fraction(1) if d_left == 0 else Fraction(0)
        if idx == len(pairs):
            return Fraction(0)
        nu, de, lv = pairs[idx]
        acc = over_types(idx + 1, m_left, d_left)   # multiplicity 0
        lam = 1
        while lam * nu <= m_left and lam * de <= d_left:
            weight = Fraction(lv ** lam, factorial(nu) ** lam * factorial(lam))
            acc += weight * over_types(idx + 1, m_left - lam * nu, d_left - lam * de)
            lam += 1
        return acc

    value = factorial(m) * over_types(0, m, total_m)
    if value.denominator != 1:
        raise ValueError(f"cycle-type sum for ({m}, {total_m}) is not an integer: {value}")
    return value.numerator


def p_count_partition(n: int, d: int, j: int) -> int:
    """Odd order permutations of [n] with M = d and cyclic factor 1nj, by the
    partition sum over the cycle through n and the cycle type of the rest.

    The cycle through the letters 1, n, j has odd length m1 + m2 + 3, where m1
    of its other letters lie below j and m2 above; its arrangements are a
    symmetrized first-letter count, and the remaining letters form odd cycles
    in every way that spends the leftover M.
    """
    total = 0
    for m1 in range(j - 1):
        for m2 in range(n - j):
            if (m1 + m2) % 2:
                continue
            rest = n - 3 - m1 - m2
            if rest < 0:
                continue
            w = comb(j - 2, m1) * comb(n - j - 1, m2)
            if w == 0:
                continue
            for d0 in range((m1 + m2 + 2) // 2 + 1):
                if d0 > d:
                    break
                uval = u_count(m1 + m2 + 1, d0 - 1, m1 + 1)
                if uval == 0:
                    continue
                total += w * uval * _odd_cycle_arrangements(rest, d - d0)
    return total


@dataclass(frozen=True)
class SeriesCatalog:
    """Every closed-form generating series, built once per truncation order.

    The note in parentheses names the extraction that recovers the counts.

    eulerian_egf      sum over n >= 0 of the descent polynomials times x^n/n!
                      (extract_egf)
    eulerian_gf       the same without the constant term          (extract_egf)
    first_letter_gf   Eulerian counts refined by first letter     (extract_first)
    first_sym_gf      symmetrized first-letter count: d-1 descents or n-d-1
                      ascents                                     (extract_first)
    first_sym_odd_gf  its odd-length, low-descent (2d <= n-1) part
    factor_gf         permutations with 1nj or jn1 as a factor    (extract_factor)
    ballot_gf         ballot permutations by descents             (extract_egf)
    cyclic_factor_gf  odd order permutations with cyclic factor 1nj
                      (extract_factor)
    ballot_factor_gf  ballot permutations with factor 1nj or jn1; twice the
                      previous entry
    pair_factor_gf    odd order with cyclic factor inj, neighbors tracked as
                      y^i z^j                                     (extract_quad)
    """

    order: int
    eulerian_egf: MultiSeries
    eulerian_gf: MultiSeries
    first_letter_gf: MultiSeries
    first_sym_gf: MultiSeries
    first_sym_odd_gf: MultiSeries
    factor_gf: MultiSeries
    ballot_gf: MultiSeries
    cyclic_factor_gf: MultiSeries
    ballot_factor_gf: MultiSeries
    pair_factor_gf: MultiSeries


CATALOG_SERIES = tuple(f.name for f in fields(SeriesCatalog) if f.name != "order")

_CATALOG_CACHE: dict[int, SeriesCatalog] = {}


def build_catalog(order: int, fresh: bool = False) -> SeriesCatalog:
    """Build the full closed-form catalog at the given x-truncation order.

    Catalogs are cached per order and must be treated as immutable;
    fresh=True bypasses the cache (the determinism tests rebuild and compare).
    """
    if not fresh and order in _CATALOG_CACHE:
        return _CATALOG_CACHE[order]
    cat = _build_catalog(order)
    if not fresh:
        _CATALOG_CACHE[order] = cat
    return cat


def _build_catalog(order: int) -> SeriesCatalog:
    one = series.one(order)
    t = series.monomial(order, 1, e_t=1)
    x = series.monomial(order, 1, e_x=1)
    y = series.monomial(order, 1, e_y=1)
    xy = series.monomial(order, 1, e_x=1, e_y=1)
    one_plus_y = one + y

    eul_egf = series.geom(series.q_of(x))
    eul = eul_egf - one
    first = xy * series.exp_tm1(xy) * series.geom(series.q_of(x + xy))

    # symmetrized count: t * first realizes the d-1 half, and the coefficient
    # transform t^d -> t^(n-d-1) realizes the (1/t)-reversed half exactly
    first_sym = t * first + series.map_exponents(
        first, lambda m: (m[1] - m[0] - 1, m[1], m[2], m[3]))
    odd_part = (first_sym - series.negate_x(first_sym)) * Fraction(1, 2)
    first_sym_odd = series.project_half(odd_part)

    eul_sub = series.subst_x_times(eul, one_plus_y)
    factor = (t * x * x * y * (eul_sub + one) * first_sym
              + t * (one - t) * x * x * y * first)

    ballot = ballot_series(order)
    cyclic_factor = t * x * x * y * series.subst_x_times(ballot, one_plus_y) * first_sym_odd
    ballot_factor = 2 * cyclic_factor

    # pair series: (2y / (1 - yz)) * (P(t,x,z) - P(t,xyz,1/y)).  The geometric
    # factor is summed past the truncation order, so every surviving spurious
    # term has e_y > order >= e_x and the support filter removes exactly those.
    yz = series.monomial(order, 1, e_y=1, e_z=1)
    diff = series.y_to_z(cyclic_factor) - series.mirror_y_with_z(cyclic_factor)
    pair = 2 * y * series.geom(yz, max_power=order + 1) * diff
    pair = series.select(pair, lambda m: m[2] <= m[1])

    return SeriesCatalog(
        order=order,
        eulerian_egf=eul_egf,
        eulerian_gf=eul,
        first_letter_gf=first,
        first_sym_gf=first_sym,
        first_sym_odd_gf=first_sym_odd,
        factor_gf=factor,
        ballot_gf=ballot,
        cyclic_factor_gf=cyclic_factor,
        ballot_factor_gf=ballot_factor,
        pair_factor_gf=pair,
    )


def clear_caches() -> None:
    """Drop all memo tables and cached catalogs."""
    eulerian_first.cache_clear()
    eulerian.cache_clear()
    _odd_cycle_arrangements.cache_clear()
    _CATALOG_CACHE.clear()
