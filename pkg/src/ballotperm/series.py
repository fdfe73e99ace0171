"""Sparse truncated formal power series in t, x, y, z over exact rationals.

Terms are stored as {(e_t, e_x, e_y, e_z): Fraction}.  Truncation is by the
x-degree alone: every stored term has e_x <= order, and arithmetic on two
series re-truncates to the smaller order.  Zero coefficients are never
stored.  Series are immutable by convention: no operation mutates its
inputs, and callers must not touch `.terms` in place.

Inversion is restricted to the geometric sum 1/(1-g): divisions appearing in
closed forms must first be rewritten so that the denominator is 1 - g with g
free of x-constant terms (then g**k dies at k > order).  Negative exponents
are never stored; substitutions like t -> 1/t are realized as exponent
transforms (`t_reverse`, `mirror_y_with_z`).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

Monomial = tuple[int, int, int, int]


class MultiSeries:
    """A truncated series; build values with zero/one/monomial and arithmetic."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: dict[Monomial, Fraction] | None = None):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if mono[1] <= order and c:
                    clean[mono] = c if isinstance(c, Fraction) else Fraction(c)
        self.order = order
        self.terms = clean

    def coeff(self, e_t: int = 0, e_x: int = 0, e_y: int = 0, e_z: int = 0) -> Fraction:
        return self.terms.get((e_t, e_x, e_y, e_z), Fraction(0))

    def truncate(self, order: int) -> "MultiSeries":
        if order >= self.order:
            return self
        return MultiSeries(order, self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    __hash__ = None  # mutable dict inside

    def __neg__(self) -> "MultiSeries":
        return MultiSeries(self.order, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = {m: c for m, c in self.terms.items() if m[1] <= order}
        for m, c in other.terms.items():
            if m[1] > order:
                continue
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return MultiSeries(order, out)

    def __sub__(self, other) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "MultiSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiSeries(self.order)
            return MultiSeries(self.order, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MultiSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = sorted(self.terms.items(), key=lambda kv: kv[0][1])
        b = sorted(other.terms.items(), key=lambda kv: kv[0][1])
        out: dict[Monomial, Fraction] = {}
        for (t1, x1, y1, z1), c1 in a:
            if x1 > order:
                break
            rest = order - x1
            for (t2, x2, y2, z2), c2 in b:
                if x2 > rest:
                    break
                key = (t1 + t2, x1 + x2, y1 + y2, z1 + z2)
                prev = out.get(key)
                out[key] = c1 * c2 if prev is None else prev + c1 * c2
        return MultiSeries(order, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiSeries":
        if k < 0:
            raise ValueError("negative powers are not representable")
        out = one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self) -> str:
        head = ", ".join(f"{m}: {c}" for m, c in sorted(self.terms.items())[:4])
        more = "" if len(self.terms) <= 4 else f", ... ({len(self.terms)} terms)"
        return f"MultiSeries(order={self.order}, {{{head}{more}}})"


def zero(order: int) -> MultiSeries:
    return MultiSeries(order)


def one(order: int) -> MultiSeries:
    return MultiSeries(order, {(0, 0, 0, 0): Fraction(1)})


def monomial(order: int, coeff, e_t: int = 0, e_x: int = 0,
             e_y: int = 0, e_z: int = 0) -> MultiSeries:
    if min(e_t, e_x, e_y, e_z) < 0:
        raise ValueError("exponents must be nonnegative")
    return MultiSeries(order, {(e_t, e_x, e_y, e_z): Fraction(coeff)})


def _require_no_x_constant(s: MultiSeries, what: str) -> None:
    if any(m[1] == 0 for m in s.terms):
        raise ValueError(f"{what} needs an argument with no x-constant part")


def exp_tm1(w: MultiSeries) -> MultiSeries:
    """exp((t-1)*w) = sum_k (t-1)^k w^k / k!, with (t-1)^k expanded in t.

    w must have no x-constant part, so the sum is finite after truncation.
    """
    _require_no_x_constant(w, "exp((t-1)*w)")
    tm1 = monomial(w.order, 1, e_t=1) - one(w.order)
    out = one(w.order)
    term = one(w.order)
    for k in range(1, w.order + 1):
        term = term * w * tm1 * Fraction(1, k)
        if not term.terms:
            break
        out = out + term
    return out


def q_of(w: MultiSeries) -> MultiSeries:
    """q(w) = sum_{k>=1} (t-1)^(k-1) w^k / k!, so (t-1)*q(w) + 1 = exp((t-1)*w).

    This is the unit-free factor in t - exp((t-1)*w) = (t-1)*(1 - q(w)): it
    lets 1/(t - exp((t-1)*w)) be evaluated as geom(q(w)) / (t-1) without ever
    inverting t-1.
    """
    _require_no_x_constant(w, "q")
    tm1 = monomial(w.order, 1, e_t=1) - one(w.order)
    out = w
    term = w
    for k in range(2, w.order + 1):
        term = term * w * tm1 * Fraction(1, k)
        if not term.terms:
            break
        out = out + term
    return out


def geom(g: MultiSeries, max_power: int | None = None) -> MultiSeries:
    """Geometric sum 1/(1-g) = sum_k g^k.

    Without max_power, g must have no x-constant part (powers then die at the
    truncation order).  With max_power, the sum is cut at g**max_power, which
    callers use for arguments like y*z that no x-truncation can kill.
    """
    if max_power is None:
        if any(m[1] == 0 for m in g.terms):
            raise ValueError("geometric inversion needs a series with no x-constant part")
        max_power = g.order
    out = one(g.order)
    term = one(g.order)
    for _ in range(max_power):
        term = term * g
        if not term.terms:
            break
        out = out + term
    return out


def exp_series(s: MultiSeries) -> MultiSeries:
    """exp(s) = sum_k s^k / k! for s with no x-constant part."""
    _require_no_x_constant(s, "exp")
    out = one(s.order)
    term = one(s.order)
    for k in range(1, s.order + 1):
        term = term * s * Fraction(1, k)
        if not term.terms:
            break
        out = out + term
    return out


def subst_x_times(s: MultiSeries, u: MultiSeries) -> MultiSeries:
    """Substitute x -> x*u for a polynomial u in y and z only.

    A term c * t^a x^n y^b z^c becomes c * t^a x^n u^n y^b z^c; the x-degree
    is unchanged, so truncation commutes with the substitution.
    """
    if any(m[0] or m[1] for m in u.terms):
        raise ValueError("substitution factor must be a polynomial in y and z only")
    powers = [one(s.order)]
    out: dict[Monomial, Fraction] = {}
    for (a, n, b, c), coef in sorted(s.terms.items(), key=lambda kv: kv[0][1]):
        while len(powers) <= n:
            powers.append(powers[-1] * u)
        for (_, _, ub, uc), uval in powers[n].terms.items():
            key = (a, n, b + ub, c + uc)
            prev = out.get(key)
            out[key] = coef * uval if prev is None else prev + coef * uval
    return MultiSeries(s.order, out)


def map_exponents(s: MultiSeries, fn: Callable[[Monomial], Monomial]) -> MultiSeries:
    """Rebuild s with every monomial remapped by fn; coefficients accumulate."""
    out: dict[Monomial, Fraction] = {}
    for mono, c in s.terms.items():
        new = fn(mono)
        if min(new) < 0:
            raise ValueError(f"exponent transform produced a negative exponent: {mono} -> {new}")
        prev = out.get(new)
        out[new] = c if prev is None else prev + c
    return MultiSeries(s.order, out)


def select(s: MultiSeries, pred: Callable[[Monomial], bool]) -> MultiSeries:
    """Keep only the monomials satisfying pred."""
    return MultiSeries(s.order, {m: c for m, c in s.terms.items() if pred(m)})


def t_reverse(s: MultiSeries) -> MultiSeries:
    """Coefficient transform t^d x^n -> t^(n-d) x^n (realizes t -> 1/t, x -> t*x).

    Every stored term must have e_t <= e_x.
    """
    out: dict[Monomial, Fraction] = {}
    for (d, n, b, c), coef in s.terms.items():
        if d > n:
            raise ValueError(f"t-reversal of t^{d} x^{n} would need a negative exponent")
        out[(n - d, n, b, c)] = coef
    return MultiSeries(s.order, out)


def negate_x(s: MultiSeries) -> MultiSeries:
    """Substitute x -> -x: the e_x = n slice is scaled by (-1)^n."""
    return MultiSeries(s.order, {m: (c if m[1] % 2 == 0 else -c) for m, c in s.terms.items()})


def project_half(s: MultiSeries) -> MultiSeries:
    """Keep exactly the terms with 2*e_t <= e_x - 1 (the low-descent half)."""
    return select(s, lambda m: 2 * m[0] <= m[1] - 1)


def mirror_y_with_z(s: MultiSeries) -> MultiSeries:
    """Coefficient transform t^d x^n y^j z^m -> t^d x^n y^(n-j) z^(m+n).

    This realizes the substitution x -> x*y*z, y -> 1/y without negative
    exponents; it needs e_y <= e_x on every stored term.
    """
    out: dict[Monomial, Fraction] = {}
    for (d, n, j, m), coef in s.terms.items():
        if j > n:
            raise ValueError(f"mirror of y^{j} with x^{n} would need a negative exponent")
        out[(d, n, n - j, m + n)] = coef
    return MultiSeries(s.order, out)


def y_to_z(s: MultiSeries) -> MultiSeries:
    """Rename the variable y to z; the input must be z-free."""
    out: dict[Monomial, Fraction] = {}
    for (d, n, j, m), coef in s.terms.items():
        if m:
            raise ValueError("y -> z rename needs a z-free series")
        out[(d, n, 0, j)] = coef
    return MultiSeries(s.order, out)


def d_dx(s: MultiSeries) -> MultiSeries:
    """Formal partial derivative in x; the truncation order drops by one."""
    out = {(d, n - 1, b, c): coef * n for (d, n, b, c), coef in s.terms.items() if n}
    return MultiSeries(max(s.order - 1, 0), out)


def d_dy(s: MultiSeries) -> MultiSeries:
    """Formal partial derivative in y."""
    out = {(d, n, b - 1, c): coef * b for (d, n, b, c), coef in s.terms.items() if b}
    return MultiSeries(s.order, out)


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} is not an integer ({value}); series data is corrupt")
    return value.numerator


def extract_egf(s: MultiSeries, n: int, d: int) -> int:
    """Count at t^d x^n under the exponential weight n!."""
    if n > s.order:
        raise ValueError(f"n = {n} is beyond the truncation order {s.order}")
    return _as_count(s.coeff(d, n) * factorial(n), f"count at (n={n}, d={d})")


def extract_first(s: MultiSeries, n: int, d: int, j: int) -> int:
    """Count at t^d x^n y^j under the first-letter weight (j-1)! (n-j)!."""
    if n > s.order:
        raise ValueError(f"n = {n} is beyond the truncation order {s.order}")
    if not 1 <= j <= n:
        raise ValueError(f"first-letter weight needs 1 <= j <= n, got j={j}, n={n}")
    v = s.coeff(d, n, j) * (factorial(j - 1) * factorial(n - j))
    return _as_count(v, f"count at (n={n}, d={d}, j={j})")


def extract_factor(s: MultiSeries, n: int, d: int, j: int) -> int:
    """Count at t^d x^n y^j under the factor weight (j-2)! (n-j-1)!."""
    if n > s.order:
        raise ValueError(f"n = {n} is beyond the truncation order {s.order}")
    if not 2 <= j <= n - 1:
        raise ValueError(f"factor weight needs 2 <= j <= n-1, got j={j}, n={n}")
    v = s.coeff(d, n, j) * (factorial(j - 2) * factorial(n - j - 1))
    return _as_count(v, f"count at (n={n}, d={d}, j={j})")


def extract_quad(s: MultiSeries, n: int, d: int, i: int, j: int) -> int:
    """Count at t^d x^n y^i z^j under the pair weight (j-i-1)! (n-j+i-2)!."""
    if n > s.order:
        raise ValueError(f"n = {n} is beyond the truncation order {s.order}")
    if not 1 <= i < j <= n - 1:
        raise ValueError(f"pair weight needs 1 <= i < j <= n-1, got i={i}, j={j}, n={n}")
    v = s.coeff(d, n, i, j) * (factorial(j - i - 1) * factorial(n - j + i - 2))
    return _as_count(v, f"count at (n={n}, d={d}, i={i}, j={j})")


def first_difference(a: MultiSeries, b: MultiSeries):
    """Lexicographically smallest monomial where a and b differ, up to the
    common truncation order; None when they agree."""
    order = min(a.order, b.order)
    keys = {m for m in a.terms if m[1] <= order} | {m for m in b.terms if m[1] <= order}
    for m in sorted(keys):
        ca = a.terms.get(m, Fraction(0))
        cb = b.terms.get(m, Fraction(0))
        if ca != cb:
            return m, ca, cb
    return None


def dump(s: MultiSeries) -> str:
    """One line per monomial, 't^a x^b y^c z^d : num/den', ascending lexicographically."""
    return "\n".join(f"t^{a} x^{b} y^{c} z^{d} : {c0.numerator}/{c0.denominator}"
                     for (a, b, c, d), c0 in sorted(s.terms.items()))
