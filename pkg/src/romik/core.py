"""Exact computation of the Romik sequence d(n) and its auxiliary arrays.

Everything here is arbitrary-precision integer or exact rational arithmetic;
no value is ever rounded or truncated silently.  The objects computed:

    u(n), v(n)  auxiliary integer sequences defined by recurrences over
                squared products of the arithmetic progressions 3,7,11,...
                and 1,5,9,...,
    s(n, k)     the integer (2n)!/(2k)! [z^(2n)] f(z)^(2k), where f is the
                odd power series sum_j u(j)/(2j+1)! z^(2j+1),
    r(n, k)     2^(n-k) s(n, k),
    d(n)        d(0) = 1 and d(n) = v(n) - sum_{k=1}^{n-1} r(n, k) d(k).

The s-table is built through an integer-scaled representation of the series
(coefficients carried as m! * [z^m], so products become binomial
convolutions and never leave the integers).  The Fraction-based path in
``s_table_by_series`` computes the same table directly from
``RationalSeries`` powers and serves as the reference the scaled path is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


class IntegrityError(ArithmeticError):
    """An exactness invariant failed: a division left a remainder, a value
    that must be odd came out even, or a diagonal entry is not 1.  Any of
    these indicates a bug, never a property of the input."""


def odd_product_squared(n: int, offset: int) -> int:
    """Square of the product offset * (offset+4) * ... * (4n - (4-offset)).

    offset=3 gives (3*7*...*(4n-1))^2, offset=1 gives (1*5*...*(4n-3))^2.
    The empty product (n=0) is 1.
    """
    if offset not in (1, 3):
        raise ValueError(f"offset must be 1 or 3, got {offset}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prod = 1
    for i in range(1, n + 1):
        prod *= 4 * i - (4 - offset)
    return prod * prod


@dataclass
class RationalSeries:
    """Truncated power series with exact Fraction coefficients.

    ``coefficients[m]`` is the coefficient of z^m; the list always has
    exactly ``truncation_order + 1`` entries.  Addition and multiplication
    truncate at the smaller operand order, and comparison is exact.
    """

    coefficients: list[Fraction]
    truncation_order: int

    def __post_init__(self) -> None:
        if self.truncation_order < 0:
            raise ValueError("truncation_order must be >= 0")
        if len(self.coefficients) != self.truncation_order + 1:
            raise ValueError(
                f"expected {self.truncation_order + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )
        self.coefficients = [Fraction(c) for c in self.coefficients]

    def coefficient(self, m: int) -> Fraction:
        if not 0 <= m <= self.truncation_order:
            raise IndexError(f"power {m} outside truncation order {self.truncation_order}")
        return self.coefficients[m]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        order = min(self.truncation_order, other.truncation_order)
        coeffs = [
            self.coefficients[m] + other.coefficients[m] for m in range(order + 1)
        ]
        return RationalSeries(coeffs, order)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        order = min(self.truncation_order, other.truncation_order)
        a, b = self.coefficients, other.coefficients
        coeffs = []
        for m in range(order + 1):
            acc = Fraction(0)
            for i in range(m + 1):
                if a[i] and b[m - i]:
                    acc += a[i] * b[m - i]
            coeffs.append(acc)
        return RationalSeries(coeffs, order)


class SequenceCache:
    """Memoized exact values of u(n), v(n), d(n) and the triangular s-table.

    Sequences are append-only dense arrays seeded with u(0)=v(0)=d(0)=1.
    The s-table is built in bulk up to a bound: powers f^(2k) of the series
    are produced incrementally (f^(2k) = f^(2k-2) * f^2) and shared across
    k, so callers that need a range of values should call
    ``build_s_table(max_n)`` once up front.  Raising the bound later
    triggers a full rebuild at the new truncation order (requesting d(n) or
    s(n, k) one n at a time in ascending order does that rebuild per step,
    which is correct but quadratically slower than pre-sizing).

    After a build phase the cache is only read, so it is safe to share
    across threads that no longer mutate it.
    """

    def __init__(self) -> None:
        self._u: list[int] = [1]
        self._v: list[int] = [1]
        self._d: list[int] = [1]
        self._s_rows: list[list[int]] = []  # _s_rows[n-1][k-1] = s(n, k)

    # -- u, v ----------------------------------------------------------

    def u(self, n: int) -> int:
        """u(n) = (3*7*...*(4n-1))^2 - sum_{m<n} C(2n+1, 2m+1) (1*5*...*(4(n-m)-3))^2 u(m)."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        u = self._u
        while len(u) <= n:
            j = len(u)
            acc = 0
            for m in range(j):
                acc += comb(2 * j + 1, 2 * m + 1) * odd_product_squared(j - m, 1) * u[m]
            u.append(odd_product_squared(j, 3) - acc)
        return u[n]

    def v(self, n: int) -> int:
        """v(n) = 2^(n-1) (1*5*...*(4n-3))^2 - (1/2) sum_{0<m<n} C(2n, 2m) v(m) v(n-m).

        The halved sum is verified to be even before dividing.
        """
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        v = self._v
        while len(v) <= n:
            j = len(v)
            acc = 0
            for m in range(1, j):
                acc += comb(2 * j, 2 * m) * v[m] * v[j - m]
            if acc & 1:
                raise IntegrityError(f"intermediate sum for v({j}) is odd")
            v.append((1 << (j - 1)) * odd_product_squared(j, 1) - acc // 2)
        return v[n]

    # -- s, r ----------------------------------------------------------

    @property
    def s_bound(self) -> int:
        """Largest n for which the s-table currently holds row n."""
        return len(self._s_rows)

    def build_s_table(self, max_n: int) -> None:
        """Fill s(n, k) for all 1 <= k <= n <= max_n (no-op if already built)."""
        if max_n <= len(self._s_rows):
            return
        order = 2 * max_n
        self.u(max_n - 1)
        u = self._u

        # Scaled coefficients: egf[m] = m! * [z^m] f(z)^2.  f itself has
        # m! * [z^m] f = u((m-1)/2) for odd m, so the product collapses to
        # an integer binomial convolution.
        f2 = [0] * (order + 1)
        for m in range(2, order + 1, 2):
            acc = 0
            for i in range(1, m, 2):
                acc += comb(m, i) * u[(i - 1) // 2] * u[(m - i - 1) // 2]
            f2[m] = acc

        rows = [[0] * n for n in range(1, max_n + 1)]
        power = f2
        for k in range(1, max_n + 1):
            if k > 1:
                power = _scaled_mul_even(power, f2, order, 2 * k)
            fact_2k = factorial(2 * k)
            for n in range(k, max_n + 1):
                q, rem = divmod(power[2 * n], fact_2k)
                if rem:
                    raise IntegrityError(f"s({n},{k}) is not an integer")
                rows[n - 1][k - 1] = q
            if rows[k - 1][k - 1] != 1:
                raise IntegrityError(f"s({k},{k}) = {rows[k - 1][k - 1]}, expected 1")
        self._s_rows = rows

    def s(self, n: int, k: int) -> int:
        """Exact s(n, k) for 1 <= k <= n; grows the table to n if needed."""
        _check_pair(n, k)
        if n > len(self._s_rows):
            self.build_s_table(n)
        return self._s_rows[n - 1][k - 1]

    def r(self, n: int, k: int) -> int:
        """Exact r(n, k) = 2^(n-k) s(n, k)."""
        return self.s(n, k) << (n - k)

    def s_row(self, n: int) -> list[int]:
        """The row [s(n, 1), ..., s(n, n)] as a copy."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if n > len(self._s_rows):
            self.build_s_table(n)
        return list(self._s_rows[n - 1])

    # -- d ---------------------------------------------------------------

    def d(self, n: int) -> int:
        """d(n) = v(n) - sum_{k=1}^{n-1} r(n, k) d(k), with d(0) = 1.

        Every value appended to the cache is checked to be odd.
        """
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        d = self._d
        if n >= len(d):
            self.build_s_table(n)
            while len(d) <= n:
                j = len(d)
                row = self._s_rows[j - 1]
                acc = 0
                for k in range(1, j):
                    acc += (row[k - 1] << (j - k)) * d[k]
                val = self.v(j) - acc
                if val & 1 == 0:
                    raise IntegrityError(f"d({j}) = {val} is even")
                d.append(val)
        return d[n]

    # -- bulk views used by persistence and the verifier ------------------

    def known_values(self, name: str) -> list[int]:
        """Copy of all cached values of sequence 'u', 'v' or 'd'."""
        try:
            return list({"u": self._u, "v": self._v, "d": self._d}[name])
        except KeyError:
            raise ValueError(f"unknown sequence {name!r}") from None

    def known_s_rows(self) -> list[list[int]]:
        """Copy of the cached s-table rows (row n at index n-1)."""
        return [list(row) for row in self._s_rows]

    @classmethod
    def from_values(
        cls,
        u: list[int] | None = None,
        v: list[int] | None = None,
        d: list[int] | None = None,
        s_rows: list[list[int]] | None = None,
    ) -> "SequenceCache":
        """Rebuild a cache from previously stored values, re-checking the
        structural invariants (seeds equal 1, d odd, triangular shape,
        unit diagonal)."""
        cache = cls()
        for name, values in (("u", u), ("v", v), ("d", d)):
            if values is None:
                continue
            if not values or values[0] != 1:
                raise ValueError(f"sequence {name} must start with value 1")
            if name == "d" and any(x & 1 == 0 for x in values):
                raise ValueError("sequence d contains an even value")
        if u:
            cache._u = list(u)
        if v:
            cache._v = list(v)
        if d:
            cache._d = list(d)
        if s_rows:
            for i, row in enumerate(s_rows):
                if len(row) != i + 1:
                    raise ValueError(f"s-table row {i + 1} has {len(row)} entries")
                if row[i] != 1:
                    raise ValueError(f"s({i + 1},{i + 1}) = {row[i]}, expected 1")
            cache._s_rows = [list(row) for row in s_rows]
        return cache


def _check_pair(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def _scaled_mul_even(a: list[int], b: list[int], order: int, lo: int) -> list[int]:
    # Binomial convolution of scaled coefficients restricted to the even
    # grid; a is supported on even m >= lo-2, b on even m >= 2.
    out = [0] * (order + 1)
    for m in range(lo, order + 1, 2):
        acc = 0
        for i in range(lo - 2, m - 1, 2):
            bi = b[m - i]
            if bi:
                acc += comb(m, i) * a[i] * bi
        out[m] = acc
    return out


def theta_series(truncation_order: int, cache: SequenceCache) -> RationalSeries:
    """The series sum_j u(j)/(2j+1)! z^(2j+1), truncated after z^truncation_order.

    Even-power coefficients are zero; the coefficient of z^(2j+1) equals
    u(j)/(2j+1)! exactly.
    """
    if truncation_order < 1:
        raise ValueError(f"truncation_order must be >= 1, got {truncation_order}")
    coeffs = [Fraction(0)] * (truncation_order + 1)
    for m in range(1, truncation_order + 1, 2):
        j = (m - 1) // 2
        coeffs[m] = Fraction(cache.u(j), factorial(m))
    return RationalSeries(coeffs, truncation_order)


def s_table_by_series(max_n: int, cache: SequenceCache) -> list[list[int]]:
    """Triangular s-table computed through Fraction series arithmetic.

    This is the reference path: s(n, k) = (2n)!/(2k)! [z^(2n)] f^(2k) with
    all coefficients as exact rationals.  The integer-scaled path used by
    SequenceCache.build_s_table must reproduce it bit for bit.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    order = 2 * max_n
    f = theta_series(order, cache)
    f2 = f * f
    rows = [[0] * n for n in range(1, max_n + 1)]
    power = f2
    for k in range(1, max_n + 1):
        if k > 1:
            power = power * f2
        fact_2k = factorial(2 * k)
        for n in range(k, max_n + 1):
            value = power.coefficient(2 * n) * factorial(2 * n) / fact_2k
            if value.denominator != 1:
                raise IntegrityError(f"s({n},{k}) is not an integer: {value}")
            rows[n - 1][k - 1] = value.numerator
    return rows
