"""Modular and p-adic machinery: digit sums, factorial valuations, the
closed-form residues of r(n, k) mod 5, five-cycle counts in symmetric
groups, and triangular residue grids.

Negative inputs to reductions use mathematical mod, so residues always land
in [0, p-1].  Closed-form quotients are evaluated as exact big integers
(divide, assert exactness) rather than through modular inverses: the
integrality of each quotient is itself part of what gets witnessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import factorial, isqrt

from .core import IntegrityError, SequenceCache


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (inputs here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


def _require_prime(p: int, odd: bool = False) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if odd and p == 2:
        raise ValueError("p must be an odd prime")


def digit_sum(n: int, p: int) -> int:
    """Sum of the digits of n in base p."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    total = 0
    while n:
        n, digit = divmod(n, p)
        total += digit
    return total


def factorial_valuation(n: int, p: int) -> int:
    """p-adic valuation of n! by the digit-sum formula (n - s_p(n))/(p - 1)."""
    _require_prime(p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    q, rem = divmod(n - digit_sum(n, p), p - 1)
    if rem:
        raise IntegrityError(f"(n - s_p(n)) not divisible by p-1 for n={n}, p={p}")
    return q


def factorial_valuation_by_floor_sum(n: int, p: int) -> int:
    """p-adic valuation of n! as sum_{i>=1} floor(n / p^i).

    Independent of the digit-sum route; kept as its oracle.
    """
    _require_prime(p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = 0
    power = p
    while power <= n:
        total += n // power
        power *= p
    return total


def single_index_term_valuation(n: int, k: int, c: int, p: int = 5) -> int:
    """p-adic valuation of (2n)! / ((3k-n+c)! (n-k-2c)! c! p^c).

    Defined for 0 < k <= n <= 5k and max(0, n-3k) <= c <= floor((n-k)/2);
    the valuation of the rational is taken as valuation(numerator) minus
    valuation(denominator), and the (-1)^c sign carried by the summand
    never affects it.
    """
    _require_prime(p, odd=True)
    if not (0 < k <= n <= 5 * k):
        raise ValueError(f"need 0 < k <= n <= 5k, got n={n}, k={k}")
    if not max(0, n - 3 * k) <= c <= (n - k) // 2:
        raise ValueError(f"index c={c} outside [max(0, n-3k), floor((n-k)/2)]")
    return (
        factorial_valuation(2 * n, p)
        - factorial_valuation(3 * k - n + c, p)
        - factorial_valuation(n - k - 2 * c, p)
        - factorial_valuation(c, p)
        - c
    )


def _exact_quotient(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise IntegrityError(f"{what} is not an integer")
    return q


def r_mod5_closed_form(n: int, k: int) -> int:
    """Residue of r(n, k) mod 5 straight from the closed form.

    Zero when n > 5k; otherwise (2n)! / (((5k-n)/2)! ((n-k)/2)! 5^((n-k)/2))
    when n-k is even, and twice the analogous quotient with (n-k-1)/2 in
    place of (n-k)/2 (and (5k-n-1)/2 up top) when n-k is odd.  Each quotient
    is an exact integer and is evaluated as one.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n > 5 * k:
        return 0
    if (n - k) % 2 == 0:
        a, b = (5 * k - n) // 2, (n - k) // 2
        lead = 1
    else:
        a, b = (5 * k - n - 1) // 2, (n - k - 1) // 2
        lead = 2
    q = _exact_quotient(
        factorial(2 * n), factorial(a) * factorial(b) * 5**b, f"r({n},{k}) quotient"
    )
    return lead * q % 5


def s_mod5_single_index(n: int, k: int) -> int:
    """Residue of s(n, k) mod 5 via the single-index sum
    sum_c (-1)^c (2n)! / ((3k-n+c)! (n-k-2c)! c! 5^c), c running from
    max(0, n-3k) to floor((n-k)/2); zero when n > 5k.

    Every summand is an exact integer and is reduced individually.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n > 5 * k:
        return 0
    num = factorial(2 * n)
    total = 0
    for c in range(max(0, n - 3 * k), (n - k) // 2 + 1):
        den = factorial(3 * k - n + c) * factorial(n - k - 2 * c) * factorial(c) * 5**c
        term = _exact_quotient(num, den, f"s({n},{k}) summand c={c}") % 5
        if c & 1:
            term = -term
        total = (total + term) % 5
    return total


def binomial_vanishes(a: int, b: int, p: int) -> bool:
    """True iff p divides C(a, b), decided through factorial valuations."""
    _require_prime(p)
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    return (
        factorial_valuation(a, p)
        - factorial_valuation(b, p)
        - factorial_valuation(a - b, p)
    ) > 0


def five_cycle_class_size(n: int, k: int) -> int:
    """Number of permutations of n letters made of k disjoint five-cycles
    and n - 5k fixed points: n! / ((n-5k)! k! 5^k)."""
    if k < 0 or 5 * k > n:
        raise ValueError(f"need 0 <= 5k <= n, got n={n}, k={k}")
    return _exact_quotient(
        factorial(n),
        factorial(n - 5 * k) * factorial(k) * 5**k,
        f"class size ({n},{k})",
    )


def count_fifth_roots(n: int) -> int:
    """Number of permutations x of n letters with x^5 = identity."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(five_cycle_class_size(n, k) for k in range(n // 5 + 1))


def digit_sum_facts_hold(r: int, s: int, p: int) -> bool:
    """Check the base-p digit-sum facts for the pair (r, s):

    subadditivity s_p(r+s) <= s_p(r) + s_p(s), with equality exactly when
    no column of the base-p addition carries; the mixed-digit bound
    s_p(r) + s_p(s) >= s_p(s_p(r) + p*s_p(s)); and s_p(mp) = s_p(m) with
    s_p(m) = m exactly for single-digit m, for m in {r, s}.

    Property-test driver, not new mathematics.
    """
    if r < 1 or s < 1:
        raise ValueError(f"r and s must be >= 1, got {r}, {s}")
    _require_prime(p)
    sr, ss = digit_sum(r, p), digit_sum(s, p)
    if digit_sum(r + s, p) > sr + ss:
        return False
    no_carries = all(
        dr + ds <= p - 1
        for dr, ds in zip_longest(_digits(r, p), _digits(s, p), fillvalue=0)
    )
    if (digit_sum(r + s, p) == sr + ss) != no_carries:
        return False
    if sr + ss < digit_sum(sr + p * ss, p):
        return False
    for m in (r, s):
        if digit_sum(m * p, p) != digit_sum(m, p):
            return False
        if (digit_sum(m, p) == m) != (m <= p - 1):
            return False
    return True


def _digits(n: int, p: int) -> list[int]:
    out = []
    while n:
        n, digit = divmod(n, p)
        out.append(digit)
    return out


@dataclass(frozen=True)
class VanishingThresholds:
    """The two index thresholds attached to a prime p = 3 (mod 4):
    n0 = (p^2 - 1)/2, past which d(n) and the low-k part of the r-table
    vanish mod p, and the smaller n1 = 3(p+1)/4 used when truncating the
    u-recurrence."""

    prime: int
    n0: int
    n1: int

    @classmethod
    def for_prime(cls, p: int) -> "VanishingThresholds":
        _require_prime(p)
        if p % 4 != 3:
            raise ValueError(f"p must be 3 mod 4, got {p}")
        return cls(prime=p, n0=(p * p - 1) // 2, n1=3 * (p + 1) // 4)

    def __post_init__(self) -> None:
        if self.n1 >= self.n0:
            raise ValueError(f"expected n1 < n0, got n1={self.n1}, n0={self.n0}")


@dataclass(frozen=True)
class ResidueGrid:
    """Triangular grid of r(n, k) mod p for 1 <= k <= n <= max_n.

    ``rows[n-1][k-1]`` is the residue of r(n, k).  The PGM export writes the
    residue as the gray level with maxval p-1 and fills the unused k > n
    region with maxval as background.
    """

    modulus: int
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, n: int, k: int) -> int:
        if not 1 <= k <= n <= self.max_n:
            raise ValueError(f"need 1 <= k <= n <= {self.max_n}, got n={n}, k={k}")
        return self.rows[n - 1][k - 1]

    def csv_lines(self) -> list[str]:
        """Rows 'n,k,residue' preceded by that header, in (n, k) order."""
        lines = ["n,k,residue"]
        for n in range(1, self.max_n + 1):
            row = self.rows[n - 1]
            lines.extend(f"{n},{k},{row[k - 1]}" for k in range(1, n + 1))
        return lines

    def pgm_lines(self) -> list[str]:
        """Plain (P2) PGM: width = height = max_n, maxval = p - 1.

        Pixel (row n, column k) carries the residue; cells with k > n are
        written as maxval.
        """
        background = self.modulus - 1
        lines = ["P2", f"{self.max_n} {self.max_n}", f"{background}"]
        for n in range(1, self.max_n + 1):
            row = self.rows[n - 1]
            pixels = list(row) + [background] * (self.max_n - n)
            lines.append(" ".join(str(v) for v in pixels))
        return lines


def build_residue_grid(p: int, max_n: int, cache: SequenceCache) -> ResidueGrid:
    """Grid of r(n, k) mod p reduced from the exact table."""
    _require_prime(p)
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    cache.build_s_table(max_n)
    rows = tuple(
        tuple(cache.r(n, k) % p for k in range(1, n + 1)) for n in range(1, max_n + 1)
    )
    return ResidueGrid(modulus=p, max_n=max_n, rows=rows)
