"""Exact big-integer verification of a binomial summation identity.

For n >= m >= 1 and i >= 0,

    sum_{k=m}^{n} (-1)^(k+n) (k/n) C(k^2-1, n-m-i) C(2n, n-k) C(k+m-1, k-m)

equals (2n-1)!/((n-m)! (2m-1)!) when i = 0 and vanishes for i > 0.  The
sums are evaluated over exact rationals (the k/n factor) and asserted to be
integers; no modular reduction anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial


def _binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def krattenthaler_sum(n: int, m: int, i: int) -> int:
    """The left-hand sum, as an exact integer."""
    if not (n >= m >= 1 and i >= 0):
        raise ValueError("need n >= m >= 1 and i >= 0")
    total = Fraction(0)
    for k in range(m, n + 1):
        term = (
            Fraction(k, n)
            * _binom(k * k - 1, n - m - i)
            * _binom(2 * n, n - k)
            * _binom(k + m - 1, k - m)
        )
        total += -term if (k + n) % 2 else term
    if total.denominator != 1:
        raise ArithmeticError(f"sum at (n={n}, m={m}, i={i}) is not an integer")
    return int(total)


def closed_form(n: int, m: int) -> int:
    """The i = 0 right-hand side (2n-1)!/((n-m)!(2m-1)!), an exact integer."""
    val, rem = divmod(factorial(2 * n - 1), factorial(n - m) * factorial(2 * m - 1))
    assert rem == 0
    return val


@dataclass
class IdentityReport:
    n_max: int
    checked: int = 0
    failures: list[tuple[int, int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_identity_grid(n_max: int) -> IdentityReport:
    """Check both branches for all 1 <= m <= n <= n_max, 0 <= i <= n-m.

    Failures are collected as (n, m, i, got, expected) tuples, never raised.
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    report = IdentityReport(n_max)
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            for i in range(0, n - m + 1):
                got = krattenthaler_sum(n, m, i)
                want = closed_form(n, m) if i == 0 else 0
                report.checked += 1
                if got != want:
                    report.failures.append((n, m, i, got, want))
    return report
