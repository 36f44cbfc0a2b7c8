"""Exact arithmetic in the cyclotomic field Q(zeta_p) and the ring Z[zeta_p].

Values are coefficient vectors over the power basis 1, zeta, ..., zeta^(p-2),
kept canonical through the relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
Equality is coefficientwise, and an element is an algebraic integer exactly
when every coefficient is an integer (Z[zeta_p] is the full ring of integers,
so no hidden denominators can occur).

The element h = 1 - zeta generates the unique prime ideal above p, with
(h)^(p-1) = (p).  Exact division, h-adic valuations and truncated digit
expansions -- the finite rings Z[zeta_p]/(h^(N+1)), whose N = 0 layer is the
field F_p via zeta -> 1 -- are all decided here by field inversion (extended
gcd against the p-th cyclotomic polynomial) followed by an integrality check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime p >= 5; d = (p-1)/2 is the number of admissible colors."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p) or self.p < 5:
            raise ValueError(f"p must be an odd prime >= 5, got {self.p}")

    @property
    def d(self) -> int:
        return (self.p - 1) // 2

    def zero(self) -> "CycNum":
        return CycNum(self, (0,) * (self.p - 1))

    def one(self) -> "CycNum":
        return self.from_int(1)

    def from_int(self, n: int) -> "CycNum":
        return CycNum(self, (n,) + (0,) * (self.p - 2))

    def from_fractions(self, coeffs) -> "CycNum":
        """Build an element from p-1 rational coefficients (power basis)."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coefficients, got {len(coeffs)}")
        den = math.lcm(*(c.denominator for c in coeffs))
        nums = tuple(int(c * den) for c in coeffs)
        return CycNum(self, nums, den)

    def zeta_pow(self, k: int) -> "CycNum":
        """zeta^k as a canonical basis vector (k may be any integer)."""
        k %= self.p
        if k < self.p - 1:
            nums = tuple(1 if i == k else 0 for i in range(self.p - 1))
        else:
            nums = (-1,) * (self.p - 1)
        return CycNum(self, nums)

    @property
    def h(self) -> "CycNum":
        """h = 1 - zeta, a generator of the prime ideal above p."""
        return self.one() - self.zeta_pow(1)


class CycNum:
    """An element of Q(zeta_p), stored as integer coefficients over a common
    positive denominator.  Instances are immutable and hashable."""

    __slots__ = ("ctx", "nums", "den")

    def __init__(self, ctx: PrimeContext, nums, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        nums = tuple(nums)
        if len(nums) != ctx.p - 1:
            raise ValueError(f"need {ctx.p - 1} coefficients, got {len(nums)}")
        if den < 0:
            nums = tuple(-n for n in nums)
            den = -den
        g = math.gcd(den, *nums)
        if g > 1:
            nums = tuple(n // g for n in nums)
            den //= g
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_integral(self) -> bool:
        return self.den == 1

    def __bool__(self) -> bool:
        return any(self.nums)

    def __eq__(self, other) -> bool:
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.ctx.p, self.nums, self.den))

    def __neg__(self) -> "CycNum":
        return CycNum(self.ctx, tuple(-n for n in self.nums), self.den)

    def __add__(self, other) -> "CycNum":
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.den, other.den
        nums = tuple(x * b + y * a for x, y in zip(self.nums, other.nums))
        return CycNum(self.ctx, nums, a * b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "CycNum":
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ctx.p
        a, b = self.nums, other.nums
        # convolve, folding exponents mod p (zeta^p = 1) ...
        acc = [0] * p
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        acc[(i + j) % p] += ai * bj
        # ... then eliminate zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        top = acc[p - 1]
        nums = tuple(acc[i] - top for i in range(p - 1))
        return CycNum(self.ctx, nums, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return field_inverse(self) ** (-k)
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        terms = []
        for i, n in enumerate(self.nums):
            if n:
                c = n if self.den == 1 else Fraction(n, self.den)
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"CycNum(p={self.ctx.p}: {body})"


def _coerce(ctx: PrimeContext, value):
    if isinstance(value, CycNum):
        if value.ctx != ctx:
            raise ValueError("mixed prime contexts")
        return value
    if isinstance(value, int):
        return ctx.from_int(value)
    if isinstance(value, Fraction):
        return CycNum(ctx, (value.numerator,) + (0,) * (ctx.p - 2), value.denominator)
    return NotImplemented


# ---------------------------------------------------------------------------
# field inversion: extended gcd against Phi_p(X) = 1 + X + ... + X^(p-1)
# over exact rationals.  Phi_p is irreducible, so the gcd with any nonzero
# element is a nonzero constant.

def _pdeg(f):
    for i in range(len(f) - 1, -1, -1):
        if f[i]:
            return i
    return -1


def _pdivmod(a, b):
    db = _pdeg(b)
    lead = b[db]
    r = list(a)
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(_pdeg(r), db - 1, -1):
        if r[i]:
            coef = r[i] / lead
            q[i - db] = coef
            for j in range(db + 1):
                r[i - db + j] -= coef * b[j]
    return q, r


def _pmulsub(t0, q, t1):
    # t0 - q * t1
    out = [Fraction(0)] * max(len(t0), len(q) + len(t1) - 1)
    for i, c in enumerate(t0):
        out[i] += c
    for i, qi in enumerate(q):
        if qi:
            for j, tj in enumerate(t1):
                if tj:
                    out[i + j] -= qi * tj
    return out


@lru_cache(maxsize=None)
def field_inverse(x: CycNum) -> CycNum:
    """The inverse of a nonzero element of Q(zeta_p)."""
    if not x:
        raise ZeroDivisionError("inverse of zero")
    p = x.ctx.p
    r0 = [Fraction(1)] * p
    r1 = [Fraction(n, x.den) for n in x.nums]
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while _pdeg(r1) >= 0:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, _pmulsub(t0, q, t1)
    # r0 is a nonzero constant c with t0 * x == c (mod Phi_p)
    c = r0[0]
    inv = [t / c for t in t0]
    inv += [Fraction(0)] * (p - 1 - len(inv))
    return x.ctx.from_fractions(inv[: p - 1])


def exact_div(x: CycNum, y: CycNum) -> CycNum | None:
    """x / y when the quotient lies in Z[zeta_p]; None when y does not
    divide x there.  Division by zero raises, it is not a missing quotient."""
    if not y:
        raise ZeroDivisionError("exact_div by zero")
    q = x * field_inverse(y)
    return q if q.is_integral() else None


def h_valuation(x: CycNum):
    """The h-adic valuation of an integral element (math.inf for 0).

    Well defined because h generates a prime ideal; computed by repeated
    exact division, which terminates since (h^(p-1)) = (p).
    """
    if not x.is_integral():
        raise ValueError("h_valuation needs an element of Z[zeta_p]")
    if not x:
        return math.inf
    h = x.ctx.h
    v = 0
    while True:
        q = exact_div(x, h)
        if q is None:
            return v
        v += 1
        x = q


def is_associate(x: CycNum, y: CycNum) -> bool:
    """True when x and y generate the same ideal of Z[zeta_p] (x = u*y, u a
    unit).  0 is an associate of 0 only."""
    if not x or not y:
        return not x and not y
    return exact_div(x, y) is not None and exact_div(y, x) is not None


def reduce_mod_h(x: CycNum) -> int:
    """The image of an integral element in Z[zeta_p]/(h) = F_p (zeta -> 1)."""
    if not x.is_integral():
        raise ValueError("reduce_mod_h needs an element of Z[zeta_p]")
    return sum(x.nums) % x.ctx.p


@dataclass(frozen=True)
class HDigits:
    """A truncated h-adic expansion d_0 + d_1*h + ... + d_N*h^N with digits
    in {0, ..., p-1}; the elements of Z[zeta_p]/(h^(N+1)) in canonical form."""

    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("need at least the mod-h digit")
        if any(not (0 <= di < self.p) for di in self.digits):
            raise ValueError("digits must lie in {0, ..., p-1}")

    @property
    def N(self) -> int:
        return len(self.digits) - 1

    def lift(self, ctx: PrimeContext | None = None) -> CycNum:
        """The canonical integral representative sum(d_i * h^i)."""
        if ctx is None:
            ctx = PrimeContext(self.p)
        h = ctx.h
        acc, hpow = ctx.zero(), ctx.one()
        for di in self.digits:
            acc = acc + ctx.from_int(di) * hpow
            hpow = hpow * h
        return acc

    def _binop(self, other, op):
        if not isinstance(other, HDigits):
            return NotImplemented
        if self.p != other.p or self.N != other.N:
            raise ValueError("mismatched modulus h^(N+1)")
        return truncate(op(self.lift(), other.lift()), self.N)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)


def truncate(x: CycNum, N: int) -> HDigits:
    """The h-adic digits of an integral element through h^N.

    Digit extraction peels one layer at a time: d_0 is the mod-h reduction,
    and x - d_0 is then exactly divisible by h.  Truncation at every level N
    is a ring homomorphism onto Z[zeta_p]/(h^(N+1)).
    """
    if N < 0:
        raise ValueError("truncation order must be >= 0")
    if not x.is_integral():
        raise ValueError("truncate needs an element of Z[zeta_p]")
    ctx = x.ctx
    h = ctx.h
    digits = []
    for _ in range(N + 1):
        d = reduce_mod_h(x)
        digits.append(d)
        x = exact_div(x - ctx.from_int(d), h)
        assert x is not None  # x - (x mod h) is divisible by h
    return HDigits(ctx.p, tuple(digits))
