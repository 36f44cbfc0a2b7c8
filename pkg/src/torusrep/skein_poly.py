"""Polynomial model of the one-holed torus skein module.

The module for boundary color 2c is realized as the quotient of the
polynomial ring on the core-curve variable z by the relation
Q_{d-c, c}(z) = 0, where

    Q_{n,c}(z) = prod_{i=c}^{c+n-1} (z - lambda_i)

and {Q_{n,c} : 0 <= n <= d-c-1} is a basis.  Multiplication of basis
elements is governed by structure constants C^l_{m,n}, available both in
closed form (a ratio of quantum factorials) and through a division-free
recursion; the two are cross-checked against brute polynomial expansion.

Everything here is exact arithmetic in Z[zeta_p]; this module serves as the
independent oracle for the twist matrices built elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycNum, PrimeContext, exact_div, field_inverse
from .qint import QScalars


def _poly_mul(a, b):
    ctx = a[0].ctx
    out = [ctx.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return tuple(out)


@lru_cache(maxsize=None)
def q_poly_monomial(qs: QScalars, n: int, c: int) -> tuple[CycNum, ...]:
    """Monomial coefficients (low degree first) of Q_{n,c}(z), monic of
    degree n.  Computation in the untruncated ring: any 0 <= n <= p goes."""
    if not 0 <= n <= qs.ctx.p:
        raise ValueError(f"need 0 <= n <= {qs.ctx.p}, got {n}")
    coeffs = (qs.ctx.one(),)
    for i in range(c, c + n):
        coeffs = _poly_mul(coeffs, (-qs.lambda_i(i), qs.ctx.one()))
    return coeffs


def expand_in_Qc(qs: QScalars, poly, c: int) -> tuple[CycNum, ...]:
    """Re-express a monomial-basis polynomial in the basis {Q_{n,c}}_{n>=0}.

    Synthetic division by (z - lambda_c), (z - lambda_{c+1}), ... peels off
    one coefficient per stage; exact inverse of assembling from
    q_poly_monomial.
    """
    coeffs = list(poly)
    out = []
    stage = 0
    while len(coeffs) > 1:
        r = qs.lambda_i(c + stage)
        deg = len(coeffs) - 1
        quot = [None] * deg
        quot[deg - 1] = coeffs[deg]
        for j in range(deg - 1, 0, -1):
            quot[j - 1] = coeffs[j] + r * quot[j]
        out.append(coeffs[0] + r * quot[0])
        coeffs = quot
        stage += 1
    out.append(coeffs[0])
    return tuple(out)


@dataclass(frozen=True)
class QPoly:
    """An element of the rank-(d-c) quotient module, as coefficients over
    the basis Q_{0,c}, ..., Q_{d-c-1,c}."""

    ctx: PrimeContext
    c: int
    coeffs: tuple[CycNum, ...]

    def __post_init__(self):
        if not 0 <= self.c <= self.ctx.d - 1:
            raise ValueError(f"need 0 <= c <= {self.ctx.d - 1}, got {self.c}")
        if len(self.coeffs) != self.ctx.d - self.c:
            raise ValueError(f"need {self.ctx.d - self.c} coefficients")

    @classmethod
    def unit(cls, ctx: PrimeContext, c: int, n: int) -> "QPoly":
        rank = ctx.d - c
        return cls(ctx, c, tuple(ctx.one() if i == n else ctx.zero() for i in range(rank)))


def multiply_mod(qs: QScalars, x: QPoly, y) -> QPoly:
    """Multiply x by a monomial-basis polynomial y inside the quotient:
    expand the product over {Q_{n,c}} and discard every Q_{n,c} with
    n >= d-c (those vanish in the module)."""
    ctx, c = x.ctx, x.c
    rank = ctx.d - c
    prod = [ctx.zero()]
    for n, xn in enumerate(x.coeffs):
        if xn:
            term = _poly_mul(q_poly_monomial(qs, n, c), tuple(y))
            term = [xn * t for t in term]
            if len(term) > len(prod):
                prod, term = term, prod
            for i, t in enumerate(term):
                prod[i] = prod[i] + t
    expanded = expand_in_Qc(qs, prod, c)
    kept = list(expanded[:rank]) + [ctx.zero()] * (rank - min(rank, len(expanded)))
    return QPoly(ctx, c, tuple(kept))


@lru_cache(maxsize=None)
def C_closed(qs: QScalars, l: int, m: int, n: int) -> CycNum:
    """Structure constant C^l_{m,n} = (-1)^l {m}!{n}!{m+n+1}! /
    ({m-l}!{n-l}!{m+n+1-l}!{l}!).

    Evaluated as a product of the three length-l falling slices divided once
    by {l}! -- same value, but no intermediate quotient, so the boundary
    cases where a full factorial vanishes stay well defined.
    """
    if not (0 <= l <= min(m, n)) or m >= qs.ctx.p or n >= qs.ctx.p:
        raise ValueError(f"C^{l}_({m},{n}) out of range for p={qs.ctx.p}")
    num = qs.ctx.one()
    for j in range(m - l + 1, m + 1):
        num = num * qs.brace(j)
    for j in range(n - l + 1, n + 1):
        num = num * qs.brace(j)
    for j in range(m + n + 2 - l, m + n + 2):
        num = num * qs.brace(j)
    if l % 2:
        num = -num
    val = exact_div(num, qs.brace_fact(l))
    if val is None:
        raise ArithmeticError(f"C^{l}_({m},{n}) is not integral at p={qs.ctx.p}")
    return val


def C_recursive(qs: QScalars, l: int, m: int, n: int) -> CycNum:
    """C^l_{m,n} by the division-free recursion on n, with
    beta_{a,b} = lambda_a - lambda_b:

        C^0_{m,n}     = 1
        C^l_{m,n+1}   = C^l_{m,n} + beta_{m+n-l+1, n} * C^{l-1}_{m,n}
        C^{n+1}_{m,n+1} = beta_{m,n} * C^n_{m,n}

    (the top case is the middle one with the vanishing C^{n+1}_{m,n} term).
    """
    if not (0 <= l <= min(m, n)) or m >= qs.ctx.p or n >= qs.ctx.p:
        raise ValueError(f"C^{l}_({m},{n}) out of range for p={qs.ctx.p}")
    memo = {}

    def rec(lv, nv):
        if lv == 0:
            return qs.ctx.one()
        if lv > nv:
            return qs.ctx.zero()
        key = (lv, nv)
        if key not in memo:
            beta = qs.lambda_i(m + nv - lv) - qs.lambda_i(nv - 1)
            memo[key] = rec(lv, nv - 1) + beta * rec(lv - 1, nv - 1)
        return memo[key]

    return rec(l, n)


def verify_product_expansion(qs: QScalars, m: int, n: int, c: int) -> bool:
    """Check the product identity

        Q_m(z) * Q_{n,c}(z) = sum_{l=0}^{min(m,n+c)} C^l_{m,n+c} * Q_{m+n-l,c}(z)

    as exact polynomials (no quotient truncation); needs m + n + c < p."""
    if m < 0 or n < 0 or c < 0 or m + n + c >= qs.ctx.p:
        raise ValueError("need m, n, c >= 0 with m + n + c < p")
    lhs = _poly_mul(q_poly_monomial(qs, m, 0), q_poly_monomial(qs, n, c))
    got = expand_in_Qc(qs, lhs, c)
    want = [qs.ctx.zero()] * (m + n + 1)
    for l in range(0, min(m, n + c) + 1):
        want[m + n - l] = C_closed(qs, l, m, n + c)
    return list(got) == want


def omega_plus_coeffs(qs: QScalars) -> tuple[CycNum, ...]:
    """Coefficients of the positive-twist element omega_+ over the
    orthogonal basis Q'_m = Q_m/{m}!: exactly (gamma_0, ..., gamma_{d-1})."""
    return tuple(qs.gamma_m(m) for m in range(qs.ctx.d))


def omega_plus_unprimed(qs: QScalars) -> tuple[CycNum, ...]:
    """omega_+ over the plain basis Q_m: coefficient m is gamma_m/{m}!,
    exact in Q(zeta_p) (not integral for m >= 1)."""
    return tuple(
        qs.gamma_m(m) * field_inverse(qs.brace_fact(m)) if m else qs.gamma_m(0)
        for m in range(qs.ctx.d)
    )


def omega_plus_poly(qs: QScalars) -> tuple[CycNum, ...]:
    """omega_+ as a monomial-basis polynomial in z, degree d-1."""
    ctx = qs.ctx
    out = [ctx.zero()] * ctx.d
    for m, coeff in enumerate(omega_plus_unprimed(qs)):
        qm = q_poly_monomial(qs, m, 0)
        for i, a in enumerate(qm):
            out[i] = out[i] + coeff * a
    return tuple(out)
