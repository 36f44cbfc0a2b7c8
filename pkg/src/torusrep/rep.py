"""Twist matrices on the one-holed torus module, exactly over Z[zeta_p].

The module for boundary color 2c has the orthogonal basis
Q'_n = Q_{n,c}/{n}!, n = 0..d-c-1.  The meridinal twist t acts upper
triangularly and the longitudinal twist t* lower triangularly:

    t(Q'_n)  = sum_m a_{m,n} Q'_m      (matrix entry (m, n) = a_{m,n})
    t*(Q'_m) = sum_n b_{n,m} Q'_n      (matrix entry (n, m) = b_{n,m})

with row index always written first.  The entries come in two independent
ways: closed-form sums over quantum factorials (b_entry/a_entry, related by
the adjointness ratio R), and multiplication by the twist element omega_+
in the polynomial model (tstar_oracle).  Both land in Z[zeta_p], which the
matrix type enforces entrywise.

Truncating entries h-adically yields the finite-level representations on
matrices over Z[zeta_p]/(h^(N+1)); truncation commutes with products, so
word values may be computed exactly and truncated at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import (
    CycNum,
    HDigits,
    PrimeContext,
    exact_div,
    field_inverse,
    truncate,
)
from .qint import QScalars
from .skein_poly import C_closed, QPoly, multiply_mod, omega_plus_poly


class RepMatrix:
    """A (d-c) x (d-c) matrix over Z[zeta_p] in the Q' basis.

    Immutable; the constructor rejects non-integral entries, so every value
    of this type genuinely preserves the integral lattice.
    """

    __slots__ = ("ctx", "c", "entries")

    def __init__(self, ctx: PrimeContext, c: int, entries):
        rank = ctx.d - c
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != rank or any(len(row) != rank for row in entries):
            raise ValueError(f"need a {rank}x{rank} matrix for c={c}")
        for row in entries:
            for e in row:
                if not e.is_integral():
                    raise ValueError(f"entry outside Z[zeta_p]: {e!r}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RepMatrix is immutable")

    @classmethod
    def identity(cls, ctx: PrimeContext, c: int) -> "RepMatrix":
        rank = ctx.d - c
        one, zero = ctx.one(), ctx.zero()
        return cls(ctx, c, tuple(
            tuple(one if i == j else zero for j in range(rank)) for i in range(rank)
        ))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return (self.ctx, self.c, self.entries) == (other.ctx, other.c, other.entries)

    def __hash__(self):
        return hash((self.ctx, self.c, self.entries))

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.ctx != other.ctx or self.c != other.c:
            raise ValueError("matrices live on different modules")
        n = self.size
        cols = tuple(zip(*other.entries))
        rows = []
        for i in range(n):
            ri = self.entries[i]
            row = []
            for j in range(n):
                cj = cols[j]
                acc = self.ctx.zero()
                for k in range(n):
                    if ri[k] and cj[k]:
                        acc = acc + ri[k] * cj[k]
                row.append(acc)
            rows.append(tuple(row))
        return RepMatrix(self.ctx, self.c, tuple(rows))

    def __pow__(self, k: int) -> "RepMatrix":
        if k < 0:
            return invert(self) ** (-k)
        result = RepMatrix.identity(self.ctx, self.c)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def scale(self, s) -> "RepMatrix":
        return RepMatrix(self.ctx, self.c, tuple(
            tuple(e * s for e in row) for row in self.entries
        ))

    def diagonal(self) -> tuple[CycNum, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def is_upper_triangular(self) -> bool:
        return all(
            not self.entries[i][j] for i in range(self.size) for j in range(i)
        )

    def is_lower_triangular(self) -> bool:
        return all(
            not self.entries[i][j]
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def transpose(self) -> "RepMatrix":
        return RepMatrix(self.ctx, self.c, tuple(zip(*self.entries)))

    def truncate(self, N: int) -> "HDigitsMatrix":
        return HDigitsMatrix(
            self.ctx.p, N, self.c,
            tuple(tuple(truncate(e, N) for e in row) for row in self.entries),
        )

    def reduce_mod_h(self) -> tuple[tuple[int, ...], ...]:
        """Entrywise image in F_p (zeta -> 1)."""
        from .cyclotomic import reduce_mod_h as _red
        return tuple(tuple(_red(e) for e in row) for row in self.entries)

    def __repr__(self):
        body = ",\n  ".join(repr(list(row)) for row in self.entries)
        return f"RepMatrix(p={self.ctx.p}, c={self.c},\n  {body})"


@dataclass(frozen=True)
class HDigitsMatrix:
    """A matrix over the truncated ring Z[zeta_p]/(h^(N+1))."""

    p: int
    N: int
    c: int
    entries: tuple[tuple[HDigits, ...], ...]

    def __matmul__(self, other: "HDigitsMatrix") -> "HDigitsMatrix":
        if (self.p, self.N, self.c) != (other.p, other.N, other.c):
            raise ValueError("mismatched truncated modules")
        ctx = PrimeContext(self.p)
        lift = lambda M: [[e.lift(ctx) for e in row] for row in M.entries]
        a, b = lift(self), lift(other)
        n = len(a)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ctx.zero()
                for k in range(n):
                    acc = acc + a[i][k] * b[k][j]
                row.append(truncate(acc, self.N))
            rows.append(tuple(row))
        return HDigitsMatrix(self.p, self.N, self.c, tuple(rows))


def norm_Qprime(qs: QScalars, n: int, c: int) -> CycNum:
    """The self-pairing of Q'_n on the module with boundary color 2c:

    q^(-c(c+1)/2) * {2c+2n+1}!! * {2c+n+1}+! / {n}! * ({c}_q!)^2 / ({1}_q {2c}_q!)

    Integral, with h-adic valuation exactly c."""
    if not 0 <= n <= qs.ctx.d - c - 1:
        raise ValueError(f"need 0 <= n <= {qs.ctx.d - c - 1}")
    num = (
        qs.ctx.zeta_pow(-(c * (c + 1)) // 2)
        * qs.brace_dfact(2 * c + 2 * n + 1)
        * qs.brace_plus_fact(2 * c + n + 1)
        * qs.brace_q_fact(c) ** 2
    )
    den = qs.brace_fact(n) * qs.brace_q(1) * qs.brace_q_fact(2 * c)
    val = exact_div(num, den)
    if val is None:
        raise ArithmeticError(f"norm of Q'_{n} (c={c}) not integral at p={qs.ctx.p}")
    return val


def norm_Q(qs: QScalars, n: int, c: int) -> CycNum:
    """The self-pairing of the unprimed Q_n = {n}! Q'_n, from its own
    closed form (not derived from norm_Qprime, so the two can be compared):

    q^(-c(c+1)/2) * {n}! * {2c+2n+1}!! * {2c+n+1}+! * ({c}_q!)^2 / ({1}_q {2c}_q!)
    """
    if not 0 <= n <= qs.ctx.d - c - 1:
        raise ValueError(f"need 0 <= n <= {qs.ctx.d - c - 1}")
    num = (
        qs.ctx.zeta_pow(-(c * (c + 1)) // 2)
        * qs.brace_fact(n)
        * qs.brace_dfact(2 * c + 2 * n + 1)
        * qs.brace_plus_fact(2 * c + n + 1)
        * qs.brace_q_fact(c) ** 2
    )
    den = qs.brace_q(1) * qs.brace_q_fact(2 * c)
    val = exact_div(num, den)
    if val is None:
        raise ArithmeticError(f"norm of Q_{n} (c={c}) not integral at p={qs.ctx.p}")
    return val


@lru_cache(maxsize=None)
def ratio_R(qs: QScalars, n: int, m: int, c: int) -> CycNum:
    """R_{n,m} = {m}!{2c+2n+1}!!{2c+n+1}+! / ({n}!{2c+2m+1}!!{2c+m+1}+!),
    the unit relating adjoint entries: a_{m,n} = R_{n,m} b_{n,m}.  Equals
    norm_Qprime(n,c)/norm_Qprime(m,c)."""
    d = qs.ctx.d
    if not (0 <= m <= d - c - 1 and 0 <= n <= d - c - 1):
        raise ValueError(f"need indices in 0..{d - c - 1}")
    num = qs.brace_fact(m) * qs.brace_dfact(2 * c + 2 * n + 1) * qs.brace_plus_fact(2 * c + n + 1)
    den = qs.brace_fact(n) * qs.brace_dfact(2 * c + 2 * m + 1) * qs.brace_plus_fact(2 * c + m + 1)
    val = exact_div(num, den)
    if val is None:
        raise ArithmeticError(f"R_({n},{m}) (c={c}) not integral at p={qs.ctx.p}")
    return val


def b_term(qs: QScalars, n: int, m: int, l: int, c: int) -> CycNum:
    """Summand l of the t* entry b_{n,m}:

        C^l_{l+n-m, m+c} * gamma_{l+n-m} / {l+n-m}! * {n}!/{m}!

    Integral with h-adic valuation exactly l."""
    if not (0 <= m <= n <= qs.ctx.d - c - 1 and 0 <= l <= m + c):
        raise ValueError("need 0 <= m <= n <= d-c-1 and 0 <= l <= m+c")
    num = C_closed(qs, l, l + n - m, m + c) * qs.gamma_m(l + n - m) * qs.brace_fact(n)
    den = qs.brace_fact(l + n - m) * qs.brace_fact(m)
    val = exact_div(num, den)
    if val is None:
        raise ArithmeticError(f"b-term (n={n},m={m},l={l},c={c}) not integral")
    return val


@lru_cache(maxsize=None)
def b_entry(qs: QScalars, n: int, m: int, c: int) -> CycNum:
    """Entry (n, m) of the t* matrix; zero above the diagonal (m > n)."""
    if m > n:
        return qs.ctx.zero()
    acc = qs.ctx.zero()
    for l in range(0, m + c + 1):
        acc = acc + b_term(qs, n, m, l, c)
    return acc


def a_entry(qs: QScalars, m: int, n: int, c: int) -> CycNum:
    """Entry (m, n) of the t matrix: R_{n,m} * b_{n,m}; zero for m > n."""
    if m > n:
        return qs.ctx.zero()
    return ratio_R(qs, n, m, c) * b_entry(qs, n, m, c)


@lru_cache(maxsize=None)
def t_matrix(qs: QScalars, c: int) -> RepMatrix:
    """The meridinal twist on the color-2c module (upper triangular)."""
    rank = qs.ctx.d - c
    return RepMatrix(qs.ctx, c, tuple(
        tuple(a_entry(qs, m, n, c) for n in range(rank)) for m in range(rank)
    ))


@lru_cache(maxsize=None)
def tstar_matrix(qs: QScalars, c: int) -> RepMatrix:
    """The longitudinal twist on the color-2c module (lower triangular)."""
    rank = qs.ctx.d - c
    return RepMatrix(qs.ctx, c, tuple(
        tuple(b_entry(qs, n, m, c) for m in range(rank)) for n in range(rank)
    ))


@lru_cache(maxsize=None)
def tstar_oracle(qs: QScalars, c: int) -> RepMatrix:
    """t* computed the other way: as multiplication by omega_+ in the
    polynomial quotient model, rescaled from the Q basis to the Q' basis.
    Shares no formulas with b_entry, so entrywise agreement with
    tstar_matrix cross-validates both routes."""
    ctx = qs.ctx
    rank = ctx.d - c
    omega = omega_plus_poly(qs)
    fact_inv = [field_inverse(qs.brace_fact(m)) for m in range(rank)]
    cols = []
    for m in range(rank):
        image = multiply_mod(qs, QPoly.unit(ctx, c, m), omega)
        # t*(Q'_m) = (Q_{m,c} * omega_+)/{m}! = sum_n coeff_n {n}!/{m}! Q'_n
        cols.append([
            image.coeffs[n] * qs.brace_fact(n) * fact_inv[m] for n in range(rank)
        ])
    return RepMatrix(ctx, c, tuple(
        tuple(cols[m][n] for m in range(rank)) for n in range(rank)
    ))


def invert(M: RepMatrix) -> RepMatrix:
    """Exact inverse of a triangular matrix whose diagonal entries are
    units of Z[zeta_p], by back substitution."""
    if M.is_lower_triangular() and not M.is_upper_triangular():
        return invert(M.transpose()).transpose()
    if not M.is_upper_triangular():
        raise ValueError("matrix is not triangular")
    ctx, n = M.ctx, M.size
    one, zero = ctx.one(), ctx.zero()
    dinv = []
    for i in range(n):
        q = exact_div(one, M.entries[i][i])
        if q is None:
            raise ValueError(f"diagonal entry {i} is not a unit")
        dinv.append(q)
    X = [[zero] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        X[i][i] = dinv[i]
        for j in range(i + 1, n):
            acc = zero
            for k in range(i + 1, j + 1):
                acc = acc + M.entries[i][k] * X[k][j]
            X[i][j] = -(dinv[i] * acc)
    return RepMatrix(ctx, M.c, tuple(tuple(row) for row in X))


#: Word alphabet: uppercase letters are the twists, lowercase their inverses.
WORD_ALPHABET = "TSts"


def eval_word(qs: QScalars, word: str, c: int, N: int | None = None):
    """Evaluate a mapping-class word (T = t, S = t*, lowercase = inverse)
    to its exact matrix, or to its h-adic truncation at depth N.

    The product is always computed exactly and truncated at the end; since
    truncation is a ring homomorphism, this agrees with digitwise
    arithmetic at every level.
    """
    bad = set(word) - set(WORD_ALPHABET)
    if bad:
        raise ValueError(f"word letters must be in {WORD_ALPHABET!r}, got {sorted(bad)}")
    mats = {"T": t_matrix(qs, c), "S": tstar_matrix(qs, c)}
    result = RepMatrix.identity(qs.ctx, c)
    for ch in word:
        if ch not in mats:
            mats[ch] = invert(mats[ch.upper()])
        result = result @ mats[ch]
    if N is None:
        return result
    return result.truncate(N)


def verify_relations(qs: QScalars, c: int) -> dict[str, bool]:
    """Exact checks of the defining relations on the color-2c module.

    Returns one boolean per named check; every failure mode stays a report
    entry rather than an exception.
    """
    ctx = qs.ctx
    p = ctx.p
    t = t_matrix(qs, c)
    s = tstar_matrix(qs, c)
    ident = RepMatrix.identity(ctx, c)
    tst = t @ s @ t

    exponent = (-6 + 2 * c * (c + 1) - p * (p + 1) // 2) % p
    mu = tuple(qs.mu_k(c + n) for n in range(ctx.d - c))

    return {
        "braid": tst == s @ t @ s,
        "central_scalar": tst ** 4 == ident.scale(ctx.zeta_pow(exponent)),
        "order_p": t ** p == ident and s ** p == ident,
        "twist_spectrum": t.diagonal() == mu and s.diagonal() == mu,
        "multiplication_oracle": s == tstar_oracle(qs, c),
    }
