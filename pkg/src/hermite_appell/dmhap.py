"""Degenerate multidimensional Hermite-based Appell polynomials.

The n-th polynomial is n! [xi^n] of A(xi) * exp(L * (l1 xi + l2 xi^2 + ... + lr xi^r)),
with L = log(1+kappa)/kappa.  Tables are exact over Q[l1..lr, L].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import series as S
from .appell import OperatorUnsupportedError, appell_numbers, family_series, get_family, log_derivative
from .poly import MultiPoly, PolyError
from .series import TruncationError, TruncSeries


@dataclass(frozen=True)
class DmhapTable:
    family: str
    r: int
    N: int
    entries: tuple

    def __getitem__(self, n: int) -> MultiPoly:
        return self.entries[n]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError("dimension r must be at least 1")


@lru_cache(maxsize=64)
def hermite_kernel(r: int, N: int) -> TruncSeries:
    """exp(L * sum_j l_j xi^j) truncated at xi^N; variables beyond xi^N are inert."""
    _check_r(r)
    if N < 0:
        raise ValueError("order must be non-negative")
    lam = MultiPoly.lam(r)
    arg = [MultiPoly.zero(r)]
    for j in range(1, N + 1):
        arg.append(lam * MultiPoly.var(r, j) if j <= r else MultiPoly.zero(r))
    return S.exp(TruncSeries(arg))


def generate(family, r: int, N: int) -> DmhapTable:
    """Entries 0..N of the DMHAP table for the given Appell family."""
    _check_r(r)
    if N < 0:
        raise ValueError("N must be non-negative")
    fam = get_family(family)
    prod = S.mul(family_series(fam, N), hermite_kernel(r, N))
    entries = []
    for n in range(N + 1):
        e = S.extract(prod, n)
        if not isinstance(e, MultiPoly):
            e = MultiPoly.const(r, e)
        entries.append(e)
    return DmhapTable(fam.name, r, N, tuple(entries))


def deriv_op(p: MultiPoly) -> MultiPoly:
    """The lowering operator L^{-1} d/dl1."""
    return p.d_l(1).shift_lambda(-1)


class MultiplicativeOperator:
    """Raising operator for a family with A(0) != 0.

    M = (A'/A)(Dhat) + L l1 + sum_{j=2}^r j l_j L^{2-j} d^{j-1}/dl1^{j-1},
    with Dhat = L^{-1} d/dl1 substituted for xi in the log-derivative series.
    """

    def __init__(self, family, r: int, order: int):
        _check_r(r)
        self.family = get_family(family)
        self.r = r
        self.order = order
        self.logder = log_derivative(self.family, order).coeffs
        self._l = [None] + [MultiPoly.var(r, j) for j in range(1, r + 1)]
        self._lam = MultiPoly.lam(r)

    def __call__(self, p: MultiPoly) -> MultiPoly:
        if p.r != self.r:
            raise PolyError(f"dimension mismatch: r={self.r} vs r={p.r}")
        out = self._lam * self._l[1] * p
        # (A'/A)(Dhat) p; Dhat is nilpotent on polynomials
        q = p
        for k, c in enumerate(self.logder):
            if q.is_zero():
                break
            if c:
                out = out + q * c
            q = deriv_op(q)
        else:
            if not q.is_zero():
                raise TruncationError("log-derivative series too short for this polynomial")
        dq = p
        for j in range(2, self.r + 1):
            dq = dq.d_l(1)
            if dq.is_zero():
                break
            out = out + (self._l[j] * dq).shift_lambda(2 - j) * j
        return out


def mult_op_apply(family, r: int, N: int, n: int) -> MultiPoly:
    """Apply the raising operator to entry n of generate(family, r, N)."""
    fam = get_family(family)
    if not fam.supports_operators:
        raise OperatorUnsupportedError("operators unsupported for A(0)=0")
    if n >= N:
        raise TruncationError(f"n={n} must be below N={N}")
    table = generate(fam, r, N)
    return MultiplicativeOperator(fam, r, N)(table[n])


def deriv_op_apply(table: DmhapTable, n: int) -> MultiPoly:
    if not 0 <= n <= table.N:
        raise TruncationError(f"n={n} outside table 0..{table.N}")
    return deriv_op(table[n])


def ode_residual(family, r: int, N: int, n: int) -> MultiPoly:
    """M(Dhat(entry n)) - n * entry n; identically zero for quasi-monomials."""
    fam = get_family(family)
    if not fam.supports_operators:
        raise OperatorUnsupportedError("operators unsupported for A(0)=0")
    if n > N - 1:
        raise TruncationError(f"n={n} must be at most N-1={N - 1}")
    table = generate(fam, r, N)
    M = MultiplicativeOperator(fam, r, N)
    return M(deriv_op(table[n])) - table[n] * n


def pde_residual(table: DmhapTable, j: int, n: int) -> MultiPoly:
    """d/dl_j entry - L^{1-j} d^j/dl1^j entry."""
    if not 2 <= j <= table.r:
        raise PolyError(f"j={j} outside 2..{table.r}")
    if not 0 <= n <= table.N:
        raise TruncationError(f"n={n} outside table 0..{table.N}")
    p = table[n]
    return p.d_l(j) - p.d_l(1, j).shift_lambda(1 - j)


def _heat_operator(p: MultiPoly, r: int, ls: list) -> MultiPoly:
    out = MultiPoly.zero(r)
    for j in range(2, r + 1):
        d = p.d_l(1, j)
        if d:
            out = out + (ls[j] * d).shift_lambda(1 - j)
    return out


def operational_rule(family, r: int, N: int) -> DmhapTable:
    """Rebuild the r-variable table as exp(sum_j l_j L^{1-j} d^j/dl1^j) on the r=1 table."""
    _check_r(r)
    fam = get_family(family)
    base = generate(fam, 1, N)
    ls = [None] + [MultiPoly.var(r, j) for j in range(1, r + 1)]
    entries = []
    for p in base:
        term = p.with_r(r)
        total = term
        k = 0
        while True:
            k += 1
            term = _heat_operator(term, r, ls) * Fraction(1, k)
            if term.is_zero():
                break
            total = total + term
        entries.append(total)
    return DmhapTable(fam.name, r, N, tuple(entries))


def classical_limit(table: DmhapTable) -> list:
    """Entries with L = 1 (kappa -> 0)."""
    return [p.subst_lambda(1) for p in table]


def _weighted_partitions(n: int, r: int):
    """Multiplicity vectors (m_1..m_r) with sum j*m_j = n."""
    if r == 1:
        yield (n,)
        return
    for m_r in range(n // r + 1):
        for rest in _weighted_partitions(n - r * m_r, r - 1):
            yield rest + (m_r,)


def classical_hermite(r: int, n: int) -> MultiPoly:
    """n! [xi^n] exp(l1 xi + ... + lr xi^r) by enumerating weighted partitions."""
    _check_r(r)
    terms = {}
    for ms in _weighted_partitions(n, r):
        c = Fraction(math.factorial(n))
        for m in ms:
            c /= math.factorial(m)
        terms[tuple(ms) + (0,)] = c
    return MultiPoly(r, terms)


def classical_oracle(family, r: int, n: int) -> MultiPoly:
    """Classical Hermite-Appell polynomial sum_k C(n,k) A_{n-k} H_k, computed without series exp."""
    nums = appell_numbers(family, n)
    total = MultiPoly.zero(r)
    for k in range(n + 1):
        a = nums[n - k]
        if a:
            total = total + classical_hermite(r, k) * (math.comb(n, k) * a)
    return total


def is_weighted_homogeneous(p: MultiPoly, degree: int) -> bool:
    return all(sum(j * e for j, e in enumerate(k[:-1], start=1)) == degree for k in p.terms)


def lambda_counting_holds(p: MultiPoly) -> bool:
    """Each l-factor carries exactly one L."""
    return all(k[-1] == sum(k[:-1]) for k in p.terms)
