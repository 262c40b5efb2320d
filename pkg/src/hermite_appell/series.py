"""Truncated formal power series over an exact commutative ring.

Coefficients are stored plainly (``coeffs[k]`` multiplies xi**k, no factorial
scaling); :func:`extract` applies ``n!`` on the way out.  Any coefficient type
with ``+ - *`` and scalar multiplication by ``Fraction`` works; in practice
that is ``Fraction`` or :class:`~hermite_appell.poly.MultiPoly`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .poly import MultiPoly


class SeriesError(ValueError):
    pass


class TruncationError(SeriesError):
    pass


def _zero_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.zero(x.r)
    return Fraction(0)


def _one_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.one(x.r)
    return Fraction(1)


def _is_zero(x) -> bool:
    return not x


def _reciprocal(x):
    if isinstance(x, MultiPoly):
        if not x.is_unit():
            raise SeriesError("non-unit constant term")
        return x.inverse()
    if not x:
        raise SeriesError("non-unit constant term")
    return 1 / Fraction(x)


def _norm(c):
    if isinstance(c, MultiPoly):
        return c
    return Fraction(c)


class TruncSeries:
    """c_0 + c_1 xi + ... + c_N xi**N, everything beyond xi**N discarded."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not len(coeffs):
            raise SeriesError("series needs at least one coefficient")
        self.coeffs = tuple(_norm(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return mul(self, other)
        return TruncSeries([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return TruncSeries([c * other for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self.coeffs]})"


def make(coeffs: Sequence) -> TruncSeries:
    return TruncSeries(coeffs)


def constant(c, order: int) -> TruncSeries:
    c = _norm(c)
    return TruncSeries([c] + [_zero_like(c)] * order)


def from_function(f: Callable[[int], object], order: int) -> TruncSeries:
    """Series whose k-th coefficient is ``f(k)``."""
    return TruncSeries([f(k) for k in range(order + 1)])


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for m in range(n + 1):
        acc = None
        for k in range(m + 1):
            x, y = ac[k], bc[m - k]
            if _is_zero(x) or _is_zero(y):
                continue
            t = x * y
            acc = t if acc is None else acc + t
        out.append(acc if acc is not None else _zero_like(ac[0] if not isinstance(bc[0], MultiPoly) else bc[0]))
    return TruncSeries(out)


def inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be a unit."""
    c = a.coeffs
    b0 = _reciprocal(c[0])
    out = [b0]
    for m in range(1, a.order + 1):
        acc = _zero_like(c[0])
        for k in range(1, m + 1):
            if not _is_zero(c[k]):
                acc = acc + c[k] * out[m - k]
        out.append(-(acc * b0))
    return TruncSeries(out)


def exp(a: TruncSeries) -> TruncSeries:
    """exp of a series with zero constant term, via n g_n = sum k a_k g_{n-k}."""
    c = a.coeffs
    if not _is_zero(c[0]):
        raise SeriesError("nonzero constant term in exp")
    g = [_one_like(c[0])]
    for n in range(1, a.order + 1):
        acc = _zero_like(c[0])
        for k in range(1, n + 1):
            if not _is_zero(c[k]):
                acc = acc + (c[k] * g[n - k]) * k
        g.append(acc * Fraction(1, n))
    return TruncSeries(g)


def scale_arg(a: TruncSeries, c) -> TruncSeries:
    """Substitute xi -> c*xi."""
    out = []
    p = _one_like(c) if isinstance(c, MultiPoly) else Fraction(1)
    for coeff in a.coeffs:
        out.append(coeff * p)
        p = p * c
    return TruncSeries(out)


def derivative(a: TruncSeries) -> TruncSeries:
    """d/dxi; the result has order one less (order 0 maps to the zero series)."""
    if a.order == 0:
        return TruncSeries([_zero_like(a.coeffs[0])])
    return TruncSeries([a.coeffs[k] * k for k in range(1, a.order + 1)])


def shift(a: TruncSeries, k: int = 1) -> TruncSeries:
    """Multiply by xi**k, keeping the same order."""
    z = _zero_like(a.coeffs[0])
    return TruncSeries(([z] * k + list(a.coeffs))[: a.order + 1])


def map_coeffs(a: TruncSeries, f: Callable) -> TruncSeries:
    return TruncSeries([f(c) for c in a.coeffs])


def extract(a: TruncSeries, n: int):
    """n! times the coefficient of xi**n (the exponential-generating coefficient)."""
    if n < 0:
        raise SeriesError("negative index")
    if n > a.order:
        raise TruncationError(f"index {n} beyond truncation order {a.order}")
    return a.coeffs[n] * math.factorial(n)


def exp_series(order: int, c=1) -> TruncSeries:
    """Truncation of e^{c xi} with rational c."""
    c = Fraction(c)
    return from_function(lambda k: c ** k / math.factorial(k), order)
