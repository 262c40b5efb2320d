"""Sparse exact polynomials in l1..lr with a Laurent slope symbol L.

L stands for log(1+kappa)/kappa.  Every kappa-dependence of the degenerate
expansions enters through L, so the coefficient ring stays exact; kappa only
comes back in :meth:`MultiPoly.eval_numeric`.

A term is keyed by ``(e_1, ..., e_r, e_L)`` with ``e_j >= 0`` and ``e_L`` any
integer.  Zero coefficients are never stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import mpmath

LAMBDA_SYMBOL = "L"

Key = tuple  # (e_1, ..., e_r, e_L)


class PolyError(ValueError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class MultiPoly:
    """Element of Q[l1..lr][L, 1/L]; immutable by convention."""

    __slots__ = ("r", "terms", "_hash")

    def __init__(self, r: int, terms: Mapping[Key, object] | None = None):
        if r < 0:
            raise PolyError("dimension must be non-negative")
        self.r = r
        clean = {}
        if terms:
            for key, c in terms.items():
                key = tuple(key)
                if len(key) != r + 1:
                    raise PolyError(f"exponent key {key} does not match r={r}")
                if any(e < 0 for e in key[:r]):
                    raise PolyError(f"negative l-exponent in {key}")
                c = _frac(c)
                if c:
                    clean[key] = clean.get(key, 0) + c
                    if not clean[key]:
                        del clean[key]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, r: int, terms: dict) -> MultiPoly:
        # terms already canonical: tuple keys, nonzero Fractions
        p = object.__new__(cls)
        p.r = r
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, r: int) -> MultiPoly:
        return cls._raw(r, {})

    @classmethod
    def const(cls, r: int, c) -> MultiPoly:
        c = _frac(c)
        return cls._raw(r, {(0,) * (r + 1): c} if c else {})

    @classmethod
    def one(cls, r: int) -> MultiPoly:
        return cls.const(r, 1)

    @classmethod
    def var(cls, r: int, j: int) -> MultiPoly:
        """The variable l_j (1-based)."""
        if not 1 <= j <= r:
            raise PolyError(f"variable index {j} out of range 1..{r}")
        key = [0] * (r + 1)
        key[j - 1] = 1
        return cls._raw(r, {tuple(key): Fraction(1)})

    @classmethod
    def lam(cls, r: int, power: int = 1) -> MultiPoly:
        return cls._raw(r, {(0,) * r + (power,): Fraction(1)})

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * (self.r + 1), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(k) for k in self.terms)

    def lambda_exponents(self) -> set:
        return {k[-1] for k in self.terms}

    def is_lambda_polynomial(self) -> bool:
        return all(k[-1] >= 0 for k in self.terms)

    def with_r(self, r: int) -> MultiPoly:
        """Embed into a ring with more l-variables (new ones absent)."""
        if r < self.r:
            if any(any(k[r:self.r]) for k in self.terms):
                raise PolyError("cannot drop variables that occur")
            return MultiPoly._raw(r, {k[:r] + (k[-1],): c for k, c in self.terms.items()})
        pad = (0,) * (r - self.r)
        return MultiPoly._raw(r, {k[:-1] + pad + (k[-1],): c for k, c in self.terms.items()})

    # ring arithmetic

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.r != self.r:
                raise PolyError(f"dimension mismatch: r={self.r} vs r={other.r}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return MultiPoly.const(self.r, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return MultiPoly._raw(self.r, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            c = _frac(other)
            if not c:
                return MultiPoly.zero(self.r)
            return MultiPoly._raw(self.r, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return MultiPoly._raw(self.r, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return self * (1 / _frac(other))
        if isinstance(other, MultiPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, e: int) -> MultiPoly:
        if e < 0:
            return self.inverse() ** (-e)
        result = MultiPoly.one(self.r)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_unit(self) -> bool:
        """Units are c*L^e with c != 0 (no l-variables)."""
        if len(self.terms) != 1:
            return False
        (k,) = self.terms
        return not any(k[:-1])

    def inverse(self) -> MultiPoly:
        if not self.is_unit():
            raise PolyError("non-unit constant term")
        ((k, c),) = self.terms.items()
        return MultiPoly._raw(self.r, {k[:-1] + (-k[-1],): 1 / c})

    def shift_lambda(self, e: int) -> MultiPoly:
        """Multiply by L**e."""
        if not e:
            return self
        return MultiPoly._raw(self.r, {k[:-1] + (k[-1] + e,): c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.r == other.r and self.terms == other.terms
        if isinstance(other, (int, Fraction, Rational)):
            return self.terms == MultiPoly.const(self.r, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitutions

    def d_l(self, j: int, order: int = 1) -> MultiPoly:
        """Partial derivative of the given order with respect to l_j."""
        if not 1 <= j <= self.r:
            raise PolyError(f"variable index {j} out of range 1..{self.r}")
        if order < 0:
            raise PolyError("derivative order must be non-negative")
        i = j - 1
        out = {}
        for k, c in self.terms.items():
            e = k[i]
            if e < order:
                continue
            f = c
            for t in range(order):
                f *= e - t
            nk = k[:i] + (e - order,) + k[i + 1:]
            out[nk] = out.get(nk, 0) + f
        return MultiPoly._raw(self.r, {k: c for k, c in out.items() if c})

    def scale_vars(self, c, weights: Sequence[int]) -> MultiPoly:
        """Substitute l_j -> c**w_j * l_j."""
        if len(weights) != self.r:
            raise PolyError(f"expected {self.r} weights, got {len(weights)}")
        c = _frac(c)
        out = {}
        for k, v in self.terms.items():
            w = sum(e * wj for e, wj in zip(k, weights))
            out[k] = v * c ** w
        return MultiPoly._raw(self.r, {k: v for k, v in out.items() if v})

    def subst_lambda(self, v) -> MultiPoly:
        """Set L = v; the result is L-free."""
        v = _frac(v)
        if not v and any(k[-1] < 0 for k in self.terms):
            raise PolyError("pole at lambda=0")
        out: dict = {}
        for k, c in self.terms.items():
            nk = k[:-1] + (0,)
            out[nk] = out.get(nk, 0) + c * v ** k[-1]
        return MultiPoly._raw(self.r, {k: c for k, c in out.items() if c})

    def evaluate(self, ls: Sequence, lam) -> Fraction:
        """Exact evaluation at rational points."""
        if len(ls) != self.r:
            raise PolyError(f"expected {self.r} values, got {len(ls)}")
        ls = [_frac(x) for x in ls]
        lam = _frac(lam)
        total = Fraction(0)
        for k, c in self.terms.items():
            t = c
            for x, e in zip(ls, k[:-1]):
                t *= x ** e
            t *= lam ** k[-1]
            total += t
        return total

    def eval_numeric(self, ls: Sequence, kappa, precision: int = 30) -> mpmath.mpf:
        """Evaluate with kappa realized numerically, L = log(1+kappa)/kappa.

        ``ls`` and ``kappa`` may be ints, Fractions or decimal strings; kappa = 0
        uses the limit L = 1.
        """
        if len(ls) != self.r:
            raise PolyError(f"expected {self.r} values, got {len(ls)}")
        with mpmath.workdps(precision + 10):
            kap = to_mpf(kappa)
            if kap <= -1:
                raise PolyError("kappa must exceed -1")
            lam = mpmath.mpf(1) if kap == 0 else mpmath.log1p(kap) / kap
            xs = [to_mpf(x) for x in ls]
            total = mpmath.mpf(0)
            for k, c in self.terms.items():
                t = mpmath.mpf(c.numerator) / c.denominator
                for x, e in zip(xs, k[:-1]):
                    t *= x ** e
                t *= lam ** k[-1]
                total += t
            return +total

    # rendering

    def sorted_terms(self) -> list:
        # highest total l-degree first, then lexicographic exponents, then L
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0][:-1]), kv[0][:-1], kv[0][-1]),
            reverse=True,
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self.sorted_terms()):
            factors = []
            if k[-1]:
                factors.append(LAMBDA_SYMBOL if k[-1] == 1 else f"{LAMBDA_SYMBOL}^{k[-1]}")
            for j, e in enumerate(k[:-1], start=1):
                if e:
                    factors.append(f"l{j}" if e == 1 else f"l{j}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self.sorted_terms()):
            factors = []
            if k[-1]:
                factors.append(r"\lambda" if k[-1] == 1 else rf"\lambda^{{{k[-1]}}}")
            for j, e in enumerate(k[:-1], start=1):
                if e:
                    factors.append(f"l_{{{j}}}" if e == 1 else f"l_{{{j}}}^{{{e}}}")
            mag = abs(c)
            if mag.denominator == 1:
                num = str(mag.numerator)
            else:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if not factors:
                body = num
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = num + " " + " ".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append(("-" if c < 0 else "") + body if i == 0 else f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly(r={self.r}, {self.to_text()!r})"


def to_mpf(x) -> mpmath.mpf:
    if isinstance(x, mpmath.mpf):
        return x
    if isinstance(x, str):
        try:
            x = Fraction(x)
        except ValueError:
            return mpmath.mpf(x)
    if isinstance(x, (int, Fraction, Rational)):
        x = Fraction(x)
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


_FACTOR = re.compile(r"^(L|l(\d+))(?:\^(-?\d+))?$")


def parse_poly(text: str, r: int) -> MultiPoly:
    """Parse the canonical text form produced by :meth:`MultiPoly.to_text`."""
    s = text.strip()
    if not s:
        raise PolyError("empty polynomial text")
    # split on binary +/- surrounded by spaces; a leading '-' belongs to the term
    chunks = re.split(r"\s+([+-])\s+", s)
    signs = ["+"] + chunks[1::2]
    bodies = chunks[0::2]
    terms: dict = {}
    for sign, body in zip(signs, bodies):
        neg = sign == "-"
        body = body.strip()
        if body.startswith("-"):
            neg = not neg
            body = body[1:]
        coeff = Fraction(1)
        key = [0] * (r + 1)
        for factor in body.split("*"):
            factor = factor.strip()
            m = _FACTOR.match(factor)
            if m:
                e = int(m.group(3)) if m.group(3) else 1
                if m.group(1) == LAMBDA_SYMBOL:
                    key[-1] += e
                else:
                    j = int(m.group(2))
                    if not 1 <= j <= r:
                        raise PolyError(f"variable l{j} out of range for r={r}")
                    key[j - 1] += e
            else:
                try:
                    coeff *= Fraction(factor)
                except ValueError:
                    raise PolyError(f"cannot parse factor {factor!r}") from None
        k = tuple(key)
        terms[k] = terms.get(k, 0) + (-coeff if neg else coeff)
    return MultiPoly(r, terms)


def poly_sum(polys: Iterable[MultiPoly], r: int) -> MultiPoly:
    total = MultiPoly.zero(r)
    for p in polys:
        total = total + p
    return total
