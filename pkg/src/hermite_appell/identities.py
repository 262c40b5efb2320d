"""Symmetric identities in the scaling integers I and S.

Each checker evaluates both sides exactly and returns an :class:`IdentityReport`;
a false identity is a report with ``passed = False``, never an exception.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import series as S_
from .appell import get_family
from .dmhap import generate
from .poly import MultiPoly
from .series import TruncSeries

IDENTITY_IDS = (
    "scaling_3_1",
    "convolution_3_2",
    "hermite_scaling_3_3",
    "bernoulli_convolution_3_4",
    "gf_two_route",
)

P_INTERPRETATIONS = ("sigma",)

_SUBTRACT_ONE_NOTE = (
    "numerator read as ((1+kappa)^(I*S*xi/kappa) - 1); "
    "the exponent-minus-one reading admits no power-sum expansion"
)


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    family: str
    r: int
    n: int
    I: int
    S: int
    lhs: MultiPoly
    rhs: MultiPoly
    residual: MultiPoly
    passed: bool
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "family": self.family,
            "r": self.r,
            "n": self.n,
            "I": self.I,
            "S": self.S,
            "pass": self.passed,
            "residual_text": self.residual.to_text(),
            "notes": self.notes,
        }


@dataclass(frozen=True)
class DegenBernoulli:
    values: tuple

    def __getitem__(self, m: int) -> MultiPoly:
        return self.values[m]


@dataclass(frozen=True)
class PowerSumSigma:
    n: int
    c: int
    value: MultiPoly


def degen_bernoulli(N: int, r: int = 0) -> DegenBernoulli:
    """Coefficients of t/((1+kappa)^(t/kappa) - 1) = t/(e^(L t) - 1).

    Inverts ((1+kappa)^(t/kappa) - 1)/t = sum L^(k+1) t^k/(k+1)!, whose constant
    term L is a unit of the Laurent ring; the m-th value is B_m L^(m-1).
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    den = TruncSeries(
        [MultiPoly.lam(r, k + 1) * Fraction(1, math.factorial(k + 1)) for k in range(N + 1)]
    )
    b = S_.inv(den)
    return DegenBernoulli(tuple(S_.extract(b, m) for m in range(N + 1)))


def power_sum_sigma(n: int, c: int, r: int = 0) -> PowerSumSigma:
    """L^n * sum_{j=0}^{c} j^n, with 0^0 = 1."""
    if n < 0 or c < 0:
        raise ValueError("n and c must be non-negative")
    total = sum(j ** n for j in range(c + 1))
    return PowerSumSigma(n, c, MultiPoly.lam(r, n) * total)


def sigma_by_quotient(c: int, N: int, r: int = 0) -> list:
    """sigma_0..sigma_N(c) from ((1+kappa)^((c+1)t/kappa) - 1)/((1+kappa)^(t/kappa) - 1)."""
    num = TruncSeries(
        [MultiPoly.lam(r, k + 1) * Fraction((c + 1) ** (k + 1), math.factorial(k + 1)) for k in range(N + 1)]
    )
    den = TruncSeries(
        [MultiPoly.lam(r, k + 1) * Fraction(1, math.factorial(k + 1)) for k in range(N + 1)]
    )
    q = S_.mul(num, S_.inv(den))
    return [S_.extract(q, n) for n in range(N + 1)]


def _check_scalings(I: int, S: int) -> None:
    if I < 1 or S < 1:
        raise ValueError("I and S must be positive")
    if I == S:
        raise ValueError("I and S must differ")


def _scaled_entries(family, r: int, n: int, c: int) -> list:
    table = generate(family, r, n)
    weights = list(range(1, r + 1))
    return [p.scale_vars(c, weights) for p in table]


def _family_note(fam_name: str, passed: bool) -> str:
    if passed or fam_name == "identity":
        return ""
    return "holds only for the identity family: A(I xi) and A(S xi) differ"


def _report(identity_id, fam, r, n, I, S, lhs, rhs, notes="") -> IdentityReport:
    res = lhs - rhs
    passed = res.is_zero()
    extra = _family_note(fam.name, passed)
    notes = "; ".join(x for x in (notes, extra) if x)
    return IdentityReport(identity_id, fam.name, r, n, I, S, lhs, rhs, res, passed, notes)


def check_scaling(family, r: int, n: int, I: int, S: int, identity_id: str = "scaling_3_1") -> IdentityReport:
    """I^n H_n(S l1, S^2 l2, ...) against S^n H_n(I l1, I^2 l2, ...)."""
    _check_scalings(I, S)
    fam = get_family(family)
    lhs = _scaled_entries(fam, r, n, S)[n] * I ** n
    rhs = _scaled_entries(fam, r, n, I)[n] * S ** n
    return _report(identity_id, fam, r, n, I, S, lhs, rhs)


def check_hermite_scaling(family, r: int, n: int, I: int, S: int) -> IdentityReport:
    """The kappa-suppressed restatement; same polynomial check as :func:`check_scaling`."""
    return check_scaling(family, r, n, I, S, identity_id="hermite_scaling_3_3")


def _triple_sum(entries: list, weights, n: int, outer: int, inner: int, sigma_cap: int, r: int) -> MultiPoly:
    # sum_k sum_m C(n,k) C(k,m) outer^k inner^(n+1-k) w_m H_{k-m} sigma_{n-k}(cap)
    total = MultiPoly.zero(r)
    for k in range(n + 1):
        sig = power_sum_sigma(n - k, sigma_cap, r).value
        inner_sum = MultiPoly.zero(r)
        for m in range(k + 1):
            w = weights(m)
            if w is None or not w:
                continue
            inner_sum = inner_sum + entries[k - m] * w * math.comb(k, m)
        if inner_sum:
            total = total + inner_sum * sig * (math.comb(n, k) * outer ** k * inner ** (n + 1 - k))
    return total


def check_convolution_3_4(family, r: int, n: int, I: int, S: int) -> IdentityReport:
    """Bernoulli-weighted triple-sum identity with power sums sigma_{n-k}(I-1)."""
    _check_scalings(I, S)
    fam = get_family(family)
    bern = degen_bernoulli(n, r)
    by_S = _scaled_entries(fam, r, n, S)
    by_I = _scaled_entries(fam, r, n, I)
    lhs = _triple_sum(by_S, lambda m: bern[m], n, I, S, I - 1, r)
    rhs = _triple_sum(by_I, lambda m: bern[m], n, S, I, S - 1, r)
    note = _SUBTRACT_ONE_NOTE + "; Bernoulli factor indexed by the inner summation index m"
    return _report("bernoulli_convolution_3_4", fam, r, n, I, S, lhs, rhs, note)


def check_convolution_3_2(family, r: int, n: int, I: int, S: int, p_interpretation: str = "sigma") -> IdentityReport:
    """Triple-sum identity without the Bernoulli factor; P_{n-k} is read per ``p_interpretation``."""
    if p_interpretation not in P_INTERPRETATIONS:
        raise ValueError(
            f"unknown interpretation {p_interpretation!r}; expected one of {P_INTERPRETATIONS}"
        )
    _check_scalings(I, S)
    fam = get_family(family)
    one = MultiPoly.one(r)
    by_S = _scaled_entries(fam, r, n, S)
    by_I = _scaled_entries(fam, r, n, I)
    lhs = _triple_sum(by_S, lambda m: one, n, I, S, I - 1, r)
    rhs = _triple_sum(by_I, lambda m: one, n, S, I, S - 1, r)
    note = f"P interpreted as {p_interpretation}; evaluated as written"
    return _report("convolution_3_2", fam, r, n, I, S, lhs, rhs, note)


def _route(fam, r: int, N: int, outer: int, inner: int) -> TruncSeries:
    # inner * B(outer xi) * H(inner-scaled)(outer xi) * sigma(outer-1)(inner xi)
    bern = degen_bernoulli(N, r)
    b = TruncSeries([bern[m] * Fraction(1, math.factorial(m)) for m in range(N + 1)])
    h = TruncSeries(
        [p * Fraction(1, math.factorial(k)) for k, p in enumerate(_scaled_entries(fam, r, N, inner))]
    )
    sig = TruncSeries(
        [power_sum_sigma(k, outer - 1, r).value * Fraction(1, math.factorial(k)) for k in range(N + 1)]
    )
    prod = S_.mul(S_.mul(S_.scale_arg(b, outer), S_.scale_arg(h, outer)), S_.scale_arg(sig, inner))
    return prod * inner


def gf_two_route(family, r: int, N: int, I: int, S: int) -> IdentityReport:
    """Expand both factorizations of the symmetric generating function and compare through xi^N.

    Reports the lowest degree where the routes differ (or degree N when they agree).
    """
    _check_scalings(I, S)
    fam = get_family(family)
    one = _route(fam, r, N, I, S)
    two = _route(fam, r, N, S, I)
    lhs_list = [S_.extract(one, n) for n in range(N + 1)]
    rhs_list = [S_.extract(two, n) for n in range(N + 1)]
    at = N
    for n in range(N + 1):
        if lhs_list[n] != rhs_list[n]:
            at = n
            break
    note = _SUBTRACT_ONE_NOTE
    if lhs_list[at] != rhs_list[at]:
        note += f"; first mismatch at degree {at}"
    return _report("gf_two_route", fam, r, at, I, S, lhs_list[at], rhs_list[at], note)


CHECKERS = {
    "scaling_3_1": check_scaling,
    "hermite_scaling_3_3": check_hermite_scaling,
    "bernoulli_convolution_3_4": check_convolution_3_4,
    "convolution_3_2": check_convolution_3_2,
    "gf_two_route": gf_two_route,
}
