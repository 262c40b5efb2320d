"""Appell determining functions A(xi) and their numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import series as S
from .poly import MultiPoly
from .series import TruncSeries

FAMILY_NAMES = ("identity", "bernoulli", "euler", "genocchi", "custom")


class OperatorUnsupportedError(ValueError):
    """Raised for monomiality operators on a family with A(0) = 0."""


@dataclass(frozen=True)
class AppellFamily:
    name: str
    series_fn: Callable[[int], TruncSeries] = field(repr=False, compare=False)
    a0: Fraction
    # the Appell numbers a custom family was built from, for identity checks
    numbers: tuple = ()

    @property
    def supports_operators(self) -> bool:
        return self.a0 != 0


# e^xi - 1 = xi * sum xi^k/(k+1)!, so (e^xi - 1)/xi has coefficients 1/(k+1)!
def _expm1_over_x(order: int) -> TruncSeries:
    return S.from_function(lambda k: Fraction(1, math.factorial(k + 1)), order)


@lru_cache(maxsize=None)
def _bernoulli(order: int) -> TruncSeries:
    return S.inv(_expm1_over_x(order))


@lru_cache(maxsize=None)
def _euler(order: int) -> TruncSeries:
    # 2/(e^xi + 1)
    return S.inv(S.exp_series(order) + S.constant(1, order)) * 2


@lru_cache(maxsize=None)
def _genocchi(order: int) -> TruncSeries:
    # 2 xi/(e^xi + 1)
    return S.shift(_euler(order), 1)


def _identity(order: int) -> TruncSeries:
    return S.constant(1, order)


IDENTITY = AppellFamily("identity", _identity, Fraction(1))
BERNOULLI = AppellFamily("bernoulli", _bernoulli, Fraction(1))
EULER = AppellFamily("euler", _euler, Fraction(1))
GENOCCHI = AppellFamily("genocchi", _genocchi, Fraction(0))

BUILTINS = {f.name: f for f in (IDENTITY, BERNOULLI, EULER, GENOCCHI)}


def custom(numbers: Sequence, name: str = "custom") -> AppellFamily:
    """Family from explicit Appell numbers [A_0, ..., A_M].

    The series is A(xi) = sum A_k xi^k/k!, zero beyond the given numbers.
    """
    nums = tuple(Fraction(x) for x in numbers)
    if not nums:
        raise ValueError("custom family needs at least A_0")

    def series_fn(order: int) -> TruncSeries:
        return S.from_function(
            lambda k: nums[k] / math.factorial(k) if k < len(nums) else Fraction(0), order
        )

    return AppellFamily(name, series_fn, nums[0], nums)


def get_family(name, numbers: Sequence | None = None) -> AppellFamily:
    if isinstance(name, AppellFamily):
        return name
    key = str(name).lower()
    if key == "custom":
        if numbers is None:
            raise ValueError("custom family requires a list of Appell numbers")
        return custom(numbers)
    try:
        return BUILTINS[key]
    except KeyError:
        raise ValueError(
            f"unknown Appell family {name!r}; expected one of {', '.join(FAMILY_NAMES)}"
        ) from None


def family_series(family, order: int) -> TruncSeries:
    if order < 0:
        raise ValueError("order must be non-negative")
    return get_family(family).series_fn(order)


def appell_numbers(family, order: int) -> list:
    """The numbers A_k = k! [xi^k] A(xi) for k = 0..order."""
    s = family_series(family, order)
    return [S.extract(s, k) for k in range(order + 1)]


def euler_numbers(order: int) -> list:
    """Integer Euler numbers from 2e^xi/(e^{2xi}+1), i.e. 2^k E_k(1/2)."""
    num = S.exp_series(order) * 2
    den = S.exp_series(order, 2) + S.constant(1, order)
    s = S.mul(num, S.inv(den))
    return [S.extract(s, k) for k in range(order + 1)]


def log_derivative(family, order: int) -> TruncSeries:
    """A'(xi)/A(xi) to the given order."""
    fam = get_family(family)
    if not fam.supports_operators:
        raise OperatorUnsupportedError(
            "A(0)=0: log-derivative has a pole; operators unsupported"
        )
    a = family_series(fam, order + 1)
    return S.mul(S.derivative(a), S.inv(a.truncate(order)))


def classical_appell_poly(family, n: int) -> MultiPoly:
    """The classical A_n(l1) = sum_k C(n,k) A_k l1^(n-k), with no slope symbol."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    nums = appell_numbers(family, n)
    terms = {(n - k, 0): math.comb(n, k) * a for k, a in enumerate(nums) if a}
    return MultiPoly(1, terms)
