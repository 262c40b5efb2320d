from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermite_appell import series as S
from hermite_appell.poly import MultiPoly
from hermite_appell.series import SeriesError, TruncationError, TruncSeries

from strategies import poly_series, rational_series, small_fractions


def e(order, c=1):
    return S.exp_series(order, c)


def test_make():
    assert S.make([1]).order == 0
    assert S.make([0, 1]).coeffs == (0, 1)
    assert S.make([1, 1, F(1, 2)]) == e(2)
    with pytest.raises(SeriesError):
        S.make([])


def test_add():
    assert S.make([1, 1]) + S.make([0, 1]) == S.make([1, 2])
    f = e(3)
    assert f + S.constant(0, 3) == f
    assert e(2) + (-e(2)) == S.constant(0, 2)


def test_add_truncates_to_min_order():
    assert (e(5) + e(2)).order == 2
    assert S.mul(e(5), e(3)).order == 3


def test_mul():
    assert S.mul(S.make([1, 1, 0]), S.make([1, -1, 0])) == S.make([1, 0, -1])
    assert S.mul(e(3), e(3, -1)) == S.constant(1, 3)


def test_mul_bernoulli_pair():
    # hand expansion: x/(e^x-1) = 1 - x/2 + x^2/12, (e^x-1)/x = 1 + x/2 + x^2/6
    a = S.make([1, F(-1, 2), F(1, 12)])
    b = S.make([1, F(1, 2), F(1, 6)])
    # convolution: c1 = 1/2 - 1/2, c2 = 1/6 - 1/4 + 1/12
    assert S.mul(a, b) == S.constant(1, 2)


def test_inv():
    assert S.inv(S.make([1, -1, 0, 0])) == S.make([1, 1, 1, 1])
    assert S.inv(S.make([1])) == S.make([1])
    expm1_x = S.make([1, F(1, 2), F(1, 6)])
    assert S.inv(expm1_x) == S.make([1, F(-1, 2), F(1, 12)])


def test_inv_non_unit():
    with pytest.raises(SeriesError, match="non-unit"):
        S.inv(S.make([0, 1]))
    l1 = MultiPoly.var(1, 1)
    with pytest.raises(SeriesError, match="non-unit"):
        S.inv(TruncSeries([l1, l1]))


def test_inv_laurent_unit():
    lam = MultiPoly.lam(0)
    s = TruncSeries([lam, lam * lam])
    assert S.mul(s, S.inv(s)) == TruncSeries([MultiPoly.one(0), MultiPoly.zero(0)])


def test_exp():
    assert S.exp(S.make([0, 1, 0, 0])) == S.make([1, 1, F(1, 2), F(1, 6)])
    assert S.exp(S.make([0])) == S.make([1])
    with pytest.raises(SeriesError, match="nonzero constant"):
        S.exp(S.make([1, 1]))


def test_exp_polynomial_argument():
    r = 2
    lam = MultiPoly.lam(r)
    l1, l2 = MultiPoly.var(r, 1), MultiPoly.var(r, 2)
    g = S.exp(TruncSeries([MultiPoly.zero(r), lam * l1, lam * l2]))
    # (a x + b x^2) + (a x)^2/2 at x^2, times 2!
    assert S.extract(g, 2) == lam * lam * l1 * l1 + lam * l2 * 2


def test_scale_arg():
    assert S.scale_arg(S.make([1, 1, 1]), 2) == S.make([1, 2, 4])
    f = e(4)
    assert S.scale_arg(f, 1) == f
    assert S.mul(S.scale_arg(e(2), 3), S.scale_arg(e(2), 5)) == e(2, 8)


def test_extract():
    assert S.extract(e(5), 3) == 1
    assert S.extract(S.make([1]), 0) == 1
    with pytest.raises(TruncationError):
        S.extract(e(2), 3)


def test_derivative_and_shift():
    assert S.derivative(e(3)) == e(2)
    assert S.shift(S.make([1, 2, 3]), 1) == S.make([0, 1, 2])


@given(rational_series(), rational_series(), rational_series())
def test_ring_laws_rational(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert S.mul(a, b) == S.mul(b, a)
    assert S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))
    assert S.mul(a, b + c) == S.mul(a, b) + S.mul(a, c)


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(*[poly_series(2, n) for _ in range(3)])))
def test_ring_laws_poly(abc):
    a, b, c = abc
    assert S.mul(a, b) == S.mul(b, a)
    assert S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))
    assert S.mul(a, b + c) == S.mul(a, b) + S.mul(a, c)


@given(rational_series(unit=True))
def test_inverse_rational(a):
    assert S.mul(a, S.inv(a)) == S.constant(1, a.order)


@given(st.integers(0, 5).flatmap(lambda n: poly_series(2, n, unit=True)))
def test_inverse_poly(a):
    one = TruncSeries([MultiPoly.one(2)] + [MultiPoly.zero(2)] * a.order)
    assert S.mul(a, S.inv(a)) == one


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(rational_series(n), rational_series(n))))
def test_exp_additive_rational(ab):
    a, b = (TruncSeries([0] + list(x.coeffs[1:])) for x in ab)
    assert S.mul(S.exp(a), S.exp(b)) == S.exp(a + b)


@given(st.integers(0, 4).flatmap(
    lambda n: st.tuples(poly_series(2, n, zero_constant=True), poly_series(2, n, zero_constant=True))))
def test_exp_additive_poly(ab):
    a, b = ab
    assert S.mul(S.exp(a), S.exp(b)) == S.exp(a + b)


@given(small_fractions, st.integers(0, 12))
def test_extract_exponential(c, n):
    assert S.extract(e(n, c), n) == c ** n
