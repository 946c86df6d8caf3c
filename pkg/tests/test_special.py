from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from bracketmoments.errors import Divergent, InvalidParam, NonTerminating, UncancelledPole
from bracketmoments.exactnum import EpsLaurent, binomial, pochhammer
from bracketmoments.special import (
    HypSeriesSpec,
    PolynomialR,
    chebyshev_discrete,
    eval_terminating_pfq,
    gauss_2f1_unit,
    hahn,
    laguerre,
    laguerre_square_expand,
    laguerre_square_rhs,
)

small = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def pfq(top, bottom, z):
    return eval_terminating_pfq(HypSeriesSpec(top, bottom, z)).finite_value()


def test_pfq_examples():
    assert pfq([-2, 3], [3], 2) == 1
    assert pfq([0, 7], [5], 3) == 1
    assert pfq([3, -1, 4], [2, 2], 1) == -2


def test_pfq_nonterminating():
    with pytest.raises(NonTerminating):
        pfq([1, 2], [3], 1)


def test_regulated_top_does_not_terminate():
    spec = HypSeriesSpec([EpsLaurent.shifted(-1, 1), 1], [1], 1)
    assert not spec.terminates


def test_bottom_pole_is_carried():
    # 2F1(-2, 1; -1+eps; 1): the j=2 term has a simple pole
    spec = HypSeriesSpec([-2, 1], [EpsLaurent.shifted(-1, 1, 4)], 1, 4)
    v = eval_terminating_pfq(spec)
    assert v.pole_order() == 1
    with pytest.raises(UncancelledPole):
        pfq([-2, 1], [-1], 1)


@given(st.integers(0, 6), small)
def test_binomial_theorem(m, x):
    b = F(3, 7)
    assert pfq([-m, b], [b], x) == (1 - x) ** m


def test_gauss_examples():
    assert gauss_2f1_unit(-1, 1, 2) == F(1, 2)
    assert gauss_2f1_unit(0, 5, 3) == 1
    assert gauss_2f1_unit(-2, 4, 3) == pfq([-2, 4], [3], 1)
    assert gauss_2f1_unit(F(1, 2), 1, 4) == F(6, 5)  # Gamma(4)Gamma(5/2)/(Gamma(7/2)Gamma(3))
    with pytest.raises(Divergent):
        gauss_2f1_unit(F(1, 2), 1, F(3, 2))


@pytest.mark.parametrize("a", range(0, 5))
@pytest.mark.parametrize("b", range(1, 5))
@pytest.mark.parametrize("c", range(1, 7))
def test_gauss_agrees_with_sum(a, b, c):
    if c + a - b > 0:
        assert gauss_2f1_unit(-a, b, c) == pfq([-a, b], [c], 1)


def test_laguerre_examples():
    assert laguerre(0, F(3, 2)) == PolynomialR([1])
    assert laguerre(1, 1) == PolynomialR([2, -1])
    assert laguerre(2, 2) == PolynomialR([6, -4, F(1, 2)])
    with pytest.raises(InvalidParam):
        laguerre(1, -3)


@pytest.mark.parametrize("alpha", [0, 1, 2, F(5, 2)])
def test_laguerre_recurrence(alpha):
    x = PolynomialR([0, 1])
    for m in range(1, 6):
        lhs = laguerre(m + 1, alpha) * (m + 1)
        rhs = (PolynomialR([2 * m + alpha + 1]) - x) * laguerre(m, alpha) - laguerre(m - 1, alpha) * (m + alpha)
        assert lhs == rhs


def test_square_expand_examples():
    assert laguerre_square_expand(0, 4) == [(0, 1)]
    assert laguerre_square_expand(1, 1) == [(0, 1), (1, F(1, 2))]


@pytest.mark.parametrize("m", range(6))
@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_square_expand_is_the_square(m, alpha):
    assert laguerre_square_rhs(m, alpha) == laguerre(m, alpha) * laguerre(m, alpha)


def test_hahn_examples():
    assert hahn(0, 2, 3, F(1, 2), 4) == 1
    assert hahn(2, 0, 0, 0, -1) == 6
    assert chebyshev_discrete(0, 5, 9) == 1
    assert chebyshev_discrete(2, 0, -1) == 6


def test_chebyshev_against_3f2_identity():
    # t_k(n-l-1, -2l-1) = Gamma(2l+k+2)/Gamma(2l+2) * 3F2(-k, k+1, -n+l+1; 1, 2l+2; 1)
    for n in range(1, 5):
        for l in range(n):
            for k in range(5):
                rhs = pochhammer(2 * l + 2, k) * pfq([-k, k + 1, -n + l + 1], [1, 2 * l + 2], 1)
                assert chebyshev_discrete(k, n - l - 1, -2 * l - 1) == rhs


def test_chebyshev_explicit_sum():
    # (-1)^m m! sum_j (-1)^j C(N-1-j, m-j) C(m+j, j) C(x, j) for positive integer N;
    # the sign matches the (1-N)_m normalization used here
    for N in range(1, 6):
        for m in range(N):
            for x in range(N):
                ref = sum((-1) ** j * binomial(N - 1 - j, m - j) * binomial(m + j, j) * binomial(x, j)
                          for j in range(m + 1)) * pochhammer(1, m) * (-1) ** m
                assert chebyshev_discrete(m, x, N) == ref


@given(st.lists(small, max_size=4), st.lists(small, max_size=4), small)
def test_polynomial_ring(a, b, x):
    p, q = PolynomialR(a), PolynomialR(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert p.scale_arg(2)(x) == p(2 * x)
