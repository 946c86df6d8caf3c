"""Brute-force ground truth: expand the integrand, integrate term by term.

Nothing here uses the Laguerre square identity, a hypergeometric summation
or a bracket rule.  The Laguerre polynomial is squared by coefficient
convolution and each monomial against ``e^{-t}`` integrates to a gamma
value: an exact factorial for integer exponents, ``math.gamma`` otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidParam, NonIntegrable
from .exactnum import as_rational, is_integer
from .special import PolynomialR, laguerre

Number = Union[Fraction, float]

__all__ = ["ExpPolyIntegrand", "integrate_exp_poly", "oracle_moment", "oracle_g"]


@dataclass(frozen=True)
class ExpPolyIntegrand:
    """``t^power_offset * poly(t) * e^{-t}`` on ``(0, inf)``."""

    poly: PolynomialR
    power_offset: Number = Fraction(0)

    def exponents(self):
        return [(m + self.power_offset, c) for m, c in enumerate(self.poly.coeffs) if c]


def integrate_exp_poly(ig: ExpPolyIntegrand) -> Number:
    """``sum_m c_m Gamma(m + offset + 1)``; exact when the offset is an integer."""
    off = ig.power_offset
    exact = not isinstance(off, float) and is_integer(off)
    total: Number = Fraction(0) if exact else 0.0
    for e, c in ig.exponents():
        if e <= -1:
            raise NonIntegrable(f"t^{e} is not integrable at 0")
        if exact:
            total += c * math.factorial(int(e))
        else:
            total += float(c) * math.gamma(float(e) + 1.0)
    return total


def _exact_k(k) -> bool:
    return not isinstance(k, float) and is_integer(k)


def _scale_power(base: Fraction, e, exact: bool) -> Number:
    if exact:
        return base ** int(e)
    return float(base) ** float(e)


def oracle_moment(n, l: int | None = None, k=None, mu=None) -> Number:
    """``<r^k>_{n l}`` by direct integration of the squared radial function.

    Takes ``(n, l, k, mu)`` or a single query object with those attributes.
    """
    if l is None:
        n, l, k, mu = n.n, n.l, n.k, n.mu
    if not (n >= 1 and 0 <= l <= n - 1):
        raise InvalidParam("quantum numbers must satisfy 0 <= l <= n-1")
    exact = _exact_k(k) and not isinstance(mu, float)
    if exact:
        k, mu = as_rational(k), as_rational(mu)
    if 2 * l + k + 3 <= 0:
        raise InvalidParam("2l+k+3 > 0 violated")
    lag = laguerre(n - l - 1, 2 * l + 1)
    square = lag * lag
    # A^2 with t = 2 mu r:  <r^k> = A^2 (2mu)^{-k-3} int t^{2l+k+2} e^{-t} L(t)^2 dt
    norm = Fraction(math.factorial(n - l - 1), 2 * n * math.factorial(n + l))
    if exact:
        integral = integrate_exp_poly(ExpPolyIntegrand(square, Fraction(2 * l + 2) + k))
        return norm * integral / (2 * mu) ** int(k)
    integral = integrate_exp_poly(ExpPolyIntegrand(square, float(2 * l + 2 + float(k))))
    return float(norm) * integral / (2.0 * float(mu)) ** float(k)


def oracle_g(l: int, k, s: int, mu) -> Number:
    """``int_0^inf r^{2+2l+k} e^{-2 mu r} L_{2s}^{4l+2}(4 mu r) dr`` term by term."""
    exact = _exact_k(k) and not isinstance(mu, float)
    if exact:
        k, mu = as_rational(k), as_rational(mu)
    if 2 * l + k + 3 <= 0:
        raise InvalidParam("2l+k+3 > 0 violated")
    poly = laguerre(2 * s, 4 * l + 2).scale_arg(2)
    if exact:
        integral = integrate_exp_poly(ExpPolyIntegrand(poly, Fraction(2 + 2 * l) + k))
        return integral / (2 * mu) ** int(3 + 2 * l + k)
    integral = integrate_exp_poly(ExpPolyIntegrand(poly, float(2 + 2 * l + float(k))))
    return integral / (2.0 * float(mu)) ** (3.0 + 2 * l + float(k))
