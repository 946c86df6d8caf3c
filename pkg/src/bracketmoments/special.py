"""Terminating hypergeometric series, Laguerre and Hahn polynomials.

Every series is summed term by term; no transformation formulas are applied
behind the caller's back.  Parameters may be rationals or
:class:`~bracketmoments.exactnum.EpsLaurent` values, which is how callers
carry a regulator through a bottom parameter that passes through zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import DivisionByZero, Divergent, InvalidParam, NonTerminating, UncancelledPole, Unsupported
from .exactnum import (
    DEFAULT_ORDER,
    EpsLaurent,
    as_rational,
    binomial,
    factorial,
    gamma_product,
    is_nonpositive_integer,
    pochhammer,
)

Param = Union[int, Fraction, EpsLaurent]

__all__ = [
    "PolynomialR",
    "HypSeriesSpec",
    "eval_terminating_pfq",
    "pfq_terminating_float",
    "gauss_2f1_unit",
    "gauss_unit_gamma_args",
    "laguerre",
    "laguerre_square_expand",
    "laguerre_square_rhs",
    "hahn",
    "chebyshev_discrete",
]


class PolynomialR:
    """Dense univariate polynomial with rational coefficients (index = power)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if not isinstance(x, float) else float(c))
        return acc

    def __add__(self, other: "PolynomialR") -> "PolynomialR":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolynomialR([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "PolynomialR":
        return PolynomialR([-c for c in self.coeffs])

    def __sub__(self, other: "PolynomialR") -> "PolynomialR":
        return self + (-other)

    def __mul__(self, other) -> "PolynomialR":
        if isinstance(other, PolynomialR):
            if not self.coeffs or not other.coeffs:
                return PolynomialR()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return PolynomialR(out)
        k = as_rational(other)
        return PolynomialR([c * k for c in self.coeffs])

    __rmul__ = __mul__

    def scale_arg(self, factor) -> "PolynomialR":
        """The polynomial ``x -> p(factor * x)``."""
        f = as_rational(factor)
        return PolynomialR([c * f**i for i, c in enumerate(self.coeffs)])

    def __eq__(self, other) -> bool:
        if isinstance(other, PolynomialR):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolynomialR({[str(c) for c in self.coeffs]})"


def _as_param(p: Param, order: int) -> EpsLaurent:
    if isinstance(p, EpsLaurent):
        return p
    return EpsLaurent.constant(as_rational(p), order)


def _terminating_index(p: EpsLaurent) -> int | None:
    c = p.coeffs
    if set(c) <= {0} and is_nonpositive_integer(c.get(0, 0)):
        return -int(c.get(0, 0))
    return None


@dataclass
class HypSeriesSpec:
    """A generalized hypergeometric series ``pFq(top; bottom; argument)``.

    Only top parameters with no regulator dependence can terminate the
    series: ``k + eps`` with integer ``k <= 0`` does not.
    """

    top_params: list
    bottom_params: list
    argument: Fraction
    order: int = DEFAULT_ORDER
    _top: list[EpsLaurent] = field(init=False, repr=False)
    _bottom: list[EpsLaurent] = field(init=False, repr=False)

    def __post_init__(self):
        self.argument = as_rational(self.argument)
        self._top = [_as_param(p, self.order) for p in self.top_params]
        self._bottom = [_as_param(p, self.order) for p in self.bottom_params]

    @property
    def termination_index(self) -> int | None:
        """Last index ``J`` with a possibly nonzero term, or None if the series is infinite."""
        cuts = [j for j in map(_terminating_index, self._top) if j is not None]
        return min(cuts) if cuts else None

    @property
    def terminates(self) -> bool:
        return self.termination_index is not None

    def term(self, j: int) -> EpsLaurent:
        out = EpsLaurent.constant(self.argument**j / math.factorial(j), self.order)
        for t in self._top:
            out = out * pochhammer(t, j)
        for b in self._bottom:
            den = pochhammer(b, j)
            if den.is_zero():
                raise UncancelledPole(f"bottom parameter {b} vanishes before the series terminates")
            out = out / den
        return out


def eval_terminating_pfq(spec: HypSeriesSpec) -> EpsLaurent:
    """Exact finite sum of a terminating series, in Laurent arithmetic."""
    J = spec.termination_index
    if J is None:
        raise NonTerminating("no top parameter is a non-positive integer")
    if all(not p.coeffs.keys() - {0} for p in spec._top + spec._bottom):
        return EpsLaurent.constant(_pfq_rational(spec, J), spec.order)
    total = EpsLaurent({}, spec.order + 2)
    term = EpsLaurent.constant(1, spec.order + 2)
    for j in range(J + 1):
        if j:
            ratio = EpsLaurent.constant(spec.argument / j, term.order)
            for t in spec._top:
                ratio = ratio * (t + (j - 1))
            for b in spec._bottom:
                step = b + (j - 1)
                if step.is_zero():
                    raise UncancelledPole(f"bottom parameter {b} vanishes before the series terminates")
                ratio = ratio / step
            term = term * ratio
        total = total + term
    return total


def _pfq_rational(spec: HypSeriesSpec, J: int) -> Fraction:
    tops = [p.coeff(0) for p in spec._top]
    bots = [p.coeff(0) for p in spec._bottom]
    z = spec.argument
    total, term = Fraction(0), Fraction(1)
    for j in range(J + 1):
        if j:
            num = z
            for t in tops:
                num *= t + j - 1
            den = Fraction(j)
            for b in bots:
                den *= b + j - 1
            if den == 0:
                if num == 0:
                    raise UncancelledPole("0/0 term: regularize the vanishing bottom parameter")
                raise UncancelledPole("bottom parameter vanishes before the series terminates")
            term = term * num / den
        total += term
    return total


def pfq_terminating_float(top: Sequence[float], bottom: Sequence[float], z: float, terms: int) -> float:
    """Float sum of the first ``terms + 1`` terms; the caller guarantees termination."""
    total, term = 0.0, 1.0
    for j in range(terms + 1):
        if j:
            num = z
            for t in top:
                num *= t + j - 1
            den = float(j)
            for b in bottom:
                den *= b + j - 1
            term *= num / den
        total += term
    return total


def gauss_unit_gamma_args(a: tuple, b: tuple, c: tuple):
    """Gamma arguments of Gauss' sum ``2F1(a, b; c; 1)`` for regulated parameters.

    Parameters are ``(value, eps_coeff)`` pairs.  Returns ``(num, den)`` lists
    for :func:`~bracketmoments.exactnum.gamma_product`.  The series must
    converge: ``c - a - b > 0``, or ``c - a - b`` depends on the regulated
    parameters, so that a convergence region exists and the sum is its
    continuation.  Otherwise :class:`Divergent` is raised.
    """
    (aq, ae), (bq, be), (cq, ce) = ((as_rational(x), as_rational(y)) for x, y in (a, b, c))
    s = (cq - aq - bq, ce - ae - be)
    if s[1] == 0 and s[0] <= 0:
        raise Divergent(f"2F1 at unit argument with c-a-b = {s[0]} <= 0")
    return [(cq, ce), s], [(cq - aq, ce - ae), (cq - bq, ce - be)]


def gauss_2f1_unit(a, b, c) -> Fraction:
    """Exact ``2F1(a, b; c; 1)`` by Chu-Vandermonde (terminating) or Gauss' formula."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    cuts = [-int(x) for x in (a, b) if is_nonpositive_integer(x)]
    if cuts:
        m = min(cuts)
        other = b if a == -m else a
        den = pochhammer(c, m)
        if den == 0:
            raise Unsupported("bottom parameter vanishes before the series terminates")
        return pochhammer(c - other, m) / den
    if c - a - b <= 0:
        raise Divergent(f"2F1 at unit argument diverges: c-a-b = {c - a - b}")
    num, den = gauss_unit_gamma_args((a, 0), (b, 0), (c, 0))
    try:
        g = gamma_product(num, den)
    except UncancelledPole as exc:
        raise Unsupported(str(exc)) from exc
    if g.exact_zero:
        return Fraction(0)
    if not g.is_rational:
        raise Unsupported("Gauss sum is not a rational number for these parameters")
    return g.value.finite_value()


def laguerre(m: int, alpha) -> PolynomialR:
    """Coefficients of ``L_m^alpha(x) = (alpha+1)_m/m! * 1F1(-m; alpha+1; x)``."""
    if m < 0:
        raise InvalidParam("Laguerre degree must be nonnegative")
    alpha = as_rational(alpha)
    if is_nonpositive_integer(alpha + 1) and alpha + m + 1 <= 0:
        raise InvalidParam(f"gamma prefactor of L_{m}^{alpha} is singular")
    coeffs = []
    for j in range(m + 1):
        # (alpha+1)_m / (alpha+1)_j = (alpha+1+j)_{m-j}
        coeffs.append(pochhammer(alpha + 1 + j, m - j) * pochhammer(-m, j) / (math.factorial(m) * math.factorial(j)))
    return PolynomialR(coeffs)


def laguerre_square_expand(m: int, alpha) -> list[tuple[int, Fraction]]:
    """Coefficients ``c_s`` with ``L_m^a(x)^2 = sum_s c_s L_{2s}^{2a}(2x)``."""
    alpha = as_rational(alpha)
    out = []
    for s in range(m + 1):
        # Gamma(a+m+1)/Gamma(a+s+1) = (a+s+1)_{m-s}
        try:
            g = pochhammer(alpha + s + 1, m - s)
        except DivisionByZero as exc:
            raise InvalidParam(str(exc)) from exc
        c = g / (Fraction(4) ** m * factorial(m)) * binomial(2 * m - 2 * s, m - s) * factorial(2 * s) / factorial(s)
        out.append((s, c))
    return out


def laguerre_square_rhs(m: int, alpha) -> PolynomialR:
    """Right-hand side of the square expansion, expanded to coefficients."""
    alpha = as_rational(alpha)
    total = PolynomialR()
    for s, c in laguerre_square_expand(m, alpha):
        total = total + laguerre(2 * s, 2 * alpha).scale_arg(2) * c
    return total


def hahn(m: int, alpha, beta, x, N) -> Fraction:
    """Hahn polynomial ``h_m^(alpha,beta)(x, N)``."""
    alpha, beta, x, N = map(as_rational, (alpha, beta, x, N))
    pref = pochhammer(1 - N, m) * pochhammer(beta + 1, m) / math.factorial(m)
    spec = HypSeriesSpec([-m, alpha + beta + m + 1, -x], [beta + 1, 1 - N], 1)
    return pref * eval_terminating_pfq(spec).finite_value()


def chebyshev_discrete(m: int, x, N) -> Fraction:
    """Discrete Chebyshev polynomial ``t_m(x, N) = h_m^(0,0)(x, N)``."""
    return hahn(m, 0, 0, x, N)
