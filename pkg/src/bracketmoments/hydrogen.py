"""Radial moments of the hydrogen atom by several independent routes.

Every route returns a :class:`MomentResult`.  Exact routes need an integer
power ``k`` and a rational scale ``mu``; the direct sum and the ``3F2``
closed form also have a float path for real ``k``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import brackets
from .errors import (
    BracketMomentsError,
    Divergent,
    InvalidParam,
    OutOfRange,
    PrecisionLost,
    UncancelledPole,
    Unsupported,
)
from .exactnum import EpsLaurent, as_rational, binomial, factorial, gamma_ratio_reg, is_integer
from .oracle import oracle_moment
from .special import (
    HypSeriesSpec,
    PolynomialR,
    chebyshev_discrete,
    eval_terminating_pfq,
    laguerre,
    laguerre_square_expand,
    pfq_terminating_float,
)

Number = Union[Fraction, float]

__all__ = [
    "Method",
    "MomentQuery",
    "MomentResult",
    "ExampleValue",
    "RadialWavefunction",
    "norm_const_sq",
    "g_integral_form_a",
    "g_integral_form_b",
    "g_integral_bracket",
    "moment_direct_sum",
    "moment_theorem_f3",
    "moment_hahn",
    "hahn_negative_k_as_printed",
    "moment_bracket",
    "moment_oracle",
    "moment_from_g",
    "example_closed_forms",
    "example2_paper",
    "example2_corrected",
    "radial_wavefunction",
    "compute",
    "METHODS",
]


class Method(str, enum.Enum):
    DIRECT_SUM = "direct_sum"
    THEOREM_F3 = "theorem_f3"
    HAHN_ROUTE = "hahn_route"
    BRACKET_ENGINE = "bracket_engine"
    ORACLE = "oracle"


@dataclass(frozen=True)
class MomentQuery:
    """``<r^k>`` in the state ``(n, l)`` with radial scale ``mu``."""

    n: int
    l: int
    k: Number
    mu: Number = Fraction(1)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidParam("n must be a positive integer")
        if isinstance(self.l, bool) or not isinstance(self.l, int) or not 0 <= self.l <= self.n - 1:
            raise InvalidParam("0 <= l <= n-1 violated")
        k = self.k if isinstance(self.k, float) else as_rational(self.k)
        mu = self.mu if isinstance(self.mu, float) else as_rational(self.mu)
        if not mu > 0:
            raise InvalidParam("mu > 0 violated")
        if not 2 * self.l + k + 3 > 0:
            raise InvalidParam("2l+k+3 > 0 violated")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "mu", mu)

    @property
    def exact(self) -> bool:
        """True when every route can return an exact rational."""
        return not isinstance(self.k, float) and is_integer(self.k) and not isinstance(self.mu, float)

    @property
    def m(self) -> int:
        return self.n - self.l - 1


@dataclass(frozen=True)
class MomentResult:
    value: Number
    method: Method
    degenerate_regularized: bool = False
    query: Optional[MomentQuery] = None

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Fraction)


def _q(query, *rest) -> MomentQuery:
    if isinstance(query, MomentQuery):
        return query
    return MomentQuery(query, *rest)


def norm_const_sq(n: int, l: int, mu) -> Fraction:
    """``A^2 = (2mu)^3/(2n) * (n-l-1)!/(n+l)!``."""
    mu = as_rational(mu)
    return (2 * mu) ** 3 / (2 * n) * Fraction(factorial(n - l - 1), factorial(n + l))


def _check_g(l, k, s):
    if s < 0 or l < 0:
        raise InvalidParam("l and s must be nonnegative")
    if not 2 * l + k + 3 > 0:
        raise InvalidParam("2l+k+3 > 0 violated")


def g_integral_form_a(l: int, k: int, s: int, mu) -> Fraction:
    """``G_{l,k,s}(mu)`` from the terminating ``2F1(-2s, 2l+k+3; 4l+3; 2)``."""
    _check_g(l, k, s)
    mu = as_rational(mu)
    t = 2 * l + k + 3
    pref = Fraction(factorial(4 * l + 2 * s + 2), factorial(2 * s) * factorial(4 * l + 2)) * factorial(t - 1)
    series = eval_terminating_pfq(HypSeriesSpec([-2 * s, t], [4 * l + 3], 2)).finite_value()
    return pref * series / (2 * mu) ** t


def g_integral_form_b(l: int, k: int, s: int, mu) -> Fraction:
    """``G_{l,k,s}(mu)`` from ``2F1(-2s, -2s-4l-2; -2-2l-k-2s; 1/2)``.

    The bottom parameter can reach zero before the series stops; ``k`` is
    shifted to ``k + eps`` there and the finite part is taken.
    """
    _check_g(l, k, s)
    mu = as_rational(mu)
    t = 2 * l + k + 3
    bottom = EpsLaurent.shifted(-t + 1 - 2 * s, -1, 4)
    series = eval_terminating_pfq(HypSeriesSpec([-2 * s, -2 * s - 4 * l - 2], [bottom], Fraction(1, 2), 4))
    pref = Fraction(4) ** s * Fraction(factorial(t + 2 * s - 1), factorial(2 * s))
    if series.valuation() < 0:
        raise UncancelledPole("form B series keeps a pole")
    return pref * series.finite_value() / (2 * mu) ** t


def g_integral_bracket(l: int, k: int, s: int, mu, free: str = "k2") -> Fraction:
    """``G_{l,k,s}(mu)`` through the bracket form of the Laguerre function.

    ``free`` picks the representation; ``k2`` is the one used in the
    derivation, ``k1`` works as well.  The upper Laguerre parameter ``4l+2``
    is regulated alongside ``k``.
    """
    _check_g(l, k, s)
    series = brackets.g_integral_series()
    rep = brackets.rule_e2_solve(series, [i for i in series.indices if i == free])
    if rep.index != series.index:
        raise InvalidParam(f"{free} is not an index of the G series")
    val = brackets.eval_rep(rep, {"l": l, "k": (k, 1), "s": s, "mu": as_rational(mu), "a": (4 * l + 2, 2)})
    return val.finite_value()


def moment_direct_sum(query, *rest) -> MomentResult:
    """Finite sum over the Laguerre-square expansion, one ``2F1(...; 2)`` per term."""
    q = _q(query, *rest)
    n, l, k, mu = q.n, q.l, q.k, q.mu
    m = q.m
    weights = [Fraction(binomial(n + l, s) * binomial(m, s), binomial(2 * n + 2 * l, 2 * s)) for s in range(m + 1)]
    base = Fraction(factorial(2 * n + 2 * l),
                    n * 2 ** (2 * n - 2 * l - 1) * factorial(4 * l + 2) * factorial(n + l) * factorial(m))
    if q.exact:
        k = int(k)
        total = Fraction(0)
        for s, w in enumerate(weights):
            spec = HypSeriesSpec([-2 * (m - s), 2 * l + k + 3], [4 * l + 3], 2)
            total += w * eval_terminating_pfq(spec).finite_value()
        value = base * factorial(2 * l + k + 2) * total / (2 * as_rational(mu)) ** k
        return MomentResult(value, Method.DIRECT_SUM, False, q)
    kf, muf = float(k), float(mu)
    total = 0.0
    for s, w in enumerate(weights):
        total += float(w) * pfq_terminating_float([-2.0 * (m - s), 2 * l + kf + 3], [4.0 * l + 3], 2.0, 2 * (m - s))
    value = float(base) * math.gamma(2 * l + kf + 3) * total / (2 * muf) ** kf
    return MomentResult(value, Method.DIRECT_SUM, False, q)


def _f3_degenerate(n, l, k) -> bool:
    return any(a <= 0 for a in (n - l - k - 2, -1 - k, l + k + 3 - n))


def moment_theorem_f3(query, *rest) -> MomentResult:
    """Closed form with one ``3F2`` at unit argument.

    For integer ``k`` the ratio ``Gamma(n-l-k-2)/Gamma(-1-k)`` and the bottom
    parameter ``l+k+3-n`` may both be singular; ``k`` is replaced by
    ``k + eps`` in those two places and the ``eps^0`` coefficient of the
    product is returned.
    """
    q = _q(query, *rest)
    n, l, k, mu = q.n, q.l, q.k, q.mu
    m = q.m
    if q.exact:
        k = int(k)
        const = Fraction(factorial(2 * l + k + 2), 2 * n * factorial(m) * factorial(2 * l + 1)) / (2 * mu) ** k
        ratio = gamma_ratio_reg(n - l - k - 2, -1 - k, -1, 4)
        bottom = EpsLaurent.shifted(l + k + 3 - n, 1, 6)
        series = eval_terminating_pfq(HypSeriesSpec([k + 2, 1 + l - n, 2 * l + k + 3], [2 * l + 2, bottom], 1, 4))
        prod = ratio * series
        if prod.valuation() < 0:
            raise UncancelledPole(f"eps^-1 coefficient {prod.coeff(-1)} survives")
        return MomentResult(const * prod.finite_value(), Method.THEOREM_F3, _f3_degenerate(n, l, k), q)
    kf, muf = float(k), float(mu)
    const = math.gamma(2 * l + kf + 3) / (2 * n * (2 * muf) ** kf * math.factorial(m) * math.factorial(2 * l + 1))
    ratio = 1.0
    for i in range(m):
        ratio *= -1 - kf + i
    series = pfq_terminating_float([kf + 2, 1.0 + l - n, 2 * l + kf + 3], [2.0 * l + 2, l + kf + 3 - n], 1.0, m)
    return MomentResult(const * ratio * series, Method.THEOREM_F3, False, q)


def moment_hahn(query, *rest) -> MomentResult:
    """Moments from discrete Chebyshev polynomials ``t_j(n-l-1, -2l-1)``.

    For ``k >= -1`` the degree is ``k+1``.  For ``-2l-2 <= k <= -2`` the
    degree is ``-k-2`` and the value carries the extra factor
    ``Gamma(2l+k+3)/Gamma(2l-k)``; without it the route fails against the
    oracle (see :func:`hahn_negative_k_as_printed`).
    """
    q = _q(query, *rest)
    if not q.exact:
        raise OutOfRange("the Hahn route needs integer k and rational mu")
    n, l, k, mu = q.n, q.l, int(q.k), q.mu
    pref = 1 / (2 * n * (2 * mu) ** k)
    if k >= -1:
        return MomentResult(pref * chebyshev_discrete(k + 1, n - l - 1, -2 * l - 1), Method.HAHN_ROUTE, False, q)
    if -2 * l - 2 <= k <= -2:
        t = chebyshev_discrete(-k - 2, n - l - 1, -2 * l - 1)
        fix = Fraction(factorial(2 * l + k + 2), factorial(2 * l - k - 1))
        return MomentResult(pref * fix * t, Method.HAHN_ROUTE, False, q)
    raise OutOfRange(f"k = {k} is outside both Hahn ranges")


def hahn_negative_k_as_printed(query, *rest) -> Fraction:
    """The negative-k Hahn expression without the gamma correction factor."""
    q = _q(query, *rest)
    k = int(q.k)
    if not -2 * q.l - 2 <= k <= -2:
        raise OutOfRange("only defined for -2l-2 <= k <= -2")
    return chebyshev_discrete(-k - 2, q.n - q.l - 1, -2 * q.l - 1) / (2 * q.n * (2 * q.mu) ** k)


def moment_bracket(query, *rest) -> MomentResult:
    """Method of brackets on the integral of ``r^{2+2l+k} e^{-Ar} L(Br) L(Cr)``.

    All three representations are evaluated with ``A = B = C = 2 mu``; those
    that the engine can sum must agree, and the common value is returned.
    """
    q = _q(query, *rest)
    if not q.exact:
        raise InvalidParam("the bracket route needs integer k and rational mu")
    n, l, k, mu = q.n, q.l, int(q.k), q.mu
    series = brackets.hydrogen_integral_series()
    bind = {"n": n, "l": l, "k": (k, 1), "A": 2 * mu, "B": 2 * mu, "C": 2 * mu}
    values = {}
    for rep, _ in brackets.enumerate_representations(series):
        try:
            v = brackets.eval_rep(rep, bind)
            values[rep.free_indices] = v.finite_value()
        except (Unsupported, Divergent, PrecisionLost, UncancelledPole):
            continue
    if not values:
        raise Unsupported("no representation could be summed")
    distinct = set(values.values())
    if len(distinct) > 1:
        raise BracketMomentsError(f"representations disagree: {values}")
    integral = distinct.pop()
    value = (2 * mu) ** (2 * l) * norm_const_sq(n, l, mu) * integral
    return MomentResult(value, Method.BRACKET_ENGINE, False, q)


def moment_oracle(query, *rest) -> MomentResult:
    q = _q(query, *rest)
    return MomentResult(oracle_moment(q.n, q.l, q.k, q.mu), Method.ORACLE, False, q)


def moment_from_g(query, *rest) -> Fraction:
    """``<r^k>`` assembled from the square-expansion coefficients and ``G`` integrals."""
    q = _q(query, *rest)
    if not q.exact:
        raise InvalidParam("needs integer k and rational mu")
    n, l, k, mu = q.n, q.l, int(q.k), q.mu
    total = sum(c * g_integral_form_a(l, k, s, mu) for s, c in laguerre_square_expand(q.m, 2 * l + 1))
    return (2 * mu) ** (2 * l) * norm_const_sq(n, l, mu) * total


@dataclass(frozen=True)
class ExampleValue:
    """A closed form for a special ``l`` next to the cross-verified value."""

    formula: str
    paper_value: Fraction
    status: str  # "verified" or "UNVERIFIED"
    corrected_value: Fraction


def example2_paper(n: int, k: int, mu) -> Fraction:
    """The ``l = n-2`` closed form exactly as displayed in the source."""
    mu = as_rational(mu)
    return Fraction((k * k + 3 * k + 2 * n) * factorial(k + 2 * n - 2), 2 * factorial(2 * n - 2)) / (2 * mu) ** k


def example2_corrected(n: int, k: int, mu) -> Fraction:
    """The ``l = n-2`` closed form with the missing ``1/n``."""
    return example2_paper(n, k, mu) / n


def example_closed_forms(query, *rest) -> Optional[ExampleValue]:
    """Closed forms for ``l = n-1`` and ``l = n-2``; None for other ``l``."""
    q = _q(query, *rest)
    if not q.exact:
        raise InvalidParam("closed forms are exact; k must be an integer")
    n, l, k, mu = q.n, q.l, int(q.k), q.mu
    if l == n - 1:
        v = Fraction(factorial(k + 2 * n), factorial(2 * n)) / (2 * mu) ** k
        return ExampleValue("example1", v, "verified", v)
    if l == n - 2:
        return ExampleValue("example2", example2_paper(n, k, mu), "UNVERIFIED", moment_direct_sum(q).value)
    return None


@dataclass(frozen=True)
class RadialWavefunction:
    """``R(r) = sqrt(norm_sq) * (scale r)^power * e^{-decay r} * laguerre(scale r)``."""

    norm_sq: Fraction
    power: int
    decay: Fraction
    scale: Fraction
    laguerre: PolynomialR

    def density_poly(self) -> PolynomialR:
        """``R^2 e^{2 decay r}`` as a polynomial in ``t = scale * r``, without ``norm_sq``."""
        sq = self.laguerre * self.laguerre
        return PolynomialR((0,) * (2 * self.power) + sq.coeffs)


def radial_wavefunction(n: int, l: int, mu) -> RadialWavefunction:
    MomentQuery(n, l, 0, mu)
    mu = as_rational(mu)
    return RadialWavefunction(norm_const_sq(n, l, mu), l, mu, 2 * mu, laguerre(n - l - 1, 2 * l + 1))


METHODS = {
    Method.DIRECT_SUM: moment_direct_sum,
    Method.THEOREM_F3: moment_theorem_f3,
    Method.HAHN_ROUTE: moment_hahn,
    Method.BRACKET_ENGINE: moment_bracket,
    Method.ORACLE: moment_oracle,
}


def compute(query: MomentQuery, method: Method | str) -> MomentResult:
    return METHODS[Method(method)](query)
