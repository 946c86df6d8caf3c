"""Exact rational arithmetic, Pochhammer symbols and regularized gamma ratios.

Rationals are plain :class:`fractions.Fraction` objects.  Quantities that
carry a pole/zero structure in a regulator ``eps`` are :class:`EpsLaurent`
values: truncated Laurent series with rational coefficients that remember
the highest power of ``eps`` they are known to.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, InvalidParam, PrecisionLost, UncancelledPole, Unsupported

Rational = Fraction
RationalLike = Union[int, Fraction]

DEFAULT_ORDER = 2

__all__ = [
    "Rational",
    "DEFAULT_ORDER",
    "EpsLaurent",
    "GammaProduct",
    "as_rational",
    "parse_rational",
    "format_rational",
    "is_integer",
    "is_nonpositive_integer",
    "factorial",
    "binomial",
    "pochhammer",
    "gamma_ratio_reg",
    "gamma_product",
]


def as_rational(x) -> Fraction:
    """Convert ints and Fractions to Fraction; refuse floats (they are inexact)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (no spaces, no decimal point)."""
    s = text.strip()
    if not s or s != text or " " in s or "." in s or "e" in s.lower():
        raise InvalidParam(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParam(f"not an exact rational literal: {text!r}") from exc


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def is_integer(q) -> bool:
    return Fraction(q).denominator == 1


def is_nonpositive_integer(q) -> bool:
    q = Fraction(q)
    return q.denominator == 1 and q <= 0


def factorial(n: int) -> Fraction:
    if n < 0:
        raise InvalidParam("factorial of a negative integer")
    return Fraction(math.factorial(n))


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient for any integer ``n`` and ``k >= 0``."""
    if k < 0:
        raise InvalidParam("binomial lower index must be nonnegative")
    if n >= 0:
        return Fraction(math.comb(n, k))
    num = 1
    for i in range(k):
        num *= n - i
    return Fraction(num, math.factorial(k))


class EpsLaurent:
    """Truncated Laurent expansion ``sum c_p eps^p`` known exactly through ``eps^order``.

    Precision is tracked through products and quotients, so multiplying a
    value known to ``O(eps^2)`` by ``1/eps`` yields one known to ``O(eps^1)``.
    Asking for a coefficient past the known order raises :class:`PrecisionLost`.
    """

    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Mapping[int, RationalLike] | None = None, order: int = DEFAULT_ORDER):
        self.order = int(order)
        self._c: dict[int, Fraction] = {}
        if coeffs:
            for p, c in coeffs.items():
                c = as_rational(c)
                if c and p <= self.order:
                    self._c[int(p)] = c

    # constructors
    @classmethod
    def constant(cls, c: RationalLike, order: int = DEFAULT_ORDER) -> "EpsLaurent":
        return cls({0: c}, order)

    @classmethod
    def shifted(cls, value: RationalLike, eps_coeff: RationalLike = 1, order: int = DEFAULT_ORDER) -> "EpsLaurent":
        """``value + eps_coeff * eps``."""
        return cls({0: value, 1: eps_coeff}, order)

    @classmethod
    def eps(cls, order: int = DEFAULT_ORDER) -> "EpsLaurent":
        return cls({1: 1}, order)

    # inspection
    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def valuation(self) -> int:
        """Lowest power with a nonzero coefficient; ``order + 1`` for a (known) zero."""
        return min(self._c) if self._c else self.order + 1

    def coeff(self, p: int) -> Fraction:
        if p > self.order:
            raise PrecisionLost(f"eps^{p} coefficient requested, known only through eps^{self.order}")
        return self._c.get(p, Fraction(0))

    def pole_order(self) -> int:
        v = self.valuation()
        return -v if v < 0 else 0

    def is_finite(self) -> bool:
        return self.valuation() >= 0

    def finite_value(self) -> Fraction:
        """The ``eps -> 0`` limit; raises :class:`UncancelledPole` if there is a pole."""
        if not self.is_finite():
            raise UncancelledPole(f"pole of order {self.pole_order()} in {self}")
        return self.coeff(0)

    def is_zero(self) -> bool:
        return not self._c

    def leading_only(self) -> "EpsLaurent":
        """Keep the leading term and forget everything after it."""
        if not self._c:
            return self
        v = self.valuation()
        return EpsLaurent({v: self._c[v]}, v)

    def truncate(self, order: int) -> "EpsLaurent":
        return EpsLaurent(self._c, min(order, self.order))

    def agrees(self, other: "EpsLaurent | RationalLike") -> bool:
        """Coefficient equality through the smaller of the two known orders."""
        other = _promote(other, self.order)
        top = min(self.order, other.order)
        powers = {p for p in self._c if p <= top} | {p for p in other._c if p <= top}
        return all(self.coeff(p) == other.coeff(p) for p in powers)

    # arithmetic
    def __neg__(self) -> "EpsLaurent":
        return EpsLaurent({p: -c for p, c in self._c.items()}, self.order)

    def __add__(self, other) -> "EpsLaurent":
        if _is_scalar(other):
            out = dict(self._c)
            if 0 <= self.order:
                out[0] = out.get(0, Fraction(0)) + as_rational(other)
            return EpsLaurent(out, self.order)
        if not isinstance(other, EpsLaurent):
            return NotImplemented
        order = min(self.order, other.order)
        out: dict[int, Fraction] = defaultdict(Fraction)
        for src in (self._c, other._c):
            for p, c in src.items():
                if p <= order:
                    out[p] += c
        return EpsLaurent(out, order)

    __radd__ = __add__

    def __sub__(self, other) -> "EpsLaurent":
        if _is_scalar(other) or isinstance(other, EpsLaurent):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "EpsLaurent":
        return (-self) + other

    def __mul__(self, other) -> "EpsLaurent":
        if _is_scalar(other):
            k = as_rational(other)
            return EpsLaurent({p: c * k for p, c in self._c.items()}, self.order)
        if not isinstance(other, EpsLaurent):
            return NotImplemented
        order = min(self.order + other.valuation(), other.order + self.valuation())
        out: dict[int, Fraction] = defaultdict(Fraction)
        for p, a in self._c.items():
            for q, b in other._c.items():
                if p + q <= order:
                    out[p + q] += a * b
        return EpsLaurent(out, order)

    __rmul__ = __mul__

    def inverse(self) -> "EpsLaurent":
        v = self.valuation()
        if v > self.order:
            raise DivisionByZero(f"division by a quantity vanishing through eps^{self.order}")
        rel = self.order - v
        u = [self._c.get(v + i, Fraction(0)) for i in range(rel + 1)]
        b = [1 / u[0]]
        for i in range(1, rel + 1):
            b.append(-sum(u[j] * b[i - j] for j in range(1, i + 1)) / u[0])
        return EpsLaurent({-v + i: c for i, c in enumerate(b)}, -v + rel)

    def __truediv__(self, other) -> "EpsLaurent":
        if _is_scalar(other):
            k = as_rational(other)
            if k == 0:
                raise DivisionByZero("division of a Laurent series by zero")
            return self * (1 / k)
        if not isinstance(other, EpsLaurent):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "EpsLaurent":
        return self.inverse() * as_rational(other)

    def __pow__(self, n: int) -> "EpsLaurent":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = EpsLaurent.constant(1, base.order)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            return self._c == ({0: as_rational(other)} if other else {})
        if isinstance(other, EpsLaurent):
            return self._c == other._c and self.order == other.order
        return NotImplemented

    def __hash__(self):
        return hash((tuple(sorted(self._c.items())), self.order))

    def __repr__(self) -> str:
        return f"EpsLaurent({self})"

    def __str__(self) -> str:
        parts = []
        for p in sorted(self._c):
            c = format_rational(self._c[p])
            parts.append(c if p == 0 else f"{c}*eps" + ("" if p == 1 else f"^{p}"))
        parts.append(f"O(eps^{self.order + 1})")
        return " + ".join(parts)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _promote(x, order: int) -> EpsLaurent:
    return x if isinstance(x, EpsLaurent) else EpsLaurent.constant(as_rational(x), order)


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n``; ``(a)_{-n} = (-1)^n / (1-a)_n`` for negative ``n``.

    ``a`` may be a rational or an :class:`EpsLaurent`; the result has the same kind.
    """
    if not isinstance(a, EpsLaurent):
        a = as_rational(a)
    if n >= 0:
        out = Fraction(1) if not isinstance(a, EpsLaurent) else EpsLaurent.constant(1, a.order)
        for i in range(n):
            out = out * (a + i)
        return out
    den = pochhammer(1 - a, -n)
    if isinstance(den, EpsLaurent):
        return den.inverse() * (-1) ** (-n)
    if den == 0:
        raise DivisionByZero(f"({format_rational(a)})_{n}: (1-a)_{-n} vanishes")
    return Fraction((-1) ** (-n)) / den


def gamma_ratio_reg(num_arg: RationalLike, den_arg: RationalLike, eps_coeff: RationalLike = 1,
                    order: int = DEFAULT_ORDER) -> EpsLaurent:
    """Laurent expansion of ``Gamma(num_arg + c*eps) / Gamma(den_arg + c*eps)``.

    Only integer-separated arguments are supported, where the ratio is a
    rational function of ``eps``: a Pochhammer symbol or its reciprocal.
    """
    num_arg, den_arg = as_rational(num_arg), as_rational(den_arg)
    c = as_rational(eps_coeff)
    diff = num_arg - den_arg
    if diff.denominator != 1:
        raise Unsupported("gamma ratio with non-integer argument difference is not rational")
    # keep enough headroom for the reciprocal of a simple zero
    work = order + 2
    base = EpsLaurent.shifted(den_arg, c, work) if c else EpsLaurent.constant(den_arg, work)
    d = int(diff)
    if d >= 0:
        out = pochhammer(base, d)
    else:
        out = pochhammer(base + d, -d).inverse()
    return out.truncate(max(order, 1))


@dataclass
class GammaProduct:
    """Result of :func:`gamma_product`: ``value * prod Gamma(f)^e`` over ``residual``.

    ``residual`` maps fractional gamma arguments in (0, 1) to nonzero
    exponents; when it is empty the product is rational (in ``eps``).
    ``exact_zero`` marks products killed by an unregularized reciprocal pole.
    """

    value: EpsLaurent
    residual: dict[Fraction, int] = field(default_factory=dict)
    exact_zero: bool = False

    @property
    def is_rational(self) -> bool:
        return not self.residual


def gamma_product(num: Iterable[tuple[RationalLike, RationalLike]],
                  den: Iterable[tuple[RationalLike, RationalLike]],
                  order: int = DEFAULT_ORDER) -> GammaProduct:
    """Evaluate ``prod Gamma(q_i + c_i eps) / prod Gamma(q_j + c_j eps)``.

    Arguments are grouped into classes sharing the fractional part of ``q``
    and the regulator coefficient ``c``; inside a class every gamma is reduced
    to a common base by ``Gamma(z+1) = z Gamma(z)``, so balanced classes give
    exact rational functions of ``eps``.  An unbalanced class leaves a factor
    ``Gamma(base)^d``: for an integer base this is ``1 + O(eps)`` and the
    result is then known to leading order only, for a fractional base it is
    reported in ``residual``.

    Arguments with ``c == 0`` that sit on gamma poles are paired through a
    common auxiliary shift (the convention behind ``(a)_{-n} = (-1)^n/(1-a)_n``);
    a net reciprocal pole makes the product exactly zero and a net pole raises
    :class:`UncancelledPole`.
    """
    classes: dict[tuple[Fraction, Fraction], list[list[Fraction]]] = {}
    for sign, args in ((0, num), (1, den)):
        for q, c in args:
            q, c = as_rational(q), as_rational(c)
            key = (q - math.floor(q), c)
            classes.setdefault(key, [[], []])[sign].append(q)

    # Each class is a ratio of products of linear factors (a + s e).  Equal
    # factors cancel; a factor with a = 0 contributes s e, any other factor
    # a (1 + (s/a) e).  The total valuation is known before any expansion,
    # so the unit parts are expanded only to the precision that survives.
    scalar = Fraction(1)
    valuation = 0
    leading = False
    residual: dict[Fraction, int] = {}
    units: list[tuple[list[Fraction], list[Fraction]]] = []
    for (frac, c), (nums, dens) in sorted(classes.items()):
        b = frac if frac else Fraction(1)
        exact_integer = c == 0 and frac == 0
        step = Fraction(1) if exact_integer else c
        tops: Counter = Counter()
        bottoms: Counter = Counter()
        for sign, qs in ((0, nums), (1, dens)):
            for q in qs:
                j = int(q - b)
                # (base)_j, with (base)_{-j} = 1/((base-j)...(base-1))
                rng, into_top = (range(j), sign == 0) if j >= 0 else (range(j, 0), sign == 1)
                (tops if into_top else bottoms).update(rng)
        # keyed by the integer offset i of the factor b + i
        tops, bottoms = tops - bottoms, bottoms - tops
        zero = -1 if b == 1 else None
        v = tops[zero] - bottoms[zero] if zero is not None else 0
        if exact_integer:
            if v > 0:
                return GammaProduct(EpsLaurent({}, order), {}, exact_zero=True)
            if v < 0:
                raise UncancelledPole("unregularized gamma pole does not cancel")
        else:
            valuation += v
            scalar *= step ** v
            d = len(nums) - len(dens)
            if d:
                if frac:
                    residual[frac] = residual.get(frac, 0) + d
                if c:
                    leading = True
        num_int = den_int = 1
        for i, mult in tops.items():
            if i != zero:
                num_int *= (b + i) ** mult
        for i, mult in bottoms.items():
            if i != zero:
                den_int *= (b + i) ** mult
        scalar = scalar * num_int / den_int
        if not exact_integer and step:
            units.append(([step / (b + i) for i, m in tops.items() if i != zero for _ in range(m)],
                          [step / (b + i) for i, m in bottoms.items() if i != zero for _ in range(m)]))
    prec = order - valuation
    if leading:
        prec = min(prec, 0)
    if prec < 0:
        total = EpsLaurent({}, order)
    else:
        top = [scalar] + [Fraction(0)] * prec
        bottom = [Fraction(1)] + [Fraction(0)] * prec
        for ups, downs in units:
            for x in ups:
                top = _mul_one_plus(top, x)
            for x in downs:
                bottom = _mul_one_plus(bottom, x)
        series = _series_div(top, bottom, prec)
        total = EpsLaurent({valuation + i: x for i, x in enumerate(series)}, order if not leading else valuation)
    residual = {f: e for f, e in residual.items() if e}
    return GammaProduct(total, residual)


def _mul_one_plus(p: list[Fraction], x: Fraction) -> list[Fraction]:
    """``p(e) * (1 + x e)`` keeping the length of ``p``."""
    return [p[0]] + [p[i] + x * p[i - 1] for i in range(1, len(p))]


def _series_div(top: list[Fraction], bottom: list[Fraction], prec: int) -> list[Fraction]:
    """Power series of ``top/bottom`` through ``e^prec``; ``bottom[0] != 0``."""
    out = []
    b0 = bottom[0]
    for i in range(prec + 1):
        acc = top[i] if i < len(top) else Fraction(0)
        for j in range(1, min(i, len(bottom) - 1) + 1):
            acc -= bottom[j] * out[i - j]
        out.append(acc / b0)
    return out
