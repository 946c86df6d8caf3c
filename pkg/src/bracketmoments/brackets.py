"""Method of brackets for integrals over the half line.

A :class:`BracketSeries` is a formal multiple sum

    sum_{n_1..n_r} phi_{n_1..n_r} * term(n) * <b_1(n)> ... <b_p(n)>

whose brackets ``<a> = int_0^inf x^{a-1} dx`` are linear forms in the
summation indices.  Series are produced from expansions of the integrand
(rule P1 for the integral itself, rule P2 for a multinomial power), turned
into representations by solving the vanishing brackets for all but the free
indices (rules E1/E2), and the remaining sums are carried out exactly by
:func:`eval_rep` (rule E3 with a conservative convergence policy).

Symbols (``n``, ``l``, ``k``, ``A``, ...) are carried through formally and only
bound at evaluation time.  A binding may attach a regulator: ``k -> k + eps``
is written ``{"k": (k, 1)}``.  Results are :class:`EpsLaurent` values whose
``eps -> 0`` limit is the answer.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    Divergent,
    InvalidParam,
    NegativeIndex,
    PrecisionLost,
    SingularBracket,
    SingularMatrix,
    UncancelledPole,
    Unsupported,
)
from .exactnum import DEFAULT_ORDER, EpsLaurent, as_rational, format_rational, gamma_product
from .special import gauss_unit_gamma_args

__all__ = [
    "X",
    "EPS",
    "AffineForm",
    "SymbolicConst",
    "BracketTerm",
    "BracketSeries",
    "SeriesRep",
    "NonRationalValue",
    "product",
    "series_exp",
    "series_laguerre",
    "series_gamma",
    "series_laguerre_brackets",
    "rule_p1_integrate",
    "rule_p2_multinomial",
    "rule_e1",
    "rule_e2_solve",
    "enumerate_representations",
    "eval_rep",
    "evaluate_term",
    "hydrogen_integral_series",
    "g_integral_series",
]

X = "x"
EPS = "eps"


@dataclass(frozen=True)
class AffineForm:
    """``sum c_i * name_i + const`` with rational coefficients.

    Names are summation indices or symbolic parameters; the engine does not
    distinguish them here, the owning series does.
    """

    terms: tuple[tuple[str, Fraction], ...] = ()
    const: Fraction = Fraction(0)

    @classmethod
    def build(cls, coeffs: Mapping[str, object] | None = None, const=0) -> "AffineForm":
        items = []
        for name, c in (coeffs or {}).items():
            c = as_rational(c)
            if c:
                items.append((name, c))
        return cls(tuple(sorted(items)), as_rational(const))

    @classmethod
    def of(cls, x) -> "AffineForm":
        if isinstance(x, AffineForm):
            return x
        if isinstance(x, str):
            return cls.build({x: 1})
        return cls.build({}, as_rational(x))

    def coeff(self, name: str) -> Fraction:
        for n, c in self.terms:
            if n == name:
                return c
        return Fraction(0)

    @property
    def names(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.terms)

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def without(self, name: str) -> "AffineForm":
        return AffineForm(tuple((n, c) for n, c in self.terms if n != name), self.const)

    def __add__(self, other) -> "AffineForm":
        other = AffineForm.of(other)
        acc = dict(self.terms)
        for n, c in other.terms:
            acc[n] = acc.get(n, Fraction(0)) + c
        return AffineForm.build(acc, self.const + other.const)

    __radd__ = __add__

    def __neg__(self) -> "AffineForm":
        return AffineForm(tuple((n, -c) for n, c in self.terms), -self.const)

    def __sub__(self, other) -> "AffineForm":
        return self + (-AffineForm.of(other))

    def __rsub__(self, other) -> "AffineForm":
        return AffineForm.of(other) - self

    def __mul__(self, k) -> "AffineForm":
        k = as_rational(k)
        return AffineForm.build({n: c * k for n, c in self.terms}, self.const * k)

    __rmul__ = __mul__

    def subs(self, mapping: Mapping[str, object]) -> "AffineForm":
        if not any(n in mapping for n, _ in self.terms):
            return self
        if all(isinstance(mapping.get(n), int) for n, _ in self.terms if n in mapping):
            const = self.const
            rest = []
            for n, c in self.terms:
                if n in mapping:
                    const += c * mapping[n]
                else:
                    rest.append((n, c))
            return AffineForm(tuple(rest), const)
        out = AffineForm.build({}, self.const)
        for n, c in self.terms:
            out = out + (AffineForm.of(mapping[n]) if n in mapping else AffineForm.build({n: 1})) * c
        return out

    def regulated(self) -> tuple[Fraction, Fraction]:
        """``(value, eps coefficient)`` of a form that only involves ``eps``."""
        if self.names - {EPS}:
            raise InvalidParam(f"unbound names {sorted(self.names - {EPS})} in {self}")
        return self.const, self.coeff(EPS)

    def __str__(self) -> str:
        parts = []
        for n, c in self.terms:
            if c == 1:
                parts.append(n)
            elif c == -1:
                parts.append(f"-{n}")
            else:
                parts.append(f"{format_rational(c)}*{n}")
        if self.const or not parts:
            parts.append(format_rational(self.const))
        return " + ".join(parts).replace("+ -", "- ")


SymbolicConst = AffineForm


@dataclass(frozen=True)
class BracketTerm:
    """``const * prod Gamma(num) / prod Gamma(den) * prod base^exponent * prod phi_i``."""

    const: Fraction = Fraction(1)
    gamma_num: tuple[AffineForm, ...] = ()
    gamma_den: tuple[AffineForm, ...] = ()
    power_factors: tuple[tuple[AffineForm, AffineForm], ...] = ()
    indicator_indices: tuple[str, ...] = ()

    def __mul__(self, other: "BracketTerm") -> "BracketTerm":
        return BracketTerm(
            self.const * other.const,
            self.gamma_num + other.gamma_num,
            self.gamma_den + other.gamma_den,
            self.power_factors + other.power_factors,
            self.indicator_indices + other.indicator_indices,
        )

    def subs(self, mapping: Mapping[str, object]) -> "BracketTerm":
        return BracketTerm(
            self.const,
            tuple(g.subs(mapping) for g in self.gamma_num),
            tuple(g.subs(mapping) for g in self.gamma_den),
            tuple((b.subs(mapping), e.subs(mapping)) for b, e in self.power_factors),
            self.indicator_indices,
        )

    def names(self) -> frozenset[str]:
        out: set[str] = set()
        for g in self.gamma_num + self.gamma_den:
            out |= g.names
        for b, e in self.power_factors:
            out |= b.names | e.names
        return frozenset(out)

    def dump(self) -> str:
        num = ",".join(f"G({g})" for g in self.gamma_num)
        den = ",".join(f"G({g})" for g in self.gamma_den)
        pw = ",".join(f"({b})^({e})" for b, e in self.power_factors)
        ind = ",".join(self.indicator_indices)
        return f"const={format_rational(self.const)} num=[{num}] den=[{den}] pow=[{pw}] phi=[{ind}]"


@dataclass(frozen=True)
class BracketSeries:
    """Multi-index sum with bracket constraints.

    ``x_power`` is the exponent of the integration variable carried by a
    fragment that has not been integrated yet (rule P1 consumes it).
    """

    indices: tuple[str, ...]
    term: BracketTerm
    brackets: tuple[AffineForm, ...] = ()
    x_power: AffineForm = field(default_factory=AffineForm)

    def __post_init__(self):
        if len(set(self.indices)) != len(self.indices):
            raise InvalidParam(f"repeated summation index in {self.indices}")
        for b in self.brackets:
            if b.is_constant and b.const == 0:
                raise InvalidParam("bracket form is identically zero")
        missing = set(self.term.indicator_indices) - set(self.indices)
        if missing:
            raise InvalidParam(f"indicator on unregistered index {sorted(missing)}")

    @property
    def index(self) -> int:
        """Number of sums minus number of brackets."""
        return len(self.indices) - len(self.brackets)

    def __mul__(self, other: "BracketSeries") -> "BracketSeries":
        return product(self, other)

    def dump(self) -> str:
        br = ",".join(f"<{b}>" for b in self.brackets)
        xp = "" if self.x_power.is_constant and self.x_power.const == 0 else f" x^({self.x_power})"
        return f"sum[{','.join(self.indices)}] {self.term.dump()} brackets=[{br}]{xp}"


def product(*fragments: BracketSeries) -> BracketSeries:
    """Formal product of fragments in the same integration variable."""
    indices: tuple[str, ...] = ()
    term = BracketTerm()
    brackets: tuple[AffineForm, ...] = ()
    xp = AffineForm()
    for f in fragments:
        indices += f.indices
        term = term * f.term
        brackets += f.brackets
        xp = xp + f.x_power
    return BracketSeries(indices, term, brackets, xp)


def series_exp(scale, index: str = "n1") -> BracketSeries:
    """``exp(-scale * x) = sum phi_n scale^n x^n``."""
    a = AffineForm.of(scale)
    n = AffineForm.of(index)
    return BracketSeries((index,), BracketTerm(power_factors=((a, n),), indicator_indices=(index,)), x_power=n)


def series_laguerre(m, alpha, index: str = "n2", scale=1) -> BracketSeries:
    """``L_m^alpha(scale*x) = Gamma(alpha+1+m) sum phi_n (scale x)^n / (Gamma(1+m-n) Gamma(1+alpha+n))``."""
    m, alpha = AffineForm.of(m), AffineForm.of(alpha)
    n = AffineForm.of(index)
    term = BracketTerm(
        gamma_num=(alpha + m + 1,),
        gamma_den=(m + 1 - n, alpha + 1 + n),
        power_factors=((AffineForm.of(scale), n),),
        indicator_indices=(index,),
    )
    return BracketSeries((index,), term, x_power=n)


def series_gamma(beta, index: str) -> BracketSeries:
    """``Gamma(beta) = sum phi_j <beta + j>``."""
    return BracketSeries((index,), BracketTerm(indicator_indices=(index,)), (AffineForm.of(beta) + AffineForm.of(index),))


def series_laguerre_brackets(m, alpha, scale=1, indices: Sequence[str] = ("k1", "k2", "k3")) -> BracketSeries:
    """Laguerre function as a 3-index, 2-bracket series.

    Both gammas of ``Gamma(-m + k1) Gamma(-alpha - k1)`` are replaced by
    their own bracket series, which makes the index count exceed the
    bracket count by one.
    """
    m, alpha = AffineForm.of(m), AffineForm.of(alpha)
    k1, k2, k3 = indices
    pref = BracketTerm(
        gamma_num=(alpha + m + 1,),
        gamma_den=(m + 1, alpha + 1, -m, -alpha),
        power_factors=((AffineForm.of(scale), AffineForm.of(k1)),),
        indicator_indices=(k1,),
    )
    g2 = series_gamma(-m + AffineForm.of(k1), k2)
    g3 = series_gamma(-alpha - AffineForm.of(k1), k3)
    base = BracketSeries((k1,), pref, x_power=AffineForm.of(k1))
    return product(base, g2, g3)


def rule_p1_integrate(series: BracketSeries, extra_power=0) -> BracketSeries:
    """``int_0^inf x^{extra_power-1} * series dx``: the x exponent becomes a bracket."""
    br = series.x_power + AffineForm.of(extra_power)
    return BracketSeries(series.indices, series.term, series.brackets + (br,))


def rule_p2_multinomial(bases: Sequence, exponent, indices: Sequence[str] | None = None) -> BracketSeries:
    """``(a_1 + ... + a_r)^alpha`` as an r-fold bracket series.

    A base equal to :data:`X` contributes to the integration-variable power
    instead of a power factor.
    """
    if not bases:
        raise InvalidParam("multinomial needs at least one term")
    indices = tuple(indices) if indices else tuple(f"p{i + 1}" for i in range(len(bases)))
    if len(indices) != len(bases):
        raise InvalidParam("one index per multinomial term")
    alpha = AffineForm.of(exponent)
    powers = []
    xp = AffineForm()
    for base, idx in zip(bases, indices):
        if isinstance(base, str) and base == X:
            xp = xp + AffineForm.of(idx)
        else:
            powers.append((AffineForm.of(base), AffineForm.of(idx)))
    bracket = -alpha + sum((AffineForm.of(i) for i in indices), AffineForm())
    term = BracketTerm(gamma_den=(-alpha,), power_factors=tuple(powers), indicator_indices=indices)
    return BracketSeries(indices, term, (bracket,), xp)


@dataclass(frozen=True)
class SeriesRep:
    """A representation: brackets solved for all indices except ``free_indices``."""

    free_indices: tuple[str, ...]
    term_template: BracketTerm
    det_scale: Fraction
    solved_gammas: tuple[AffineForm, ...]
    solution: tuple[tuple[str, AffineForm], ...] = ()
    x_power: AffineForm = field(default_factory=AffineForm)

    @property
    def index(self) -> int:
        return len(self.free_indices)

    def full_term(self) -> BracketTerm:
        t = self.term_template
        return BracketTerm(t.const * self.det_scale, t.gamma_num + self.solved_gammas, t.gamma_den,
                           t.power_factors, t.indicator_indices)

    def dump(self) -> str:
        sol = ",".join(f"{n}*={v}" for n, v in self.solution)
        return f"free[{','.join(self.free_indices)}] solve[{sol}] scale={format_rational(self.det_scale)} {self.full_term().dump()}"


def _solve_linear(matrix: list[list[Fraction]], rhs: list[AffineForm]) -> tuple[Fraction, list[AffineForm]]:
    """Gauss-Jordan elimination over rationals with affine right-hand sides; returns ``(det, x)``."""
    n = len(matrix)
    a = [row[:] for row in matrix]
    b = list(rhs)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0), []
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = b[r] - b[col] * f
    return det, [b[i] * (1 / a[i][i]) for i in range(n)]


def rule_e2_solve(series: BracketSeries, free: Iterable[str] = ()) -> SeriesRep:
    """Solve the vanishing brackets for the non-free indices.

    Each solved index ``n_i`` loses its indicator and gains ``Gamma(-n_i*)``;
    the whole term is scaled by ``1/|det A|``.
    """
    free = tuple(i for i in series.indices if i in set(free))
    unknown = set(free) - set(series.indices)
    if unknown:
        raise InvalidParam(f"free indices {sorted(unknown)} are not summation indices")
    solved = [i for i in series.indices if i not in free]
    if len(solved) != len(series.brackets):
        raise InvalidParam(f"{len(solved)} solved indices for {len(series.brackets)} brackets")
    missing = set(solved) - set(series.term.indicator_indices)
    if missing:
        raise InvalidParam(f"solved indices {sorted(missing)} carry no indicator")
    matrix = [[b.coeff(i) for i in solved] for b in series.brackets]
    rhs = [-(b - sum((AffineForm.build({i: b.coeff(i)}) for i in solved), AffineForm())) for b in series.brackets]
    if solved:
        det, sol = _solve_linear(matrix, rhs)
    else:
        det, sol = Fraction(1), []
    if det == 0:
        raise SingularMatrix(f"bracket system singular in {solved}")
    mapping = dict(zip(solved, sol))
    for b in series.brackets:
        residue = b.subs(mapping)
        if not (residue.is_constant and residue.const == 0):
            raise AssertionError(f"bracket {b} not annihilated: {residue}")
    t = series.term.subs(mapping)
    t = replace(t, indicator_indices=tuple(i for i in t.indicator_indices if i in free))
    return SeriesRep(
        free_indices=free,
        term_template=t,
        det_scale=1 / abs(det),
        solved_gammas=tuple(-mapping[i] for i in solved),
        solution=tuple(mapping.items()),
        x_power=series.x_power.subs(mapping),
    )


def enumerate_representations(series: BracketSeries) -> list[tuple[SeriesRep, int]]:
    """Every choice of free indices with a non-singular complement."""
    if series.index < 0:
        raise NegativeIndex(f"{len(series.indices)} sums and {len(series.brackets)} brackets")
    reps = []
    for free in itertools.combinations(series.indices, series.index):
        try:
            rep = rule_e2_solve(series, free)
        except SingularMatrix:
            continue
        reps.append((rep, rep.index))
    reps.sort(key=lambda r: r[1])
    return reps


@dataclass(frozen=True)
class NonRationalValue:
    """``coefficient * prod Gamma(f)^e``: a closed form outside the rationals."""

    coefficient: EpsLaurent
    gammas: tuple[tuple[Fraction, int], ...]

    def __float__(self) -> float:
        out = float(self.coefficient.finite_value())
        for f, e in self.gammas:
            out *= math.gamma(float(f)) ** e
        return out

    def __str__(self) -> str:
        g = " * ".join(f"Gamma({format_rational(f)})^{e}" for f, e in self.gammas)
        return f"({self.coefficient}) * {g}"


@dataclass
class _Piece:
    const: Fraction
    num: list[AffineForm]
    den: list[AffineForm]
    powers: list[tuple[AffineForm, AffineForm]]

    def subs(self, mapping) -> "_Piece":
        return _Piece(
            self.const,
            [g.subs(mapping) for g in self.num],
            [g.subs(mapping) for g in self.den],
            [(b.subs(mapping), e.subs(mapping)) for b, e in self.powers],
        )


@dataclass
class _Partial:
    value: EpsLaurent | None = None
    residual: tuple = ()
    zero: bool = True

    def add(self, value: EpsLaurent, residual: tuple):
        if self.zero:
            self.value, self.residual, self.zero = value, residual, False
            return
        if residual != self.residual:
            raise Unsupported("terms carry different transcendental gamma factors")
        self.value = self.value + value


def _normalize_binding(v) -> AffineForm:
    if isinstance(v, tuple):
        q, c = v
        return AffineForm.build({EPS: c}, as_rational(q))
    if isinstance(v, EpsLaurent):
        co = v.coeffs
        if set(co) - {0, 1}:
            raise InvalidParam("a bound value must be linear in eps")
        return AffineForm.build({EPS: co.get(1, 0)}, co.get(0, 0))
    return AffineForm.of(as_rational(v))


def eval_rep(rep: SeriesRep, bindings: Mapping[str, object], order: int = DEFAULT_ORDER):
    """Evaluate a representation after binding every symbol.

    Free indices whose terms vanish beyond a cutoff are summed exactly.  A
    single remaining non-terminating index is summed only when it is a
    ``2F1`` at unit argument that converges in some region of the regulated
    parameters (Gauss' formula); anything else is :class:`Unsupported`, and
    a genuinely divergent Gauss sum is :class:`Divergent`.
    Returns an :class:`EpsLaurent`, or a :class:`NonRationalValue` when the
    closed form contains gamma values at non-integers.
    """
    mapping = {name: _normalize_binding(v) for name, v in bindings.items()}
    term = rep.full_term()
    free = list(rep.free_indices)
    powers = list(term.power_factors)
    den = list(term.gamma_den)
    for i in term.indicator_indices:
        den.append(AffineForm.of(i) + 1)
        powers.append((AffineForm.of(-1), AffineForm.of(i)))
    if X in mapping:
        powers.append((AffineForm.of(X), rep.x_power))
    elif not (rep.x_power.is_constant and rep.x_power.const == 0):
        raise InvalidParam("fragment still depends on x; bind 'x' or integrate first")
    piece = _Piece(term.const, list(term.gamma_num), den, powers).subs(mapping)
    unbound = set()
    for g in piece.num + piece.den:
        unbound |= g.names
    for b, e in piece.powers:
        unbound |= b.names | e.names
    unbound -= set(free) | {EPS}
    if unbound:
        raise InvalidParam(f"unbound symbols {sorted(unbound)}")
    acc = _Partial()
    _sum(piece, free, order, acc)
    if acc.zero:
        return EpsLaurent({}, order)
    if acc.residual:
        return NonRationalValue(acc.value, acc.residual)
    return acc.value


def _hyper_structure(piece: _Piece, idx: str):
    """Term ratio ``T(i+1)/T(i)`` as ``z * prod(i+top)/prod(i+bottom)``, or None."""
    tops, bottoms = [], []
    z = Fraction(1)
    for g in piece.num:
        c = g.coeff(idx)
        if c == 1:
            tops.append(g.without(idx))
        elif c == -1:
            bottoms.append(1 - g.without(idx))
            z = -z
        elif c:
            return None
    for g in piece.den:
        c = g.coeff(idx)
        if c == 1:
            bottoms.append(g.without(idx))
        elif c == -1:
            tops.append(1 - g.without(idx))
            z = -z
        elif c:
            return None
    for b, e in piece.powers:
        c = e.coeff(idx)
        if not c:
            continue
        if not b.is_constant or c.denominator != 1:
            return None
        if b.const == 0:
            return None
        z *= b.const ** int(c)
    return tops, bottoms, z


def _exact_int(form: AffineForm) -> int | None:
    if form.is_constant and form.const.denominator == 1:
        return int(form.const)
    return None


def _cutoff(structure) -> int | None:
    tops, bottoms, _ = structure
    cuts = [-v for v in map(_exact_int, tops) if v is not None and v <= 0]
    if not cuts:
        return None
    J = min(cuts)
    for b in bottoms:
        v = _exact_int(b)
        if v is not None and v <= 0 and -v < J:
            return None
    return J


def _sum(piece: _Piece, free: list[str], order: int, acc: _Partial) -> None:
    if not free:
        _evaluate(piece, order, acc)
        return
    structures = {i: _hyper_structure(piece, i) for i in free}
    for i in free:
        st = structures[i]
        J = _cutoff(st) if st is not None else None
        if J is not None:
            rest = [f for f in free if f != i]
            for j in range(J + 1):
                _sum(piece.subs({i: j}), rest, order, acc)
            return
    if len(free) > 1:
        raise Unsupported(f"no terminating index among {free}")
    i = free[0]
    st = structures[i]
    if st is None:
        raise Unsupported(f"sum over {i} is not hypergeometric")
    tops, bottoms, z = st
    tops, bottoms = list(tops), list(bottoms)
    one = next((k for k, b in enumerate(bottoms) if b.is_constant and b.const == 1), None)
    if one is None:
        tops.append(AffineForm.of(1))
    else:
        bottoms.pop(one)
    if not (len(tops) == 2 and len(bottoms) == 1 and z == 1):
        raise Unsupported(f"{len(tops)}F{len(bottoms)} at argument {z} has no closed summation here")
    a, b = (t.regulated() for t in tops)
    c = bottoms[0].regulated()
    gnum, gden = gauss_unit_gamma_args(a, b, c)
    base = piece.subs({i: 0})
    as_form = lambda qc: AffineForm.build({EPS: qc[1]}, qc[0])
    summed = _Piece(base.const, base.num + [as_form(g) for g in gnum], base.den + [as_form(g) for g in gden], base.powers)
    _evaluate(summed, order, acc)


def _evaluate(piece: _Piece, order: int, acc: _Partial) -> None:
    scale = piece.const
    leading = False
    for b, e in piece.powers:
        bq, bc = b.regulated()
        eq, ec = e.regulated()
        if bc:
            raise Unsupported("regulated power base")
        if bq == 1:
            continue
        if bq == 0:
            if eq > 0:
                return
            if eq == 0 and not ec:
                continue
            raise UncancelledPole("zero base to a non-positive power")
        if eq.denominator != 1:
            raise Unsupported(f"{format_rational(bq)}^{format_rational(eq)} is not rational")
        if ec:
            if bq < 0:
                raise Unsupported("negative base to a regulated power")
            leading = True
        scale *= bq ** int(eq)
    if scale == 0:
        return
    gp = gamma_product([g.regulated() for g in piece.num], [g.regulated() for g in piece.den], order)
    if gp.exact_zero:
        return
    value = gp.value * scale
    if leading:
        value = value.leading_only()
    acc.add(value, tuple(sorted(gp.residual.items())))


def evaluate_term(series: BracketSeries, values: Mapping[str, int], bindings: Mapping[str, object] | None = None,
                  order: int = DEFAULT_ORDER):
    """One term of ``series`` (indicators included, brackets and ``x`` power dropped)."""
    missing = set(series.indices) - set(values)
    if missing:
        raise InvalidParam(f"no value for indices {sorted(missing)}")
    rep = SeriesRep((), series.term, Fraction(1), ())
    fixed = {i: (v, 0) for i, v in values.items()}
    return eval_rep(rep, {**(bindings or {}), **fixed}, order)


def rule_e1(series: BracketSeries, bindings: Mapping[str, object] | None = None, order: int = DEFAULT_ORDER):
    """Ramanujan's master theorem: ``sum phi_n f(n) <a n + b> = f(n*) Gamma(-n*) / |a|``."""
    if len(series.indices) != 1 or len(series.brackets) != 1:
        raise InvalidParam("rule E1 needs exactly one index and one bracket")
    if series.brackets[0].coeff(series.indices[0]) == 0:
        raise SingularBracket(f"bracket <{series.brackets[0]}> does not involve {series.indices[0]}")
    return eval_rep(rule_e2_solve(series, ()), bindings or {}, order)


def hydrogen_integral_series() -> BracketSeries:
    """``int r^{2+2l+k} e^{-A r} L_{n-l-1}^{2l+1}(B r) L_{n-l-1}^{2l+1}(C r) dr`` as a bracket series."""
    n, l, k = (AffineForm.of(s) for s in "nlk")
    m = n - l - 1
    alpha = 2 * l + 1
    integrand = product(
        series_exp("A", "n1"),
        series_laguerre(m, alpha, "n2", "B"),
        series_laguerre(m, alpha, "n3", "C"),
    )
    return rule_p1_integrate(integrand, 3 + 2 * l + k)


def g_integral_series() -> BracketSeries:
    """``int r^{2+2l+k} e^{-2 mu r} L_{2s}^{a}(4 mu r) dr`` with the bracket form of the Laguerre function.

    The upper Laguerre parameter is the separate symbol ``a`` (``4l+2`` in
    the hydrogen problem) so that it can be regulated independently.
    """
    l, k, s, mu = (AffineForm.of(x) for x in ("l", "k", "s", "mu"))
    integrand = product(
        series_exp(2 * mu, "n1"),
        series_laguerre_brackets(2 * s, "a", 4 * mu, ("k1", "k2", "k3")),
    )
    return rule_p1_integrate(integrand, 3 + 2 * l + k)
