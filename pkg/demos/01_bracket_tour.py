"""A walk through the method of brackets on small integrals.

Run with ``python demos/01_bracket_tour.py``.
"""
from fractions import Fraction as F

from bracketmoments.brackets import (
    X,
    AffineForm,
    enumerate_representations,
    eval_rep,
    hydrogen_integral_series,
    rule_e1,
    rule_e2_solve,
    rule_p1_integrate,
    rule_p2_multinomial,
    series_exp,
    series_laguerre_brackets,
)
from bracketmoments.special import laguerre

# The exponential expands as sum phi_n a^n x^n.  Integrating x^{s-1} e^{-x}
# turns the power of x into the bracket <n + s>, and Ramanujan's master
# theorem (rule E1) evaluates it to Gamma(s).
gamma_series = rule_p1_integrate(series_exp(1), "s")
print(gamma_series.dump())
for s in range(1, 6):
    print(f"  Gamma({s}) =", rule_e1(gamma_series, {"s": s}).finite_value())

# A multinomial power gives one index per term and one bracket.  With the
# integral there are two brackets and two indices, so the answer is unique.
beta = rule_p1_integrate(rule_p2_multinomial([1, X], -AffineForm.of("a"), ("p1", "p2")), "s")
rep = rule_e2_solve(beta, ())
print("\nint_0^inf x^(s-1) (1+x)^(-a) dx")
print(" ", rep.dump())
print("  s=1, a=2:", eval_rep(rep, {"s": 1, "a": 2}).finite_value())
half = eval_rep(rep, {"s": F(1, 2), "a": 1})
print("  s=1/2, a=1:", half, "=", float(half))  # pi, kept symbolic

# The Laguerre function can itself be written with three indices and two
# brackets.  Leaving k1 or k2 free gives two different finite sums for the
# same polynomial value.
frag = series_laguerre_brackets(3, F(1, 2))
for free in ("k1", "k2"):
    r = rule_e2_solve(frag, (free,))
    print(f"\nL_3^(1/2)(2) with {free} free:", eval_rep(r, {X: 2}).finite_value())
print("direct coefficients:       ", laguerre(3, F(1, 2))(2))

# The hydrogen integrand: one exponential and two Laguerre functions give
# three indices and a single bracket, hence three index-2 representations.
h = hydrogen_integral_series()
print("\n" + h.dump())
bind = {"n": 3, "l": 1, "k": (2, 1), "A": 2, "B": 2, "C": 2}
for r, idx in enumerate_representations(h):
    print(f"  free {r.free_indices} (index {idx}):", eval_rep(r, bind).finite_value())
