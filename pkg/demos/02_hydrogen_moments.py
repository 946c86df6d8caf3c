"""Radial moments <r^k> of hydrogen by five independent routes.

Run with ``python demos/02_hydrogen_moments.py``.
"""
from fractions import Fraction as F

from bracketmoments.hydrogen import METHODS, Method, MomentQuery, g_integral_form_a, g_integral_form_b
from bracketmoments.oracle import oracle_g, oracle_moment

q = MomentQuery(n=3, l=1, k=2, mu=F(1, 3))
print(f"<r^{q.k}> for n={q.n}, l={q.l}, mu={q.mu}")
for m in Method:
    r = METHODS[m](q)
    flag = "  (regularized)" if r.degenerate_regularized else ""
    print(f"  {m.value:15s} {r.value}{flag}")

# A small table at mu = 1.  Rows are exact rationals.
print("\n n  l |" + "".join(f"{k:>9d}" for k in range(-2, 4)))
for n in range(1, 4):
    for l in range(n):
        row = []
        for k in range(-2, 4):
            row.append(str(oracle_moment(n, l, k, 1)) if 2 * l + k + 3 > 0 else "-")
        print(f" {n}  {l} |" + "".join(f"{v:>9s}" for v in row))

# Textbook identities fall out of the exact values.
n, l, mu = 4, 2, F(1)
print("\n<r>     =", oracle_moment(n, l, 1, mu), " vs (3n^2 - l(l+1))/(2n mu) =", F(3 * n * n - l * (l + 1), 2 * n) / mu)
print("<1/r>   =", oracle_moment(n, l, -1, mu), " vs mu/n =", mu / n)
print("<1/r^2> =", oracle_moment(n, l, -2, mu), " vs mu^2/(n(l+1/2)) =", mu * mu / (n * (l + F(1, 2))))

# Real powers go through float gamma values.
for k in (-1.5, 0.5, 2.7):
    d = METHODS[Method.DIRECT_SUM](MomentQuery(2, 1, k, 1)).value
    print(f"\n<r^{k}>_21: direct sum {d:.15g}  oracle {oracle_moment(2, 1, k, 1):.15g}", end="")
print()

# The auxiliary integral G has two closed forms; the second needs a
# regulator whenever its bottom parameter reaches zero early.
for l, k, s in [(0, 0, 1), (1, -4, 2), (2, -3, 3)]:
    print(f"G_{{{l},{k},{s}}}(1/2):", g_integral_form_a(l, k, s, F(1, 2)), g_integral_form_b(l, k, s, F(1, 2)),
          oracle_g(l, k, s, F(1, 2)))
