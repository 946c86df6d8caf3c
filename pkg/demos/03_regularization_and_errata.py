"""Where the closed forms need care: singular gammas and two misprints.

Run with ``python demos/03_regularization_and_errata.py``.
"""
from fractions import Fraction as F

from bracketmoments.exactnum import EpsLaurent, gamma_ratio_reg
from bracketmoments.hydrogen import (
    example2_corrected,
    example2_paper,
    hahn_negative_k_as_printed,
    moment_hahn,
    moment_theorem_f3,
)
from bracketmoments.oracle import oracle_moment
from bracketmoments.special import HypSeriesSpec, eval_terminating_pfq

# The 3F2 closed form at (n, l, k) = (3, 0, 0): Gamma(-1-k) has a pole and
# the bottom parameter l+k+3-n is zero.  Shifting k -> k + eps turns both
# into Laurent series whose product is finite.
n, l, k = 3, 0, 0
ratio = gamma_ratio_reg(n - l - k - 2, -1 - k, -1, 4)
series = eval_terminating_pfq(
    HypSeriesSpec([k + 2, 1 + l - n, 2 * l + k + 3], [2 * l + 2, EpsLaurent.shifted(l + k + 3 - n, 1, 6)], 1, 4))
print("gamma ratio :", ratio)
print("3F2 series  :", series)
print("product     :", ratio * series)
print("moment      :", moment_theorem_f3(n, l, k, 1).value, "(oracle", oracle_moment(n, l, k, 1), ")")

# The Hahn route for negative powers: the printed version misses the ratio
# Gamma(2l+k+3)/Gamma(2l-k).
print("\n(n, l, k)   printed   corrected   oracle")
for n, l, k in [(2, 1, -2), (3, 1, -3), (3, 2, -4), (4, 2, -5)]:
    print(f"{(n, l, k)!s:11s} {str(hahn_negative_k_as_printed(n, l, k, 1)):9s} "
          f"{str(moment_hahn(n, l, k, 1).value):11s} {oracle_moment(n, l, k, 1)}")

# The l = n-2 closed form as printed fails normalization; dividing by n
# repairs it for every n and k checked.
print("\n n  k   printed  corrected  oracle")
for n in (2, 3, 4):
    for k in (0, 1, 2):
        print(f" {n}  {k}  {str(example2_paper(n, k, 1)):8s} {str(example2_corrected(n, k, 1)):10s} {oracle_moment(n, n - 2, k, 1)}")
