"""Exact radial moments of hydrogen by the method of brackets and hypergeometric closed forms."""
from .errors import *  # noqa: F401,F403
from .exactnum import EpsLaurent, Rational, format_rational, gamma_product, gamma_ratio_reg, parse_rational, pochhammer
from .hydrogen import (
    Method,
    MomentQuery,
    MomentResult,
    compute,
    example_closed_forms,
    g_integral_form_a,
    g_integral_form_b,
    moment_bracket,
    moment_direct_sum,
    moment_hahn,
    moment_theorem_f3,
    norm_const_sq,
    radial_wavefunction,
)
from .oracle import oracle_g, oracle_moment

__version__ = "0.1.0"
