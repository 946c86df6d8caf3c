import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from bracketmoments.brackets import (
    X,
    AffineForm,
    BracketSeries,
    BracketTerm,
    NonRationalValue,
    enumerate_representations,
    eval_rep,
    evaluate_term,
    g_integral_series,
    hydrogen_integral_series,
    product,
    rule_e1,
    rule_e2_solve,
    rule_p1_integrate,
    rule_p2_multinomial,
    series_exp,
    series_laguerre,
    series_laguerre_brackets,
)
from bracketmoments.errors import InvalidParam, NegativeIndex, SingularBracket, SingularMatrix
from bracketmoments.hydrogen import moment_theorem_f3, norm_const_sq
from bracketmoments.oracle import oracle_g
from bracketmoments.special import laguerre

A = AffineForm.of


def beta_series():
    return rule_p1_integrate(rule_p2_multinomial([1, X], -A("a"), ("p1", "p2")), "s")


def hydrogen_bind(n, l, k, mu=1):
    m = 2 * F(mu)
    return {"n": n, "l": l, "k": (k, 1), "A": m, "B": m, "C": m}


def test_affine_form_algebra():
    f = A("n1") * 2 + A("s") - 3
    assert f.coeff("n1") == 2 and f.const == -3
    assert (f - f).is_constant and (f - f).const == 0
    assert f.subs({"n1": A("m") + 1}) == A("m") * 2 + A("s") - 1
    assert str(A("n1") - A("k") * F(1, 2) + 3) == "-1/2*k + n1 + 3"


def test_exp_fragment_terms():
    assert evaluate_term(series_exp(1), {"n1": 3}) == F(-1, 6)
    s = series_exp(A("mu") * 2)
    assert s.term.power_factors == ((A("mu") * 2, A("n1")),)
    assert evaluate_term(s, {"n1": 2}, {"mu": 3}) == 18  # (6)^2/2!


def test_laguerre_fragment_terms():
    frag = series_laguerre(1, 1)
    values = [evaluate_term(frag, {"n2": j}) for j in range(4)]
    assert values == [2, -1, 0, 0]


@given(st.integers(0, 5), st.sampled_from([F(0), F(1), F(3, 2), F(4)]))
@settings(max_examples=30, deadline=None)
def test_laguerre_fragment_matches_coefficients(m, alpha):
    frag = series_laguerre(m, alpha)
    coeffs = laguerre(m, alpha).coeffs
    for j in range(m + 3):
        want = coeffs[j] if j < len(coeffs) else 0
        assert evaluate_term(frag, {"n2": j}) == want


def test_p1_brackets():
    s = rule_p1_integrate(series_exp(1), "s")
    assert len(s.indices) == 1 and s.brackets == (A("n1") + A("s"),)
    assert rule_p1_integrate(product(), "s").brackets == (A("s"),)
    h = hydrogen_integral_series()
    assert h.brackets == (A("n1") + A("n2") + A("n3") + A("l") * 2 + A("k") + 3,)


def test_p2_single_term():
    s = rule_p2_multinomial(["b"], "alpha", ("p1",))
    rep = rule_e2_solve(s, ())
    assert dict(rep.solution)["p1"] == A("alpha")


def test_beta_integral():
    rep = rule_e2_solve(beta_series(), ())
    assert rep.det_scale == 1
    assert eval_rep(rep, {"s": 1, "a": 2}).finite_value() == 1
    for s in range(1, 5):
        for a in range(s + 1, 8):
            want = F(math.factorial(s - 1) * math.factorial(a - s - 1), math.factorial(a - 1))
            assert eval_rep(rep, {"s": s, "a": a}).finite_value() == want


def test_beta_half_is_symbolic_pi():
    v = eval_rep(rule_e2_solve(beta_series(), ()), {"s": F(1, 2), "a": 1})
    assert isinstance(v, NonRationalValue)
    assert v.gammas == ((F(1, 2), 2),)
    assert float(v) == pytest.approx(math.pi, rel=1e-14)


def test_rule_e1():
    plain = lambda br: BracketSeries(("n",), BracketTerm(indicator_indices=("n",)), (br,))
    for s in range(1, 7):
        assert rule_e1(plain(A("n") + s)).finite_value() == math.factorial(s - 1)
    assert rule_e1(plain(A("n") * 2 + 4)).finite_value() == F(1, 2)
    with pytest.raises(SingularBracket):
        rule_e1(plain(A(1)))


def test_e2_solve_n3():
    rep = rule_e2_solve(hydrogen_integral_series(), ("n1", "n2"))
    t = A("l") * 2 + A("k") + 3
    assert dict(rep.solution)["n3"] == -t - A("n1") - A("n2")
    assert rep.solved_gammas == (t + A("n1") + A("n2"),)
    assert rep.det_scale == 1


def test_e2_singular():
    s = BracketSeries(("a", "b"), BracketTerm(indicator_indices=("a", "b")),
                      (A("a") + A("b") + 1, A("a") * 2 + A("b") * 2 + 3))
    with pytest.raises(SingularMatrix):
        rule_e2_solve(s, ())


def test_e2_resubstitution_identity():
    for series in (hydrogen_integral_series(), g_integral_series(), beta_series()):
        for rep, _ in enumerate_representations(series):
            sol = dict(rep.solution)
            for b in series.brackets:
                r = b.subs(sol)
                assert r.is_constant and r.const == 0


def test_enumerate_counts():
    reps = enumerate_representations(hydrogen_integral_series())
    assert [idx for _, idx in reps] == [2, 2, 2]
    e1 = BracketSeries(("n",), BracketTerm(indicator_indices=("n",)), (A("n") + 1,))
    assert [idx for _, idx in enumerate_representations(e1)] == [0]
    neg = BracketSeries(("n",), BracketTerm(indicator_indices=("n",)), (A("n") + 1, A("n") + 2))
    with pytest.raises(NegativeIndex):
        enumerate_representations(neg)


def test_invalid_series():
    with pytest.raises(InvalidParam):
        BracketSeries(("n",), BracketTerm(indicator_indices=("n",)), (A(0),))
    with pytest.raises(InvalidParam):
        BracketSeries(("n",), BracketTerm(indicator_indices=("m",)))


def test_dump_is_canonical():
    assert hydrogen_integral_series().dump() == (
        "sum[n1,n2,n3] const=1 num=[G(l + n + 1),G(l + n + 1)] "
        "den=[G(-l + n - n2),G(2*l + n2 + 2),G(-l + n - n3),G(2*l + n3 + 2)] "
        "pow=[(A)^(n1),(B)^(n2),(C)^(n3)] phi=[n1,n2,n3] brackets=[<k + 2*l + n1 + n2 + n3 + 3>]"
    )


def test_solve_n3_example():
    rep = rule_e2_solve(hydrogen_integral_series(), ("n1", "n2"))
    integral = eval_rep(rep, hydrogen_bind(2, 0, 1)).finite_value()
    assert norm_const_sq(2, 0, 1) * integral == 3


@pytest.mark.parametrize("n", range(1, 5))
def test_all_representations_agree_with_closed_form(n):
    series = hydrogen_integral_series()
    reps = enumerate_representations(series)
    for l in range(n):
        for k in range(-2 * l - 2, 5):
            want = moment_theorem_f3(n, l, k, 1).value
            for rep, _ in reps:
                got = eval_rep(rep, hydrogen_bind(n, l, k)).finite_value() * norm_const_sq(n, l, 1) * 4 ** l
                assert got == want, (n, l, k, rep.free_indices)


def test_index_order_does_not_matter():
    h = hydrogen_integral_series()
    perm = BracketSeries(("n3", "n1", "n2"), h.term, h.brackets)
    for free in (("n1", "n2"), ("n2", "n3")):
        a = eval_rep(rule_e2_solve(h, free), hydrogen_bind(3, 1, 2)).finite_value()
        b = eval_rep(rule_e2_solve(perm, free), hydrogen_bind(3, 1, 2)).finite_value()
        assert a == b


@pytest.mark.parametrize("free", ["k1", "k2"])
def test_laguerre_bracket_form_at_a_point(free):
    frag = series_laguerre_brackets(3, F(1, 2))
    rep = rule_e2_solve(frag, (free,))
    assert eval_rep(rep, {X: 2}).finite_value() == laguerre(3, F(1, 2))(2)


def test_g_via_t2_representation():
    series = g_integral_series()
    rep = rule_e2_solve(series, ("k2",))
    bind = {"l": 0, "k": (0, 1), "s": 1, "mu": F(1, 2), "a": (2, 2)}
    assert eval_rep(rep, bind).finite_value() == 12 == oracle_g(0, 0, 1, F(1, 2))
