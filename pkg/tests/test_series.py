from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from treelang import series
from treelang.series import CoefficientSeries as S
from treelang.verify import golden_equation_text, render_certificate, star_norm_certificate


def test_arithmetic():
    a, b = S.of([1, 2, 3]), S.of([0, 1, 1])
    assert (a + b).to_list() == [1, 3, 4]
    assert (a - b).to_list() == [1, 1, 2]
    assert (a * b).to_list() == [0, 1, 3]
    assert (1 - b).to_list() == [1, -1, -1]
    assert (b ** 2).to_list() == [0, 0, 1]
    assert a.theta().to_list() == [0, 2, 6]
    assert a.derivative().to_list() == [2, 6]
    assert a.substitute_scalar(2).to_list() == [1, 4, 12]
    with pytest.raises(series.TruncationError):
        a + S.of([1])
    with pytest.raises(series.TruncationError):
        a.truncate(5)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8).filter(lambda c: c[0] != 0))
def test_reciprocal(coeffs):
    a = S.of(coeffs)
    assert (a * a.reciprocal()).to_list() == S.one(a.order).to_list()


def test_reciprocal_needs_unit():
    with pytest.raises(ZeroDivisionError):
        S.of([0, 1]).reciprocal()


def test_geometric_series():
    assert (1 - S.t(5)).reciprocal().to_list() == [1] * 6


def test_catalan_closed_form():
    assert series.catalan_closed_form(8).to_list() == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    assert series.sqrt_one_minus_4t(3).to_list() == [1, -2, -2, -4]


def test_hilbert_dyck_statistics():
    assert series.hilbert_dyck(series.TRIVIAL, 6).to_list() == [1, 1, 2, 5, 14, 42, 132]
    assert series.hilbert_dyck(series.EDGES, 4).to_list() == [0, 1, 4, 15, 56]
    assert series.hilbert_dyck(series.SUBTREES, 3).to_list() == [1, 3, 12, 52]


def test_star_norm_formula_matches_enumeration():
    assert series.star_norm_series(10) == series.hilbert_dyck(series.STAR_NORM, 10)
    assert series.star_norm_series(6).to_list() == [0, 0, 2, 12, 56, 240, 990]


def test_configuration_series_splits():
    assert series.configuration_series(8) == series.hilbert_dyck(series.CONFIGURATION, 8)


def test_leaf_bounded_series():
    assert series.s_l_series(2, 6).to_list() == [1, 3, 12, 30, 60, 105, 168]
    assert series.kl_module_series(2, 6).to_list() == [0, 0, 2, 9, 24, 50, 90]
    assert series.kl_module_series(3, 6).to_list() == [0, 0, 2, 17, 88, 320, 914]
    with pytest.raises(ValueError):
        series.s_l(1)


def test_binomial_path_formula():
    assert [series.binomial_path_formula(n) for n in range(5)] == [1, 3, 12, 30, 60]


def test_guess_catalan():
    eq = series.guess_algebraic(series.catalan_series(12), 2, 2, 3)
    assert str(eq) == "t*F^2 - F + 1 = 0"
    assert not any(eq.residual(series.catalan_series(30)).coeffs)


def test_guess_rational_series():
    # 1/(1-2t) satisfies (2t - 1) F + 1 = 0
    s = (1 - S.t(12).scale(2)).reciprocal()
    eq = series.guess_algebraic(s, 2, 2, 3)
    assert eq.as_dict() == {(1, 1): 2, (0, 1): -1, (0, 0): 1}


def test_guess_gives_up_on_factorials():
    fact = [1]
    for n in range(1, 30):
        fact.append(fact[-1] * n)
    assert series.guess_algebraic(S.of(fact), 2, 2, 5) is None


def test_guess_needs_enough_terms():
    with pytest.raises(series.TruncationError):
        series.guess_algebraic(series.catalan_series(5), 2, 2, 3)


def test_equation_printing():
    eq = series.AlgebraicEquation(((2, 1, -3), (0, 0, 1)), 2, 1)
    assert str(eq) == "-3*t^2*F + 1 = 0"


def test_star_norm_certificate_is_stable():
    eq = star_norm_certificate()
    assert render_certificate(eq) == golden_equation_text()
    # the equation keeps holding far beyond the terms used to find it
    assert not any(eq.residual(series.star_norm_series(60)).coeffs)


def test_fractions_reduce_to_ints():
    r = S.of([2, 1]).reciprocal()
    assert r.to_list() == [Fraction(1, 2), Fraction(-1, 4)]
