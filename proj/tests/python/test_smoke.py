from fractions import Fraction

import pytest

import qreal_lab as ql


def test_q_rational_five_thirds():
    num, den, _ = ql.q_rational(Fraction(5, 3))
    assert num == [1, 1, 2, 1]
    assert den == [1, 1, 1]


def test_q_rational_series_specializes_at_one():
    s = ql.q_rational_series("7/4", 12)
    assert s.valuation == 0
    assert s.order == 12
    assert s.coefficient(0) == 1


def test_golden_ratio_quadratic():
    cf = ql.q_real_cf([1], [1], order=20)
    alg = ql.q_real([1, -1, -1], (1, 2), order=20)
    assert cf == alg
    closed = ql.quadratic_closed([1, -1, -1], (1, 2), order=20)
    assert closed["series"].coeffs[: 20 - closed["series"].valuation] == alg.coeffs[: 20 - alg.valuation]


def test_heptagon_roots_and_vieta():
    roots = ql.cubic_roots("plus", -1, order=20)
    assert len(roots) == 3
    product, pairs = ql.vieta_residuals("plus", -1, order=20)
    assert product.is_zero()
    assert pairs.is_zero()


def test_nonagon_b_routes_agree():
    by_sum = ql.b_series("minus", 0, order=20)
    by_defect = ql.b_series("minus", 0, order=20, route="defect")
    assert by_sum.coeffs == by_defect.coeffs


def test_c_table_first_row_is_one():
    s = ql.q_rational_series("5/3", 24)
    table = ql.c_table(s, 4, 4)
    assert table[0] == [1] * 5


def test_fig_export_covers_every_exponent():
    s = ql.q_rational_series("5/3", 10)
    points = ql.fig_export(s)
    assert [p[0] for p in points] == list(range(1, s.order - s.valuation + 1))
    assert [p[1] for p in points] == list(s.coeffs)


def test_beyond_order_raises():
    s = ql.q_rational_series("2", 5)
    with pytest.raises(ql.InsufficientPrecision):
        s.coefficient(5)


def test_invalid_input_is_value_error():
    with pytest.raises(ValueError):
        ql.q_rational("1/0")
    with pytest.raises(ValueError):
        ql.q_real([1, -1, -1], (0, 1))


def test_budget_exhaustion():
    with pytest.raises(ql.QRealError):
        ql.q_real_cf([1], [1], order=40, budget=3)


def test_word_matrix():
    assert ql.word_matrix_q("T")
    assert "T" in ql.decompose_psl2z(1, 1, 0, 1)
