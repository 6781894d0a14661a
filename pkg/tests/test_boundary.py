from fractions import Fraction

import pytest

from boundary import (
    aggregation_check,
    coset_representatives,
    cuspidal_matrix,
    divisor_of_discriminant,
    exact_determinant,
    frobenius_det_crosscheck,
    ord_canonical_delta,
    ord_discriminant,
    ord_discriminant_twisted,
    ord_division_form,
    ord_higher_eisenstein,
    ramification_index,
)
from rings import parse_element, parse_ideal
from utils.errors import ConsistencyError, ParameterError


def test_discriminant_orders_on_the_curve(elliptic2):
    n = parse_ideal(elliptic2, "P(0,0)")
    group = elliptic2.picard_group()
    trivial = group.identity()
    assert int(ord_discriminant(elliptic2, n, trivial, 2)) == 6
    assert int(ord_discriminant(elliptic2, n, n, 2)) == 1
    report = ord_discriminant(elliptic2, n, trivial, 2)
    assert report.unit == "u"
    assert [v for _, v in report.zeta_values] == [Fraction(-2, 3), Fraction(-5, 3)]


def test_discriminant_divisor(elliptic2):
    n = parse_ideal(elliptic2, "P(0,0)")
    divisor = divisor_of_discriminant(elliptic2, n, elliptic2.unit_ideal(), 2)
    assert [c for _, c in divisor.items()] == [6, 1, 2]
    assert divisor.total() == 9
    for cls, c in divisor.items():
        assert c == int(ord_discriminant(elliptic2, n, cls, 2))


def test_twisting_permutes_the_orders(elliptic2):
    n = parse_ideal(elliptic2, "P(0,0)")
    b = parse_ideal(elliptic2, "P(0,1)")
    for cls in elliptic2.picard_group().classes():
        twisted = ord_discriminant_twisted(elliptic2, n, b, cls, 2)
        shifted = ord_discriminant(elliptic2, n, cls * elliptic2.ideal_class(b), 2)
        assert twisted.order == shifted.order


@pytest.mark.parametrize("r", [2, 3, 4])
def test_discriminant_orders_are_positive_integers(any_ring, r):
    n = next(I for d in range(1, 4) for I in any_ring.effective_ideals_of_degree(d))
    for cls in any_ring.picard_group().classes():
        report = ord_discriminant(any_ring, n, cls, r)
        assert report.integral and report.order > 0


def test_discriminant_order_over_a_polynomial_ring(poly2):
    T = poly2.ideal_of_poly("T")
    assert int(ord_discriminant(poly2, T, poly2.picard_group().identity(), 2)) == 1


def test_rank_and_level_are_validated(poly2):
    identity = poly2.picard_group().identity()
    with pytest.raises(ParameterError):
        ord_discriminant(poly2, poly2.ideal_of_poly("T"), identity, 1)
    with pytest.raises(ParameterError):
        ord_discriminant(poly2, poly2.unit_ideal(), identity, 2)


def test_ramification_index(poly2, poly3):
    assert ramification_index(poly2, poly2.ideal_of_poly("T"), 2) == 2
    assert ramification_index(poly3, poly3.ideal_of_poly("T"), 2) == 6
    assert ramification_index(poly2, poly2.ideal_of_poly("T^2"), 3) == 16


def test_discriminant_orders_in_t_n_units(poly2, elliptic2):
    T = poly2.ideal_of_poly("T")
    report = ord_discriminant(poly2, T, poly2.picard_group().identity(), 2)
    assert report.ramification == ramification_index(poly2, T, 2) == 2
    assert report.order_t_n == 2
    n = parse_ideal(elliptic2, "P(0,0)")
    orders = [ord_discriminant(elliptic2, n, cls, 2).order_t_n for cls in elliptic2.picard_group().classes()]
    assert orders == [12, 2, 4]


def test_only_u_and_t_n_orders_convert(poly2):
    n = poly2.ideal_of_poly("T")
    division = ord_division_form(poly2, poly2.unit_ideal(), n, parse_element(poly2, "1/T"), 2)
    assert division.order_t_n == division.order == 1
    canonical = ord_canonical_delta(poly2, poly2.picard_group().identity(), 2).report
    with pytest.raises(ParameterError):
        canonical.order_t_n


def test_division_form_orders(poly2):
    n = poly2.ideal_of_poly("T")
    a = poly2.unit_ideal()
    report = ord_division_form(poly2, a, n, parse_element(poly2, "1/T"), 2)
    assert report.unit == "t_n"
    assert report.order == 1
    assert ord_division_form(poly2, a, n, parse_element(poly2, "1"), 2).order == 0
    with pytest.raises(ParameterError):
        ord_division_form(poly2, a, n, parse_element(poly2, "1/T^2"), 2)


def test_higher_eisenstein_scales_by_gamma(poly3):
    n = poly3.ideal_of_poly("T")
    a = poly3.unit_ideal()
    u1 = parse_element(poly3, "1/T")
    base = ord_division_form(poly3, a, n, u1, 2).order
    # G_k = X^k for k <= q
    assert ord_higher_eisenstein(poly3, a, n, u1, 2, 2).order == 2 * base
    with pytest.raises(ParameterError):
        ord_higher_eisenstein(poly3, a, n, u1, 0, 2)


def test_aggregation_over_f2(poly2):
    report = aggregation_check(poly2, poly2.ideal_of_poly("T"), 2)
    assert report.sum_u1 == 1
    assert report.sum_all_u == 2
    assert report.ramification == 2
    assert report.ord_u == 1
    assert report.holds


@pytest.mark.parametrize("level", ["T", "T^2+T+1", "T^2"])
def test_aggregation_holds(poly3, level):
    assert aggregation_check(poly3, poly3.ideal_of_poly(level), 2).holds


def test_coset_representatives(poly3, elliptic2):
    n = poly3.ideal_of_poly("T^2")
    a = poly3.unit_ideal()
    reps = coset_representatives(poly3, a, n)
    assert len(reps) == 9
    assert reps[0].is_zero()
    for i, x in enumerate(reps):
        for y in reps[:i]:
            assert not poly3.contains(a, x - y)
    P = parse_ideal(elliptic2, "P(0,0)")
    assert len(coset_representatives(elliptic2, elliptic2.unit_ideal(), P)) == 2


def test_canonical_delta(elliptic2, poly2, shifted2):
    out = ord_canonical_delta(elliptic2, elliptic2.picard_group().identity(), 2)
    assert int(out.report) == 5
    assert (out.certificate.d, out.certificate.d_prime) == (2, 3)
    assert out.weight == 3
    out = ord_canonical_delta(poly2, poly2.picard_group().identity(), 2)
    assert int(out.report) == 1
    assert (out.certificate.d, out.certificate.d_prime) == (1, 2)
    out = ord_canonical_delta(shifted2, shifted2.picard_group().identity(), 2)
    assert (out.certificate.d, out.certificate.d_prime) == (2, 4)
    assert out.type_h == 0


def test_cuspidal_matrix_on_the_curve(elliptic2):
    mat = cuspidal_matrix(elliptic2, 2)
    assert mat.rows == ["O", "(0,0)", "(0,1)"]
    assert mat.entries == [[25, 6, 6], [10, 1, 2], [10, 2, 1]]
    assert mat.determinant == 45
    assert mat.index == 45
    assert "25" in mat.format()


def test_cuspidal_matrix_with_shifted_infinity(shifted2):
    mat = cuspidal_matrix(shifted2, 2)
    assert mat.entries == [[9, 2], [6, 1]]
    assert mat.determinant == -3


def test_cuspidal_matrix_rejects_bad_representatives(elliptic2):
    P = parse_ideal(elliptic2, "P(0,0)")
    with pytest.raises(ParameterError):
        cuspidal_matrix(elliptic2, 2, reps=[P, P, P])
    with pytest.raises(ParameterError):
        cuspidal_matrix(elliptic2, 2, reps=[elliptic2.unit_ideal(), P, parse_ideal(elliptic2, "P(0,1)")])


def test_frobenius_determinant_on_the_curve(elliptic2):
    check = frobenius_det_crosscheck(elliptic2, 2)
    assert abs(check.det_N) == 3
    assert check.l_product == -3
    assert check.match and check.nonvanishing
    assert [str(v) for _, v in check.l_values] == ["-3", "-1", "-1"]


def test_frobenius_determinant_with_shifted_infinity(shifted2):
    check = frobenius_det_crosscheck(shifted2, 2)
    assert check.det_N == Fraction(1, 5)
    assert check.match


@pytest.mark.slow
@pytest.mark.parametrize("r", [2, 3])
def test_frobenius_determinant_on_larger_groups(elliptic2_h4, elliptic3, r):
    for ring in (elliptic2_h4, elliptic3):
        check = frobenius_det_crosscheck(ring, r)
        assert check.match
        assert cuspidal_matrix(ring, r).determinant != 0


def test_exact_determinant():
    assert exact_determinant([[Fraction(1, 2), 1], [1, 2]]) == 0
    assert exact_determinant([[2, 1], [1, 1]]) == 1
    assert exact_determinant([]) == 1


def test_non_integral_orders_raise(monkeypatch, elliptic2):
    import boundary.orders as orders

    monkeypatch.setattr(orders, "_special", lambda ring, cls, r: ("z", Fraction(1, 3)))
    with pytest.raises(ConsistencyError):
        ord_discriminant(elliptic2, parse_ideal(elliptic2, "P(0,0)"), elliptic2.picard_group().identity(), 2)


def test_a_vanishing_l_value_raises(monkeypatch, elliptic2):
    import boundary.matrix as matrix

    original = matrix.l_function

    class Vanishing:
        def __init__(self, l_function):
            self.l_function = l_function

        def special_value(self, r):
            value = self.l_function.special_value(r)
            return value - value

    monkeypatch.setattr(matrix, "l_function", lambda ring, chi: Vanishing(original(ring, chi)))
    with pytest.raises(ConsistencyError, match="= 0"):
        frobenius_det_crosscheck(elliptic2, 2)
