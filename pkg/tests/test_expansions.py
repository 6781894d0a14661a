import pytest

from arith import FqFraction, finite_field, graded_weight_check
from expansions import (
    DrinfeldModuleCoeffs,
    ExpCoeffs,
    bracket,
    canonical_delta_exponents,
    carlitz_exp_coeffs,
    commutation_residuals,
    compare_routes,
    delta_product_series,
    delta_via_eisenstein_series,
    exp_from_module,
    gamma,
    gcd_identity_value,
    goss_polys,
    relations_solver,
    s_polynomial,
    t_level_relation,
)
from utils.errors import ParameterError


def T(q):
    return FqFraction.T(finite_field(q))


# the discriminant Delta_T


def test_two_routes_agree_over_f2():
    product = delta_product_series(2, 8)
    eisenstein = delta_via_eisenstein_series(2, 8)
    comparison = compare_routes(product, eisenstein)
    assert comparison.equal
    assert comparison.first_difference is None


@pytest.mark.slow
def test_two_routes_agree_over_f3():
    assert compare_routes(delta_product_series(3, 27), delta_via_eisenstein_series(3, 27)).equal


@pytest.mark.parametrize("q", [2, 3])
def test_discriminant_leading_term(q):
    delta = delta_product_series(q, q**2)
    assert delta.valuation == q - 1
    assert delta.series.leading_coefficient() == -1
    assert delta.weight == q**2 - 1
    assert delta.pi_bar_exponent == q**2 - 1


def test_expansion_range_is_validated():
    with pytest.raises(ParameterError):
        delta_product_series(7, 49)
    with pytest.raises(ParameterError):
        delta_product_series(2, 1)
    with pytest.raises(ParameterError):
        delta_via_eisenstein_series(2, 9)


# reciprocal polynomials


def test_s_polynomial_of_t():
    s = s_polynomial(2, "T")
    assert s.terms == {0: 1, 1: T(2)}
    assert s.violations() == []
    assert s_polynomial(2, "T", level="T").terms[1] == T(2) ** 2
    assert s_polynomial(3, "T").exponents() == [2]


def test_s_polynomial_of_t_squared():
    # rho_{T^2} = T^2 + (T + T^2) tau + tau^2
    s = s_polynomial(2, "T^2")
    assert s.exponents() == [2, 3]
    assert s.terms[3] == T(2) ** 2
    assert s.terms[2] == T(2) ** 2 + T(2)
    assert s.violations() == []


def test_s_polynomial_rejects_bad_input():
    with pytest.raises(ParameterError):
        s_polynomial(3, "2*T")
    with pytest.raises(ParameterError):
        s_polynomial(2, "T", rank=1)


def test_symbolic_s_polynomial_weights():
    s = s_polynomial(2, "T", rank=3)
    assert s.symbolic
    assert s.exponents() == [2, 3]
    assert s.violations() == []
    assert graded_weight_check(s.terms[3]).weight == -3


def test_level_relation():
    rel = t_level_relation(2, "T", 6)
    assert rel.order() == 2
    assert rel.coefficient(2) == 1
    # t = t_n^2 / (1 + T^2 t_n)
    assert rel.coefficient(3) == T(2) ** 2
    assert rel.coefficient(4) == T(2) ** 4
    with pytest.raises(ParameterError):
        t_level_relation(2, "1", 6)
    with pytest.raises(ParameterError):
        t_level_relation(2, "T", 6, rank=3)


# Goss polynomials


@pytest.mark.parametrize("q", [2, 3, 4])
def test_goss_polynomials_are_monomials_up_to_q(q):
    for k in range(1, q + 1):
        assert gamma(q, k) == k
        assert list(goss_polys(q).poly(k)) == [k]


def test_goss_polynomial_beyond_q():
    # G_3 = X^3 + alpha_1 X^2 over F_2
    table = goss_polys(2, K=3)
    assert table.gamma(3) == 2
    assert table.poly(3)[2] == 1 / bracket(finite_field(2), 1)


# coefficient relations of Drinfeld modules


@pytest.mark.parametrize("q", [2, 3])
def test_carlitz_exponential(q):
    module = DrinfeldModuleCoeffs.carlitz(q)
    exp = relations_solver("module", "exp", module, q, K=4)
    assert exp == carlitz_exp_coeffs(q, 4)
    assert all(r.is_zero() for r in commutation_residuals(module, exp))
    back = relations_solver("exp", "module", exp, q, K=4, rank=1, base=module.base)
    assert back == module


@pytest.mark.parametrize("q", [2, 3])
def test_eisenstein_round_trip(q):
    exp = carlitz_exp_coeffs(q, 3)
    E = relations_solver("exp", "eisenstein", exp, q)
    assert sorted(E) == [q - 1, q**2 - 1, q**3 - 1]
    assert E[q - 1] == 1 / bracket(finite_field(q), 1)
    assert relations_solver("eisenstein", "exp", E, q, K=3).alphas == exp.alphas


def test_rank_two_module_round_trip():
    fq = finite_field(3)
    one = FqFraction(fq, 1)
    module = DrinfeldModuleCoeffs(3, 2, T(3), (T(3), one, one))
    exp = exp_from_module(module, 4)
    assert all(r.is_zero() for r in commutation_residuals(module, exp))
    assert relations_solver("exp", "module", exp, 3, rank=2) == module


def test_symbolic_exponential_is_graded():
    module = DrinfeldModuleCoeffs.symbolic(2, 2)
    exp = exp_from_module(module, 3)
    assert [graded_weight_check(exp[k]).weight for k in (1, 2, 3)] == [1, 3, 7]


def test_relations_solver_errors():
    fq = finite_field(2)
    one = FqFraction(fq, 1)
    with pytest.raises(ParameterError):
        relations_solver("module", "lattice", DrinfeldModuleCoeffs.carlitz(2), 2)
    with pytest.raises(ParameterError):
        exp_from_module(DrinfeldModuleCoeffs(2, 2, one, (one,)), 2)
    with pytest.raises(ParameterError):
        DrinfeldModuleCoeffs(2, 2, T(2), (T(2), one))
    with pytest.raises(ParameterError):
        relations_solver("eisenstein", "exp", {1: one}, 2, K=2)
    with pytest.raises(ParameterError):
        relations_solver("exp", "module", ExpCoeffs(2, (one, one)), 2, rank=2)


# canonical discriminant exponents


def test_canonical_exponents_over_a_polynomial_ring():
    cert = canonical_delta_exponents(2, 1, 2, 1, 2)
    assert (cert.i, cert.i_prime, cert.j) == (3, 15, 3)
    assert (cert.x, cert.x_prime, cert.gcd) == (1, 0, 3)
    assert cert.shifted_pair == (-4, 1)
    assert cert.holds()


def test_canonical_exponents_on_the_curve():
    cert = canonical_delta_exponents(2, 1, 2, 2, 3)
    assert (cert.i, cert.i_prime, cert.j) == (15, 63, 3)
    assert cert.holds() and cert.gcd_identity
    assert cert.shifted_pair == (-4, 1)


def test_canonical_exponents_with_shifted_infinity():
    cert = canonical_delta_exponents(2, 2, 2, 2, 4)
    assert cert.j == 15
    assert cert.shifted_pair == (-16, 1)
    assert cert.holds()
    assert canonical_delta_exponents(2, 1, 2, 2, 5).shifted_pair is None


def test_canonical_exponents_are_validated():
    with pytest.raises(ParameterError):
        canonical_delta_exponents(2, 1, 2, 2, 4)
    with pytest.raises(ParameterError):
        canonical_delta_exponents(2, 1, 2, 0, 1)


def test_gcd_identity():
    assert gcd_identity_value(2, 2, 2, 3) == 2**2 - 1
    assert gcd_identity_value(3, 2, 4, 6) == 3**4 - 1
