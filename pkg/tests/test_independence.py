import pytest

from arith import FqFraction, finite_field
from independence import (
    carlitz_period_power,
    check_minimal_degree_claim,
    completion_context,
    default_degree_bound,
    g_adic_digits,
    independence_certificate,
    lattice_sum_at_infinity,
    m_matrix,
    precision_stability,
)
from rings import parse_element
from utils.errors import ParameterError, PrecisionError


def ints(series):
    return [(n, int(c)) for n, c in series.terms()]


# embeddings into K_inf


def test_polynomial_embedding(poly2):
    ctx = completion_context(poly2, 4)
    assert ctx.uniformizer == "1/T"
    assert ints(ctx.embed(parse_element(poly2, "T"))) == [(-1, 1)]
    # 1/(T + 1) = pi / (1 + pi) = pi + pi^2 + ... in characteristic 2
    assert ints(ctx.embed(parse_element(poly2, "1/(T+1)"))) == [(1, 1), (2, 1), (3, 1), (4, 1)]
    assert ctx.embed(poly2.constant(0)).is_zero()


def test_elliptic_embedding(elliptic2):
    ctx = completion_context(elliptic2, 5)
    x, y = elliptic2.x, elliptic2.y
    assert ctx.check_valuation(x) == -2
    assert ctx.check_valuation(y) == -3
    # pi = x/y exactly
    assert ints(ctx.embed(x / y)) == [(1, 1)]


@pytest.mark.parametrize("text", ["T", "1/(T^2+T+1)", "(T^3+1)/(T^2+T+1)^2", "T^5/(T^2+T+1)^3"])
def test_shifted_embedding_matches_g_adic_digits(shifted2, text):
    ctx = completion_context(shifted2, 4)
    x = parse_element(shifted2, text)
    v, digits = g_adic_digits(x.value, shifted2.g, ctx.precision)
    assert ctx.embed(x).agrees_with(ctx.from_g_adic(v, digits))
    assert ctx.embed(x).order() == v


def test_shifted_embedding_of_t(shifted2):
    ctx = completion_context(shifted2, 4)
    assert ctx.residue_field.q == 4
    T = ctx.embed(parse_element(shifted2, "T"))
    assert T.order() == 0
    assert T.leading_coefficient() == ctx.theta


def test_g_adic_digits():
    F = finite_field(2)
    g = F.poly([1, 1, 1])
    T = FqFraction.T(F)
    v, digits = g_adic_digits(T, g, 3)
    assert v == 0
    assert digits == [F.poly([1, 0]), F.poly([0]), F.poly([0])]
    v, digits = g_adic_digits(FqFraction(F, 1) / FqFraction.from_poly(F, g), g, 2)
    assert v == -1
    assert digits == [F.poly([1]), F.poly([0])]
    with pytest.raises(ParameterError):
        g_adic_digits(FqFraction(F, 0), g, 2)


def test_embedding_valuations_and_homomorphism(any_ring):
    ctx = completion_context(any_ring, 4)
    elements = [x for x in any_ring.ideal_space(any_ring.unit_ideal(), 2 * any_ring.d_inf + 1).elements() if not x.is_zero()]
    for x in elements[:12]:
        assert ctx.check_valuation(x) == ctx.expected_valuation(x)
    for x, y in zip(elements[:8], elements[1:9]):
        assert ctx.check_homomorphism(x, y) == []


def test_completion_precision_is_validated(poly2):
    with pytest.raises(ParameterError):
        completion_context(poly2, 0)


# the constant term of the Eisenstein series of weight q - 1


@pytest.mark.parametrize("q", [2, 3])
def test_carlitz_product_matches_lattice_sum(q):
    D = 2
    lattice = lattice_sum_at_infinity(q, q - 1, D)
    product = carlitz_period_power(q, (q - 1) * (D + 1))
    assert lattice.agrees_with(product)
    assert lattice.order() == 0
    # -1 in F_q
    assert int(lattice.leading_coefficient()) == q - 1


def test_lattice_sum_vanishes_off_multiples_of_q_minus_1():
    assert lattice_sum_at_infinity(3, 1, 2).is_zero()
    with pytest.raises(ParameterError):
        lattice_sum_at_infinity(3, 0, 2)


# the matrix M(a, b)


def test_default_degree_bound():
    assert default_degree_bound(1, 4, 1) == 3
    assert default_degree_bound(1, 4, 2) == 7
    assert default_degree_bound(2, 4, 1) == 1
    assert default_degree_bound(2, 5, 1) == 2


def test_m_matrix_over_a_polynomial_ring(poly2, poly3):
    m = m_matrix(poly2, 1)
    assert m.size == 1
    assert m.residue(0, 0) == 1
    assert independence_certificate(m).verdict() == "PASS"
    assert independence_certificate(m_matrix(poly3, 2)).ok
    with pytest.raises(ParameterError):
        m_matrix(poly3, 1)


def test_m_matrix_with_shifted_infinity(shifted2):
    m = m_matrix(shifted2, 1)
    assert m.size == 2
    assert m.valuation(1, 0) > 0
    cert = independence_certificate(m)
    assert cert.ok and cert.det_residue == 1


def test_m_matrix_on_the_curve(elliptic2):
    m = m_matrix(elliptic2, 1)
    assert m.reps == ["A", "P(0,0)", "P(0,1)"]
    cert = independence_certificate(m)
    assert cert.violations == []
    assert cert.diagonal_residues == [1, 1, 1]
    assert cert.det_residue == 1
    assert all(v > 0 for i, row in enumerate(cert.valuations) for v in row[:i])
    assert "P(0,0)" in m.format()


def test_m_matrix_rejects_a_short_degree_bound(poly2):
    with pytest.raises(PrecisionError):
        m_matrix(poly2, 1, precision=4, degree_bound=1)


@pytest.mark.parametrize(
    "ring_name, precision, multiple",
    [("poly2", 4, 1), ("elliptic2", 4, 1), ("shifted2", 2, 1), ("shifted2", 2, 2), ("poly3", 2, 2)],
)
def test_precision_stability(ring_name, precision, multiple, request):
    ring = request.getfixturevalue(ring_name)
    assert precision_stability(ring, multiple * (ring.q - 1), precision) == []


def test_the_stability_run_of_the_shifted_ring_stays_small(shifted2):
    # P = 2 doubled to 4 enumerates degrees up to 7, the bound of the certificate run
    assert default_degree_bound(1, 4, shifted2.d_inf) == 7
    assert default_degree_bound(2, 4, shifted2.d_inf) == 3


def test_minimal_degree_claim(any_ring):
    assert check_minimal_degree_claim(any_ring).holds


def test_minimal_degree_claim_rows_on_the_curve(elliptic2):
    # L(a) = F_q for each degree-1 representative
    rows = check_minimal_degree_claim(elliptic2).rows
    assert rows == [("A", 1, True), ("P(0,0)", 1, False), ("P(0,1)", 1, False)]
