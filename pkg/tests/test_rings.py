import pytest

from rings import (
    CosetIsIdeal,
    build_ring,
    c_r1,
    cyclic_summand_count,
    parse_element,
    parse_ideal,
    parse_ring_spec,
    primitive_count_by_mobius,
    primitive_summand_count,
    primitive_vectors,
    unit_count,
)
from utils.errors import ParameterError
from zeta import ring_zeta


def test_parse_ring_spec():
    assert parse_ring_spec("elliptic  q=2 a=[0,0,1,0,0]") == (
        "elliptic",
        {"q": "2", "a": "[0,0,1,0,0]"},
    )
    with pytest.raises(ParameterError):
        parse_ring_spec("poly")
    with pytest.raises(ParameterError):
        parse_ring_spec("poly q=2 what")


def test_build_ring_rejects_bad_specs():
    with pytest.raises(ParameterError):
        build_ring("torus q=2")
    with pytest.raises(ParameterError):
        build_ring("poly q=2 g=T")
    with pytest.raises(ParameterError):
        build_ring("shifted q=2 g=T^2+1")
    with pytest.raises(ParameterError):
        build_ring("elliptic q=4 a=[0,0,1,0,0]")


def test_spec_text_round_trip(any_ring):
    assert build_ring(str(any_ring)) == any_ring


def test_elliptic_picard_group(elliptic2):
    group = elliptic2.picard_group()
    assert group.order == 3
    assert [c.label for c in group.classes()] == ["O", "(0,0)", "(0,1)"]
    assert group.is_closed()
    assert elliptic2.class_number == 3
    assert elliptic2.d_inf == 1 and elliptic2.genus == 1


@pytest.mark.parametrize(
    "spec, h",
    [
        ("poly q=3", 1),
        ("shifted q=2 g=T^2+T+1", 2),
        ("shifted q=2 g=T^3+T+1", 3),
        ("elliptic q=2 a=[1,0,0,0,1]", 4),
        ("elliptic q=3 a=[0,0,0,2,1]", 7),
    ],
)
def test_class_numbers(spec, h):
    ring = build_ring(spec)
    assert ring.class_number == h
    assert ring.picard_group().is_closed()


def test_shifted_classes_follow_degree(shifted2):
    group = shifted2.picard_group()
    assert [c.label for c in group.classes()] == ["deg=0 mod 2", "deg=1 mod 2"]
    assert shifted2.ideal_class(parse_ideal(shifted2, "inf0")).value == 1
    assert shifted2.ideal_class(parse_ideal(shifted2, "[T]*[T+1]")).is_identity()


def test_ideal_counts_match_ring_zeta(any_ring):
    z = ring_zeta(any_ring)
    for n in range(5):
        total = sum(any_ring.count_ideals_by_class(n).values())
        assert total == z.coefficients(n, n)[0]
        assert total == len(any_ring.effective_ideals_of_degree(n))


def test_class_of_a_product(elliptic2):
    P = parse_ideal(elliptic2, "P(0,0)")
    c = elliptic2.ideal_class(P)
    assert elliptic2.ideal_class(P * P) == c * c
    assert elliptic2.ideal_class(P**3).is_identity()
    assert elliptic2.ideal_class(P.inverse()) == c.inverse()


def test_principal_ideals_on_the_curve(elliptic2):
    x, y = elliptic2.x, elliptic2.y
    assert elliptic2.principal_ideal(x) == parse_ideal(elliptic2, "P(0,0)*P(0,1)")
    assert elliptic2.principal_ideal(y) == parse_ideal(elliptic2, "P(0,0)^3")
    assert elliptic2.is_principal(parse_ideal(elliptic2, "P(0,0)*P(0,1)"))
    assert not elliptic2.is_principal(parse_ideal(elliptic2, "P(0,0)"))
    assert x.degree == 2 and y.degree == 3


def test_membership(elliptic2):
    a = parse_ideal(elliptic2, "P(0,0)")
    assert elliptic2.contains(a, elliptic2.x)
    assert elliptic2.contains(a, elliptic2.y)
    assert not elliptic2.contains(a, elliptic2.constant(1))
    assert not elliptic2.contains(parse_ideal(elliptic2, "P(0,0)^2"), elliptic2.x)


def test_minimal_representatives(elliptic2):
    reps = elliptic2.choose_representatives_T("minimal_degree")
    assert [str(a) for a in reps] == ["A", "P(0,0)", "P(0,1)"]
    nontrivial = elliptic2.choose_representatives_T("nontrivial")
    assert all(a.degree >= 1 for a in nontrivial)
    assert {elliptic2.ideal_class(a).value for a in nontrivial} == set(elliptic2.picard_group().values)
    with pytest.raises(ParameterError):
        elliptic2.choose_representatives_T("coprime_to")


def test_ideal_space_dimensions(poly2, elliptic2):
    unit = poly2.unit_ideal()
    space = poly2.ideal_space(unit, 3)
    assert space.dimension == 4
    assert len(list(space.elements())) == 2**4
    assert len(list(space.representatives())) == 2**4 - 1
    # L(3 O) = <1, x, y>
    assert elliptic2.ideal_space(elliptic2.unit_ideal(), 3).dimension == 3
    assert elliptic2.ideal_space(elliptic2.unit_ideal(), 1).dimension == 1


def test_coset_minimum(poly2):
    a = poly2.ideal_of_poly("T")
    x = parse_element(poly2, "T^2+1")
    assert poly2.coset_min_degree(x, a) == (0, 0)
    with pytest.raises(CosetIsIdeal):
        poly2.coset_min_degree(parse_element(poly2, "T^2"), a)


def test_coset_elements_are_in_the_coset(poly3):
    a = poly3.ideal_of_poly("T^2+1")
    x = parse_element(poly3, "T")
    for y in poly3.coset_elements_up_to_degree(x, a, 3):
        assert poly3.contains(a, y - x)
        assert y.degree <= 3


def test_mobius_and_divisors(poly2):
    n = parse_ideal(poly2, "[T]^2*[T+1]")
    assert poly2.mobius(n) == 0
    assert poly2.mobius(parse_ideal(poly2, "[T]*[T+1]")) == 1
    assert len(poly2.divisors(n)) == 6
    with pytest.raises(ParameterError):
        poly2.mobius(n.inverse())


def test_parse_errors(poly2, elliptic2):
    with pytest.raises(ParameterError):
        parse_ideal(elliptic2, "P(1,1)")
    with pytest.raises(ParameterError):
        parse_ideal(poly2, "Q(1)")
    with pytest.raises(ParameterError):
        parse_ideal(poly2, "[T^2+1]")
    with pytest.raises(ParameterError):
        parse_element(poly2, "T + z")


def test_generator_of_a_polynomial_ideal(poly3):
    n = parse_ideal(poly3, "[T]^2*[T+1]")
    assert str(poly3.generator(n)) == "T^3 + T^2"


# counting


def test_primitive_summands(poly2):
    T = poly2.ideal_of_poly("T")
    assert c_r1(poly2, T, 2) == 3
    assert primitive_summand_count(poly2, T, 2) == 3
    assert cyclic_summand_count(poly2, T, 2) == 3


def test_primitive_vectors_of_a_prime_power(poly2):
    n = poly2.ideal_of_poly("T^2")
    assert len(primitive_vectors(poly2, n, 2)) == 12
    assert primitive_count_by_mobius(poly2, n, 2) == 12
    assert primitive_summand_count(poly2, n, 2) == c_r1(poly2, n, 2) == 12
    # each summand A/n has |(A/n)^*| = 2 primitive generators
    assert cyclic_summand_count(poly2, n, 2) == 6


@pytest.mark.parametrize("level", ["T", "T^2", "T^2+T+1", "T^2+T"])
def test_cyclic_summands_times_units(poly2, level):
    n = poly2.ideal_of_poly(level)
    cyclic = cyclic_summand_count(poly2, n, 2)
    assert cyclic * unit_count(poly2, n) == (poly2.q - 1) * c_r1(poly2, n, 2)


def test_unit_counts(poly2, poly3):
    assert unit_count(poly2, poly2.ideal_of_poly("T^2")) == 2
    assert unit_count(poly2, poly2.ideal_of_poly("T^2+T+1")) == 3
    assert unit_count(poly2, poly2.ideal_of_poly("T^2+T")) == 1
    assert unit_count(poly3, poly3.ideal_of_poly("T^2")) == 6
    # A/n = F_4, whose 15 nonzero vectors in F_4^2 fall into 5 lines
    assert cyclic_summand_count(poly2, poly2.ideal_of_poly("T^2+T+1"), 2) == 5


def test_counts_over_f3(poly3):
    n = poly3.ideal_of_poly("T")
    assert primitive_summand_count(poly3, n, 2) == 4
    assert c_r1(poly3, n, 3) == 13


def test_counting_needs_a_polynomial_ring(elliptic2, poly2):
    with pytest.raises(ParameterError):
        c_r1(elliptic2, parse_ideal(elliptic2, "P(0,0)"), 2)
    with pytest.raises(ParameterError):
        c_r1(poly2, poly2.unit_ideal(), 2)
