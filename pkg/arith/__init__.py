from .finite_field import FiniteField, finite_field, prime_power, is_irreducible_by_trial
from .fq_poly import (
    NEG_INF,
    FqFraction,
    irreducible_polys,
    irreducible_count,
    integer_mobius,
    is_zero_poly,
    make_monic,
    poly_degree,
    poly_str,
)
from .rational import RationalFunctionS, ratfunc_normalize, to_fraction
from .series import (
    TruncatedSeries,
    RationalCoefficients,
    FiniteFieldCoefficients,
    FunctionFieldCoefficients,
    series_mul_inv_compose,
)
from .graded import GradedSymbol, GradedElem, graded_weight_check
from .cyclotomic import CyclotomicNumber
