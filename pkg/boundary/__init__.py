from .orders import (
    AggregationReport,
    CanonicalDeltaReport,
    CuspidalDivisor,
    OrderReport,
    aggregation_check,
    coset_representatives,
    divisor_of_discriminant,
    ord_canonical_delta,
    ord_discriminant,
    ord_discriminant_twisted,
    ord_division_form,
    ord_higher_eisenstein,
    ramification_index,
)
from .matrix import DivisorMatrix, FrobeniusCheck, cuspidal_matrix, exact_determinant, frobenius_det_crosscheck
