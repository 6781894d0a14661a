from .drinfeld import (
    AdditivePolynomial,
    DrinfeldModuleCoeffs,
    ExpCoeffs,
    bracket,
    carlitz,
    carlitz_denominators,
    carlitz_exp_coeffs,
    commutation_residuals,
    eisenstein_from_exp,
    exp_from_eisenstein,
    exp_from_module,
    module_from_exp,
    relations_solver,
)
from .goss import GossPolyTable, gamma, goss_polys
from .reciprocal import SPolynomial, s_polynomial, t_level_relation
from .discriminant import (
    RouteComparison,
    TExpansion,
    compare_routes,
    delta_product_series,
    delta_via_eisenstein_series,
    eisenstein_expansions,
)
from .canonical import ExponentCertificate, canonical_delta_exponents, gcd_identity_value
