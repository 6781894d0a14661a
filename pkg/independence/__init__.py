from .completion import (
    COMPLETION_REGISTRY,
    CompletionContext,
    EllipticCompletion,
    PolynomialCompletion,
    ShiftedCompletion,
    carlitz_period_power,
    completion_context,
    embed_at_infinity,
    g_adic_digits,
    lattice_sum_at_infinity,
)
from .m_matrix import (
    IndependenceCertificate,
    MMatrix,
    MinimalDegreeClaim,
    check_minimal_degree_claim,
    default_degree_bound,
    independence_certificate,
    m_matrix,
    precision_stability,
)
