"""t-expansions of the rank-2 discriminant Delta_T over F_q(T), by two independent routes.

All forms are normalized by the Carlitz period: t stands for pi_bar^-1 t and
Delta for pi_bar^(1-q^2) Delta, so every coefficient lies in F_q(T). The
removed power of pi_bar is kept in ``TExpansion.pi_bar_exponent``.

Product route::

    Delta = -t^(q-1) prod_{b monic} S_b(t)^((q-1)(q^2-1))

Eisenstein route: the lattice sums E_{q-1} and E_{q^2-1} of A*omega + A are
rearranged into E_k(pi_bar A) - sum_{a monic} G_k(t_a) with t_a = t^(q^deg a) / R_a(t),
then converted to the module coefficient l_2 = Delta through the exp coefficients.
"""
from dataclasses import dataclass

from arith.finite_field import finite_field, monic_polys
from arith.fq_poly import FqFraction
from arith.series import FunctionFieldCoefficients, TruncatedSeries
from utils.errors import ParameterError

from .drinfeld import carlitz_exp_coeffs, eisenstein_from_exp, exp_from_eisenstein, module_from_exp
from .goss import goss_polys
from .reciprocal import s_polynomial

VARIABLE = "t"
MAX_EXPANSION_Q = 5


@dataclass
class TExpansion:
    variable: str
    series: TruncatedSeries
    provenance: str
    weight: int
    pi_bar_exponent: int

    @property
    def valuation(self):
        return self.series.order()

    def dump(self):
        return self.series.dump()


@dataclass
class RouteComparison:
    equal: bool
    precision: int
    first_difference: int = None


def _check(q, N):
    fq = finite_field(q)
    if q > MAX_EXPANSION_Q:
        raise ParameterError(f"discriminant expansions are computed for q <= {MAX_EXPANSION_Q}")
    if N < q or N > q**3:
        raise ParameterError(f"expansion precision must lie in {q}..{q ** 3}, got {N}")
    return fq


def delta_product_series(q, N):
    """Delta to O(t^(N+1)) from the product over monic b.

    S_b = 1 + O(t^(q^d - q^(d-1))) for deg b = d, so only finitely many b matter.
    """
    fq = _check(q, N)
    ring = FunctionFieldCoefficients(fq)
    prec = N + 1
    product = TruncatedSeries.one(ring, VARIABLE, prec)
    d = 1
    while q**d - q ** (d - 1) + (q - 1) <= N:
        for b in monic_polys(fq.GF, d):
            product = product * s_polynomial(q, b).as_series(fq, VARIABLE, prec)
        d += 1
    lead = TruncatedSeries.monomial(ring, VARIABLE, q - 1, prec)
    series = -(lead * product ** ((q - 1) * (q**2 - 1)))
    return TExpansion(VARIABLE, series, "product-route", q**2 - 1, q**2 - 1)


def _carlitz_x_coeffs(fq, a):
    """Coefficients c_0 .. c_deg(a) of rho_a(X) = sum c_i X^(q^i), by rho_{T^(k+1)} = T rho_{T^k} + rho_{T^k}^q."""
    T = FqFraction.T(fq)
    zero = FqFraction(fq, 0)
    d = a.degree
    total = [zero] * (d + 1)
    power = [FqFraction(fq, 1)]
    for k, c in enumerate(a.coeffs[::-1]):
        if k:
            nxt = [T * x for x in power] + [zero]
            for i in range(1, len(nxt)):
                nxt[i] = nxt[i] + power[i - 1] ** fq.q
            power = nxt
        if c != 0:
            for i, x in enumerate(power):
                total[i] = total[i] + x * FqFraction(fq, int(c))
    return total


def _t_of_multiple(fq, a, t, prec):
    """t(a omega) = t^(q^deg a) / R_a(t), R_a(X) = X^(q^deg a) rho_a(1/X)."""
    q, d = fq.q, a.degree
    if q**d >= prec:
        return TruncatedSeries.zero(t.ring, VARIABLE, prec)
    coeffs = [t.ring.zero] * (q**d + 1)
    for i, c in enumerate(_carlitz_x_coeffs(fq, a)):
        coeffs[q**d - q**i] = c
    R = TruncatedSeries(t.ring, VARIABLE, coeffs, prec)
    return TruncatedSeries.monomial(t.ring, VARIABLE, q**d, prec) * R.inverse()


def eisenstein_expansions(q, N):
    """{q - 1: E_{q-1}, q^2 - 1: E_{q^2-1}} to O(t^(N+1))."""
    fq = _check(q, N)
    ring = FunctionFieldCoefficients(fq)
    prec = N + 1
    exp = carlitz_exp_coeffs(q, 2)
    constants = eisenstein_from_exp(exp)
    weights = (q - 1, q**2 - 1)
    table = goss_polys(q, exp, weights[-1])
    t = TruncatedSeries.monomial(ring, VARIABLE, 1, prec)
    sums = {k: TruncatedSeries.zero(ring, VARIABLE, prec) for k in weights}
    d = 0
    while q**d <= N:
        for a in monic_polys(fq.GF, d):
            t_a = _t_of_multiple(fq, a, t, prec)
            if t_a.is_zero():
                continue
            for k in weights:
                sums[k] = sums[k] + table.evaluate(k, t_a)
        d += 1
    return {k: constants[k] - sums[k] for k in weights}


def delta_via_eisenstein_series(q, N):
    """Delta to O(t^(N+1)) as the top coefficient of phi_T, solved from E_{q-1}, E_{q^2-1}."""
    fq = _check(q, N)
    E = eisenstein_expansions(q, N)
    exp = exp_from_eisenstein(q, E, 2)
    module = module_from_exp(exp, FqFraction.T(fq), 2)
    return TExpansion(VARIABLE, module.coeffs[2], "eisenstein-route", q**2 - 1, q**2 - 1)


def compare_routes(a, b):
    first = a.series.first_difference(b.series)
    return RouteComparison(
        equal=first is None,
        precision=min(a.series.precision, b.series.precision),
        first_difference=first,
    )
