"""Reciprocal polynomials S_m(X) = 1 + sum_i c_i X^(q^((r-1) deg m) - q^i) and the t <-> t_n relation."""
from dataclasses import dataclass, field

from arith.finite_field import finite_field
from arith.fq_poly import FqFraction, poly_str
from arith.graded import GradedElem, GradedSymbol, graded_weight_check
from arith.series import FunctionFieldCoefficients, TruncatedSeries
from rings.genus_zero import parse_fq_poly
from utils.errors import ConsistencyError, ParameterError

from .drinfeld import carlitz


def _is_zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


def as_monic_poly(fq, m):
    """Read ``m`` (galois polynomial, FqFraction or text in T) as a monic polynomial."""
    if isinstance(m, str):
        m = parse_fq_poly(m, fq)
    elif isinstance(m, FqFraction):
        if not m.is_polynomial():
            raise ParameterError(f"{m} is not a polynomial")
        m = m.num
    if m.degree == 0 and m.coeffs[0] == 0:
        raise ParameterError("the zero polynomial has no reciprocal polynomial")
    if m.coeffs[0] != 1:
        raise ParameterError(f"{poly_str(m)} is not monic")
    return m


@dataclass
class SPolynomial:
    """1 + sum_k terms[k] X^k; concrete coefficients lie in F_q[T], symbolic ones are graded."""

    q: int
    label: str
    rank: int
    level: str = None
    top_exponent: int = 1
    terms: dict = field(default_factory=dict)
    symbolic: bool = False

    @property
    def constant_term(self):
        return self.terms.get(0)

    def exponents(self):
        return sorted(e for e in self.terms if e)

    def evaluate(self, x):
        """S(x) by Horner's rule over the exponent gaps; x is a scalar or a series."""
        exps = sorted(self.terms, reverse=True)
        acc = self.terms[exps[0]]
        for hi, lo in zip(exps, exps[1:]):
            acc = acc * x ** (hi - lo) + self.terms[lo]
        return acc * x ** exps[-1] if exps[-1] else acc

    def as_series(self, fq, variable, precision):
        ring = FunctionFieldCoefficients(fq)
        coeffs = [ring.zero] * min(precision, max(self.terms) + 1)
        for e, c in self.terms.items():
            if e < len(coeffs):
                coeffs[e] = c
        return TruncatedSeries(ring, variable, coeffs, precision)

    def violations(self):
        """Every failed structural property, as text."""
        out = []
        one = self.terms.get(0)
        if one is None or not one == 1:
            out.append(f"constant term of {self.label} is {one}, expected 1")
        for e, c in self.terms.items():
            if e and e % (self.q - 1):
                out.append(f"exponent {e} of {self.label} is not divisible by q - 1")
            if self.symbolic and e:
                report = graded_weight_check(c)
                if report.weight != -e:
                    out.append(f"coefficient of X^{e} in {self.label} has weight {report.weight}, expected {-e}")
            elif e and not c.is_polynomial():
                out.append(f"coefficient {c} of X^{e} in {self.label} is not in F_q[T]")
        return out

    def __str__(self):
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            parts.append(str(c) if e == 0 else f"({c})*X^{e}")
        return " + ".join(parts)


def s_polynomial(q, m, rank=2, level=None, symbolic=False):
    """S_m (plain) or S_m^n (level n) for a monic m.

    Rank 2 is concrete: the reciprocal X^(q^deg m) rho_m(1/X) of the Carlitz
    polynomial, and S_m^n(X) = S_m(nX). Higher ranks, or ``symbolic=True``,
    give coefficients l'_{m,i} / Delta'_m in free graded generators.
    """
    fq = finite_field(q)
    m = as_monic_poly(fq, m)
    d = m.degree
    n = None if level is None else as_monic_poly(fq, level)
    level = None if n is None else poly_str(n)
    label = f"S_[{poly_str(m)}]" + (f"^[{level}]" if level is not None else "")
    if rank < 2:
        raise ParameterError(f"reciprocal polynomials need rank >= 2, got {rank}")
    if rank > 2 or symbolic:
        return _symbolic_s_polynomial(fq, m, rank, level, label)

    top = q**d
    rho = carlitz(fq, m)
    if n is not None:
        n = FqFraction.from_poly(fq, n)
    terms = {0: FqFraction(fq, 1)}
    for i, c in enumerate(rho.coeffs[:-1]):
        if _is_zero(c):
            continue
        e = top - q**i
        terms[e] = c * n**e if n is not None else c
    if not rho.coeffs[-1] == 1:
        raise ConsistencyError(f"rho_{poly_str(m)} is not monic in tau")
    return SPolynomial(q, label, rank, level, top, terms)


def _symbolic_s_polynomial(fq, m, rank, level, label):
    q = fq.q
    d = (rank - 1) * m.degree
    top = q**d
    tag = poly_str(m) if level is None else f"{poly_str(m)};{level}"
    delta = GradedElem.symbol(GradedSymbol(f"D'[{tag}]", top - 1), FqFraction(fq, 1))
    inv_delta = delta.inverse()
    terms = {0: FqFraction(fq, 1)}
    for i in range(d):
        if i == 0:
            coeff = inv_delta * FqFraction.from_poly(fq, m)
        else:
            ell = GradedElem.symbol(GradedSymbol(f"l'[{tag}]{i}", q**i - 1), FqFraction(fq, 1))
            coeff = ell * inv_delta
        terms[top - q**i] = coeff
    return SPolynomial(q, label, rank, level, top, terms, symbolic=True)


def t_level_relation(q, n, precision, rank=2):
    """t = t_n^(q^deg n) / S_n^n(t_n) as a series in t_n to O(t_n^precision)."""
    if rank != 2:
        raise ParameterError("the t <-> t_n relation is computed for rank 2 only")
    fq = finite_field(q)
    n = as_monic_poly(fq, n)
    if n.degree < 1:
        raise ParameterError("the level must be a proper ideal")
    s = s_polynomial(q, n, rank, level=n)
    ring = FunctionFieldCoefficients(fq)
    denom = s.as_series(fq, "t_n", precision)
    lead = TruncatedSeries.monomial(ring, "t_n", q**n.degree, precision)
    return lead * denom.inverse()
