"""Polynomials over F_q (galois.Poly) and rational functions over them."""
import galois
import sympy

from utils.errors import ParameterError

from .finite_field import FiniteField, finite_field, monic_polys

NEG_INF = float("-inf")
MAX_IRREDUCIBLE_DEGREE = 12


def is_zero_poly(p):
    return p.degree == 0 and p.coeffs[0] == 0


def poly_degree(p):
    """Degree of a galois polynomial, -inf for the zero polynomial."""
    return NEG_INF if is_zero_poly(p) else p.degree


def scale_poly(p, c):
    return galois.Poly(p.coeffs * c, field=p.field)


def make_monic(p):
    if is_zero_poly(p):
        return p
    return scale_poly(p, p.coeffs[0] ** -1)


def coeffs_ascending(p):
    return [int(c) for c in p.coeffs[::-1]]


def poly_str(p, var="T"):
    """Canonical string form: descending powers, coefficients as integer field representations."""
    if is_zero_poly(p):
        return "0"
    terms = []
    d = p.degree
    for i, c in enumerate(p.coeffs):
        c = int(c)
        if c == 0:
            continue
        k = d - i
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


def integer_mobius(n):
    """The classical Moebius function on positive integers."""
    factors = sympy.factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def irreducible_count(q, d):
    """(1/d) * sum_{e|d} mu(e) q^(d/e)."""
    total = sum(integer_mobius(e) * q ** (d // e) for e in sympy.divisors(d))
    return total // d


def irreducible_polys(q, d):
    """All monic irreducible polynomials of degree d over F_q, in integer order."""
    if d < 1 or d > MAX_IRREDUCIBLE_DEGREE:
        raise ParameterError(f"irreducible degree {d} outside 1..{MAX_IRREDUCIBLE_DEGREE}")
    F = finite_field(q)
    if F.e == 1 or galois.GF(q).irreducible_poly == F.modulus:
        found = [galois.Poly(f.coeffs, field=F.GF) for f in galois.irreducible_polys(q, d)]
    else:
        # galois enumerates over its own default modulus of F_q; test ours directly
        found = [f for f in monic_polys(F.GF, d) if f.is_irreducible()]
    found.sort(key=int)
    if len(found) != irreducible_count(q, d):
        raise ParameterError(
            f"found {len(found)} irreducibles of degree {d} over F_{q}, "
            f"expected {irreducible_count(q, d)}"
        )
    return found


class FqFraction:
    """An element of F_q(T): num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, normalized=False):
        if not isinstance(field, FiniteField):
            field = finite_field(field)
        self.field = field
        num = self._as_poly(num)
        den = self._as_poly(1 if den is None else den)
        if not normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    def _as_poly(self, value):
        if isinstance(value, galois.Poly):
            return value
        return galois.Poly([self.field(value)], field=self.field.GF)

    @staticmethod
    def _normalize(num, den):
        if is_zero_poly(den):
            raise ZeroDivisionError("rational function with zero denominator")
        if is_zero_poly(num):
            return num, galois.Poly.One(den.field)
        if den.degree > 0:
            g = galois.gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.coeffs[0]
        if lead != 1:
            inv = lead**-1
            num, den = scale_poly(num, inv), scale_poly(den, inv)
        return num, den

    # constructors

    @classmethod
    def T(cls, field):
        field = field if isinstance(field, FiniteField) else finite_field(field)
        return cls(field, galois.Poly([1, 0], field=field.GF), normalized=True)

    @classmethod
    def constant(cls, field, c):
        return cls(field, c)

    @classmethod
    def from_poly(cls, field, poly):
        return cls(field, poly, normalized=True)

    def _coerce(self, other):
        if isinstance(other, FqFraction):
            return other
        if isinstance(other, galois.Poly):
            return FqFraction(self.field, other, normalized=True)
        return FqFraction(self.field, other)

    # predicates

    @property
    def characteristic(self):
        return self.field.p

    def is_zero(self):
        return is_zero_poly(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    @property
    def degree(self):
        if self.is_zero():
            return NEG_INF
        return self.num.degree - self.den.degree

    def valuation(self, prime):
        """Order of vanishing at the monic irreducible ``prime``."""
        if self.is_zero():
            raise ParameterError("valuation of zero")
        v = 0
        num, den = self.num, self.den
        while is_zero_poly(num % prime):
            num = num // prime
            v += 1
        while is_zero_poly(den % prime):
            den = den // prime
            v -= 1
        return v

    def valuation_at_infinity(self):
        return -self.degree

    # arithmetic

    def __neg__(self):
        return FqFraction(self.field, -self.num, self.den, normalized=True)

    def __add__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = self._coerce(other)
        if self.den == other.den:
            if self.den.degree == 0:
                return FqFraction(self.field, self.num + other.num, self.den, normalized=True)
            return FqFraction(self.field, self.num + other.num, self.den)
        return FqFraction(
            self.field, self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = self._coerce(other)
        if self.den.degree == 0 and other.den.degree == 0:
            return FqFraction(self.field, self.num * other.num, self.den, normalized=True)
        return FqFraction(self.field, self.num * other.num, self.den * other.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_q(T)")
        return FqFraction(self.field, self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return FqFraction(self.field, 1)
        # num and den stay coprime and den stays monic
        return FqFraction(self.field, self.num**n, self.den**n, normalized=True)

    def __eq__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, FqFraction):
            other = self._coerce(other)
        if not isinstance(other, FqFraction):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field.q, int(self.num), int(self.den)))

    def __str__(self):
        num = poly_str(self.num)
        if self.den.degree == 0:
            return num
        den = poly_str(self.den)
        if self.num.degree > 0 and len(num.split(" + ")) > 1:
            num = f"({num})"
        if len(den.split(" + ")) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"FqFraction({self})"


_SCALARS = (FqFraction, int, galois.Poly, galois.FieldArray)
