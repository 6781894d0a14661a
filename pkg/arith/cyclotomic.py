"""Exact arithmetic in the cyclotomic field Q(zeta_m)."""
import functools
from fractions import Fraction

import sympy

from .rational import to_fraction

Z = sympy.Symbol("z")


@functools.lru_cache(maxsize=None)
def _phi(m):
    return sympy.Poly(sympy.cyclotomic_poly(m, Z), Z, domain=sympy.QQ)


class CyclotomicNumber:
    """An element of Q(zeta_m), stored as a polynomial in zeta_m reduced modulo Phi_m."""

    __slots__ = ("m", "poly")

    def __init__(self, m, poly):
        if not isinstance(poly, sympy.Poly):
            poly = sympy.Poly(poly, Z, domain=sympy.QQ)
        self.m = m
        self.poly = poly.rem(_phi(m))

    @classmethod
    def rational(cls, m, x):
        x = Fraction(x)
        return cls(m, sympy.Rational(x.numerator, x.denominator))

    @classmethod
    def root_of_unity(cls, m, k):
        """zeta_m^k."""
        return cls(m, Z ** (k % m))

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.m != self.m:
                raise ValueError(f"Q(zeta_{self.m}) and Q(zeta_{other.m}) do not mix")
            return other
        return CyclotomicNumber.rational(self.m, other)

    def __add__(self, other):
        return CyclotomicNumber(self.m, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, -self.poly)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        return CyclotomicNumber(self.m, self.poly * self._coerce(other).poly)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not needed here")
        out = CyclotomicNumber.rational(self.m, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.poly - other.poly).is_zero

    def __hash__(self):
        return hash((self.m, tuple(self.poly.all_coeffs())))

    def is_zero(self):
        return self.poly.is_zero

    def is_rational(self):
        return self.poly.degree() <= 0

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return to_fraction(self.poly.eval(0))

    def __str__(self):
        expr = self.poly.as_expr().subs(Z, sympy.Symbol(f"zeta{self.m}"))
        return str(expr)

    def __repr__(self):
        return f"CyclotomicNumber({self})"
