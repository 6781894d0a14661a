"""Rational functions in the formal variable S = q^(-s) with rational coefficients."""
from fractions import Fraction

import sympy

from utils.errors import PoleError

S = sympy.Symbol("S")


def to_fraction(c):
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _rational(x):
    if isinstance(x, sympy.Basic):
        return sympy.Rational(x)
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def format_poly_ascending(coeffs, var="S"):
    """Ascending-power string of a coefficient list, e.g. ``1 - 2*S^2``."""
    out = ""
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not out:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out or "0"


class RationalFunctionS:
    """num/den in Q(S), normalized so that gcd(num, den) = 1 and the lowest
    nonzero coefficient of den is 1.

    For a function regular at S = 0 this makes den(0) = 1, the natural form
    for Z-functions: (1 + S)/(1 - 2*S) rather than (-1/2 - S/2)/(S - 1/2).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, sympy.Poly) else sympy.Poly(num, S, domain=sympy.QQ)
        den = den if isinstance(den, sympy.Poly) else sympy.Poly(den, S, domain=sympy.QQ)
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num, den):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return num, sympy.Poly(1, S, domain=sympy.QQ)
        num, den = num.cancel(den, include=True)
        low = next(c for c in reversed(den.all_coeffs()) if c != 0)
        if low != 1:
            num, den = num.quo_ground(low), den.quo_ground(low)
        return num, den

    @classmethod
    def from_coefficients(cls, coeffs, den_coeffs=(1,)):
        """Build from ascending coefficient lists."""
        num = sympy.Poly(list(reversed([_rational(c) for c in coeffs])) or [0], S, domain=sympy.QQ)
        den = sympy.Poly(list(reversed([_rational(c) for c in den_coeffs])), S, domain=sympy.QQ)
        return cls(num, den)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        """coeff * S^exponent, exponent may be negative."""
        if exponent >= 0:
            return cls(_rational(coeff) * S**exponent)
        return cls(_rational(coeff), S ** (-exponent))

    @classmethod
    def parse(cls, text):
        expr = sympy.sympify(text, locals={"S": S})
        num, den = sympy.fraction(sympy.together(expr))
        return cls(sympy.Poly(num, S, domain=sympy.QQ), sympy.Poly(den, S, domain=sympy.QQ))

    def _coerce(self, other):
        if isinstance(other, RationalFunctionS):
            return other
        return RationalFunctionS(_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunctionS(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionS(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunctionS(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunctionS(self.num * other.den, self.den * other.num)

    def __pow__(self, n):
        if n < 0:
            return RationalFunctionS(self.den**-n, self.num**-n)
        return RationalFunctionS(self.num**n, self.den**n)

    def __eq__(self, other):
        if not isinstance(other, RationalFunctionS):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num.all_coeffs()), tuple(self.den.all_coeffs())))

    def is_zero(self):
        return self.num.is_zero

    def is_regular_at_zero(self):
        return self.den.eval(0) != 0

    def shift(self, k):
        """Multiply by S^k."""
        return self * RationalFunctionS.monomial(k)

    def evaluate(self, x):
        """Exact value at S = x; PoleError when x is a root of the denominator."""
        x = _rational(x)
        d = self.den.eval(x)
        if d == 0:
            raise PoleError(f"{self} has a pole at S = {x}")
        return to_fraction(self.num.eval(x) / d)

    def num_coefficients(self):
        return [to_fraction(c) for c in reversed(self.num.all_coeffs())]

    def den_coefficients(self):
        return [to_fraction(c) for c in reversed(self.den.all_coeffs())]

    def series(self, n):
        """First n power-series coefficients at S = 0 (function must be regular there)."""
        a = self.num_coefficients()
        d = self.den_coefficients()
        if d[0] == 0:
            raise PoleError(f"{self} has a pole at S = 0")
        out = []
        for k in range(n):
            acc = a[k] if k < len(a) else Fraction(0)
            for i in range(1, min(k, len(d) - 1) + 1):
                acc -= d[i] * out[k - i]
            out.append(acc / d[0])
        return out

    def __str__(self):
        num = format_poly_ascending(self.num_coefficients())
        den = self.den_coefficients()
        if den == [1]:
            return num
        den = format_poly_ascending(den)
        if " " in num:
            num = f"({num})"
        if " " in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunctionS({self})"


def ratfunc_normalize(f):
    """Canonical form of a rational function in S (value preserving)."""
    return RationalFunctionS(f.num, f.den)
