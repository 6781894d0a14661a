"""Z-functions as exact rational functions in S = q^(-s) plus a finite polar head."""
from fractions import Fraction

from arith.rational import RationalFunctionS
from utils.errors import ParameterError


class ZetaFunction:
    """rational(S) + sum_{e < 0} polar[e] * S^e.

    The rational part is kept regular at S = 0; terms with negative exponent
    (coset zetas of elements of negative degree) live in ``polar``. Any
    nonnegative polar term handed to the constructor is folded into the
    rational part, so equal functions have equal representations.
    """

    __slots__ = ("rational", "polar", "label")

    def __init__(self, rational, polar=None, label=""):
        if not isinstance(rational, RationalFunctionS):
            rational = RationalFunctionS(rational)
        if not rational.is_regular_at_zero():
            raise ParameterError(f"rational part {rational} of a Z-function has a pole at S = 0")
        clean = {}
        for e, c in (polar or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if e >= 0:
                rational = rational + RationalFunctionS.monomial(e, c)
            else:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.rational = rational
        self.polar = {e: c for e, c in sorted(clean.items()) if c != 0}
        self.label = label

    @classmethod
    def from_laurent(cls, head, tail=None, label=""):
        """head: {exponent: coeff}; tail: a RationalFunctionS regular at 0."""
        return cls(tail if tail is not None else RationalFunctionS(0), head, label)

    @classmethod
    def zero(cls):
        return cls(RationalFunctionS(0))

    # arithmetic

    def __add__(self, other):
        polar = dict(self.polar)
        for e, c in other.polar.items():
            polar[e] = polar.get(e, Fraction(0)) + c
        return ZetaFunction(self.rational + other.rational, polar)

    def __neg__(self):
        return ZetaFunction(-self.rational, {e: -c for e, c in self.polar.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return ZetaFunction(self.rational * c, {e: c * v for e, v in self.polar.items()})

    def shift(self, k):
        """S^k * Z."""
        if k >= 0:
            return ZetaFunction(self.rational.shift(k), {e + k: c for e, c in self.polar.items()})
        head = {e + k: c for e, c in self.polar.items()}
        coeffs = self.rational.series(-k)
        for n, c in enumerate(coeffs):
            head[n + k] = head.get(n + k, Fraction(0)) + c
        # rational - sum_{n < -k} c_n S^n is divisible by S^{-k}
        rest = self.rational - RationalFunctionS.from_coefficients(coeffs)
        return ZetaFunction(rest.shift(k), head)

    # Laurent expansion

    def lowest_exponent(self):
        return min(self.polar) if self.polar else 0

    def coefficients(self, lo, hi):
        """Coefficients of S^lo .. S^hi (inclusive)."""
        series = self.rational.series(max(hi + 1, 0))
        out = []
        for n in range(lo, hi + 1):
            c = self.polar.get(n, Fraction(0))
            if n >= 0:
                c += series[n]
            out.append(c)
        return out

    def Q(self, i):
        """Cut off the terms of degree <= i."""
        polar = {e: c for e, c in self.polar.items() if e > i}
        rational = self.rational
        if i >= 0:
            rational = rational - RationalFunctionS.from_coefficients(rational.series(i + 1))
        return ZetaFunction(rational, polar, self.label)

    def special_value(self, q, r):
        """Value at s = 1 - r, i.e. at S = q^(r - 1)."""
        if r < 1:
            raise ParameterError(f"special values are taken at r >= 1, got {r}")
        x = Fraction(q) ** (r - 1)
        value = self.rational.evaluate(x)
        for e, c in self.polar.items():
            value += c * x**e
        return value

    def __eq__(self, other):
        if not isinstance(other, ZetaFunction):
            return NotImplemented
        return self.rational == other.rational and self.polar == other.polar

    def __hash__(self):
        return hash((self.rational, tuple(self.polar.items())))

    def __str__(self):
        parts = [f"{c}*S^{e}" if c != 1 else f"S^{e}" for e, c in self.polar.items()]
        if not self.rational.is_zero() or not parts:
            parts.append(str(self.rational))
        return " + ".join(parts)

    def __repr__(self):
        return f"ZetaFunction({self})"


def geometric_tail(coeff, start, ratio, step):
    """sum_{k >= 0} coeff * ratio^k * S^(start + k*step) as a rational function."""
    if start < 0 or step < 1:
        raise ParameterError(f"geometric tail needs start >= 0 and step >= 1, got {start}, {step}")
    den = [1] + [0] * (step - 1) + [-Fraction(ratio)]
    return RationalFunctionS.from_coefficients([0] * start + [Fraction(coeff)], den)
