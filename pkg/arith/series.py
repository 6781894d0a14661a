"""Truncated Laurent series over an exact coefficient field.

A series is t^v * (c_0 + c_1 t + ...) + O(t^precision): the coefficients of
t^n are known exactly for n < precision and unknown beyond. Precision is
mandatory in every constructor and tracked pessimistically by every
operation, so an order-of-vanishing read off a series is never an artifact
of truncation.
"""
from fractions import Fraction

from utils.errors import ParameterError, PrecisionError

from .finite_field import FiniteField
from .fq_poly import FqFraction


class RationalCoefficients:
    name = "Q"
    characteristic = 0

    def coerce(self, x):
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_zero(self, x):
        return x == 0

    def format(self, x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalCoefficients)

    def __hash__(self):
        return hash(self.name)


class FiniteFieldCoefficients:
    """Galois scalars of F_q; printed by their integer representation."""

    def __init__(self, field):
        self.field = field

    @property
    def name(self):
        return f"F_{self.field.q}"

    @property
    def characteristic(self):
        return self.field.p

    def coerce(self, x):
        return self.field(x)

    @property
    def zero(self):
        return self.field.zero

    @property
    def one(self):
        return self.field.one

    def is_zero(self, x):
        return bool(x == 0)

    def format(self, x):
        return str(int(x))

    def __eq__(self, other):
        return isinstance(other, FiniteFieldCoefficients) and other.field == self.field

    def __hash__(self):
        return hash(("F", self.field.q))


class FunctionFieldCoefficients:
    """F_q(T) as FqFraction; printed in the canonical num/den form."""

    def __init__(self, field):
        self.field = field

    @property
    def name(self):
        return f"F_{self.field.q}(T)"

    @property
    def characteristic(self):
        return self.field.p

    def coerce(self, x):
        if isinstance(x, FqFraction):
            return x
        return FqFraction(self.field, x)

    @property
    def zero(self):
        return FqFraction(self.field, 0)

    @property
    def one(self):
        return FqFraction(self.field, 1)

    def is_zero(self, x):
        return x.is_zero()

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, FunctionFieldCoefficients) and other.field == self.field

    def __hash__(self):
        return hash(("F(T)", self.field.q))


def coefficients_for(field):
    if isinstance(field, FiniteField):
        return FiniteFieldCoefficients(field)
    raise ParameterError(f"no coefficient ring for {field!r}")


def _is_power_of(n, p):
    if p < 2 or n < p:
        return False
    while n % p == 0:
        n //= p
    return n == 1


class TruncatedSeries:
    __slots__ = ("ring", "variable", "valuation", "coeffs", "precision")

    def __init__(self, ring, variable, coeffs, precision, valuation=0):
        coeffs = [ring.coerce(c) for c in coeffs]
        # strip leading zeros into the valuation, drop anything beyond precision
        start = 0
        while start < len(coeffs) and ring.is_zero(coeffs[start]):
            start += 1
        valuation += start
        coeffs = coeffs[start:]
        if valuation >= precision:
            coeffs, valuation = [], precision
        else:
            coeffs = coeffs[: precision - valuation]
            while coeffs and ring.is_zero(coeffs[-1]):
                coeffs.pop()
        self.ring = ring
        self.variable = variable
        self.valuation = valuation if coeffs else precision
        self.coeffs = tuple(coeffs)
        self.precision = precision

    # constructors

    @classmethod
    def zero(cls, ring, variable, precision):
        return cls(ring, variable, [], precision)

    @classmethod
    def one(cls, ring, variable, precision):
        return cls(ring, variable, [ring.one], precision)

    @classmethod
    def monomial(cls, ring, variable, exponent, precision, coeff=None):
        coeff = ring.one if coeff is None else coeff
        return cls(ring, variable, [coeff], precision, valuation=exponent)

    @classmethod
    def from_polynomial(cls, ring, variable, coeffs_ascending, precision):
        return cls(ring, variable, list(coeffs_ascending), precision)

    def _like(self, coeffs, precision, valuation):
        return TruncatedSeries(self.ring, self.variable, coeffs, precision, valuation)

    # inspection

    def is_zero(self):
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def relative_precision(self):
        return self.precision - self.valuation

    def coefficient(self, n):
        if n >= self.precision:
            raise PrecisionError(
                f"coefficient of {self.variable}^{n} requested, series known to O({self.variable}^{self.precision})"
            )
        k = n - self.valuation
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def leading_coefficient(self):
        if self.is_zero():
            raise PrecisionError(f"no nonzero digit below {self.variable}^{self.precision}")
        return self.coeffs[0]

    def order(self):
        """Valuation, with a PrecisionError when no nonzero digit is known."""
        if self.is_zero():
            raise PrecisionError(
                f"valuation undetermined: all digits below {self.variable}^{self.precision} vanish"
            )
        return self.valuation

    def terms(self):
        """(exponent, coefficient) pairs of the nonzero known coefficients."""
        return [
            (self.valuation + k, c) for k, c in enumerate(self.coeffs) if not self.ring.is_zero(c)
        ]

    # arithmetic

    def _check(self, other):
        if self.ring != other.ring or self.variable != other.variable:
            raise ParameterError(
                f"series over {self.ring.name} in {self.variable} and over "
                f"{other.ring.name} in {other.variable} do not mix"
            )

    def __neg__(self):
        return self._like([-c for c in self.coeffs], self.precision, self.valuation)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.ring, self.variable, [other], max(self.precision, 1))
        self._check(other)
        prec = min(self.precision, other.precision)
        if self.is_zero():
            return other.truncate(prec)
        if other.is_zero():
            return self.truncate(prec)
        v = min(self.valuation, other.valuation)
        out = [self.ring.zero] * (prec - v)
        for k, c in enumerate(self.coeffs):
            if self.valuation + k < prec:
                out[self.valuation + k - v] = out[self.valuation + k - v] + c
        for k, c in enumerate(other.coeffs):
            if other.valuation + k < prec:
                out[other.valuation + k - v] = out[other.valuation + k - v] + c
        return self._like(out, prec, v)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.ring.coerce(c)
        if self.ring.is_zero(c):
            return self._like([], self.precision, self.valuation)
        return self._like([c * a for a in self.coeffs], self.precision, self.valuation)

    def shift(self, k):
        """Multiply by variable^k."""
        return self._like(list(self.coeffs), self.precision + k, self.valuation + k)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        va, vb = self.valuation, other.valuation
        prec = min(va + other.precision, vb + self.precision)
        if self.is_zero() or other.is_zero():
            return self._like([], prec, prec)
        n = prec - va - vb
        a, b = self.coeffs, other.coeffs
        zero = self.ring.zero
        out = [zero] * n
        for i in range(min(len(a), n)):
            ai = a[i]
            if self.ring.is_zero(ai):
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] = out[i + j] + ai * b[j]
        return self._like(out, prec, va + vb)

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self):
        if self.is_zero():
            raise PrecisionError(
                f"cannot invert a series with no nonzero digit below {self.variable}^{self.precision}"
            )
        v = self.valuation
        rel = self.precision - v
        a = self.coeffs
        inv0 = self.ring.one / a[0]
        out = [inv0]
        for n in range(1, rel):
            acc = self.ring.zero
            for i in range(1, min(n, len(a) - 1) + 1):
                acc = acc + a[i] * out[n - i]
            out.append(-acc * inv0)
        return self._like(out, rel - v, -v)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(self.ring.one / self.ring.coerce(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse().scale(other)

    def frobenius(self, n):
        """self^n for n a power of the characteristic: (sum c_k t^k)^n = sum c_k^n t^(kn)."""
        out = []
        for k, c in enumerate(self.coeffs):
            if k:
                out.extend([self.ring.zero] * (n - 1))
            out.append(c**n)
        return self._like(out, self.precision * n, self.valuation * n)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            rel = self.relative_precision
            return TruncatedSeries.one(self.ring, self.variable, max(rel, 1))
        p = self.ring.characteristic
        if p and _is_power_of(n, p):
            return self.frobenius(n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def compose(self, inner):
        """self(inner); inner must have positive valuation unless self is a polynomial."""
        if inner.ring != self.ring:
            raise ParameterError("composition across coefficient rings")
        w = inner.valuation
        if inner.is_zero():
            raise PrecisionError("composition with an inner series of unknown valuation")
        if w < 1:
            raise ParameterError(
                f"composition needs an inner series of valuation >= 1, got {w}"
            )
        prec_cap = self.precision * w
        acc = TruncatedSeries.zero(inner.ring, inner.variable, prec_cap)
        if self.is_zero():
            return acc
        lo = self.valuation
        power = inner**lo if lo != 0 else TruncatedSeries.one(inner.ring, inner.variable, prec_cap)
        for k, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                acc = acc + power.scale(c)
            if k < len(self.coeffs) - 1:
                power = power * inner
        return acc.truncate(min(acc.precision, prec_cap))

    # precision management

    def truncate(self, precision):
        if precision >= self.precision:
            return self
        return self._like(list(self.coeffs), precision, self.valuation)

    def q_cut(self, i):
        """Drop every term of exponent <= i."""
        keep = [c if self.valuation + k > i else self.ring.zero for k, c in enumerate(self.coeffs)]
        return self._like(keep, self.precision, self.valuation)

    def agrees_with(self, other, up_to=None):
        """Coefficient agreement below ``up_to`` (default: the common precision)."""
        self._check(other)
        bound = min(self.precision, other.precision)
        if up_to is not None:
            if up_to > bound:
                raise PrecisionError(f"agreement to {up_to} requested, series known to {bound}")
            bound = up_to
        lo = min(self.valuation, other.valuation, bound)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(lo, bound))

    def first_difference(self, other):
        """Smallest exponent where the two series differ, None if they agree to common precision."""
        self._check(other)
        bound = min(self.precision, other.precision)
        lo = min(self.valuation, other.valuation, bound)
        for n in range(lo, bound):
            if self.coefficient(n) != other.coefficient(n):
                return n
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.variable == other.variable
            and self.precision == other.precision
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.variable, self.precision, self.valuation, len(self.coeffs)))

    def dump(self):
        """One ``exponent<TAB>coefficient`` line per known coefficient."""
        start = min(self.valuation, self.precision)
        lines = [
            f"{n}\t{self.ring.format(self.coefficient(n))}" for n in range(start, self.precision)
        ]
        return "\n".join(lines)

    def __str__(self):
        parts = []
        for n, c in self.terms():
            parts.append(f"({self.ring.format(c)})*{self.variable}^{n}")
        parts.append(f"O({self.variable}^{self.precision})")
        return " + ".join(parts)

    def __repr__(self):
        return f"TruncatedSeries({self})"


def series_mul_inv_compose(a, b=None, mode="mul"):
    """Dispatch used by the CLI selftest: mul, inv or compose."""
    if mode == "mul":
        return a * b
    if mode == "inv":
        return a.inverse()
    if mode == "compose":
        return a.compose(b)
    raise ParameterError(f"unknown series mode {mode!r}")
