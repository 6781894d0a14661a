"""Free graded commutative Laurent polynomials over an exact coefficient field.

Generators carry an integer weight; no relations are imposed between them.
Used to carry the coefficients of general-rank Drinfeld modules and of the
reciprocal polynomials S_m as opaque symbols whose weights can be checked.
"""
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class GradedSymbol:
    name: str
    weight: int

    def __str__(self):
        return self.name


def _monomial_weight(monomial):
    return sum(sym.weight * exp for sym, exp in monomial)


def _monomial_str(monomial):
    if not monomial:
        return "1"
    return "*".join(str(sym) if exp == 1 else f"{sym}^{exp}" for sym, exp in monomial)


def _mul_monomials(a, b):
    exps = dict(a)
    for sym, e in b:
        exps[sym] = exps.get(sym, 0) + e
    return tuple(sorted((s, e) for s, e in exps.items() if e != 0))


def _characteristic(c):
    return getattr(c, "characteristic", 0)


def _is_power_of(n, p):
    if p < 2 or n < p:
        return False
    while n % p == 0:
        n //= p
    return n == 1


class GradedElem:
    """A finite sum of coefficient * monomial; a monomial is a sorted tuple of
    (GradedSymbol, nonzero exponent)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if c != 0:
                clean[mono] = c
        self.terms = clean

    @classmethod
    def symbol(cls, sym, coeff=1):
        return cls({((sym, 1),): coeff})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    def _coerce(self, other):
        if isinstance(other, GradedElem):
            return other
        return GradedElem.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c if mono in out else c
        return GradedElem(out)

    __radd__ = __add__

    def __neg__(self):
        return GradedElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedElem):
            return GradedElem({m: c * other for m, c in self.terms.items()})
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mul_monomials(ma, mb)
                out[m] = out[m] + ca * cb if m in out else ca * cb
        return GradedElem(out)

    def __rmul__(self, other):
        return GradedElem({m: other * c for m, c in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, GradedElem):
            return self * other.inverse()
        return GradedElem({m: c / other for m, c in self.terms.items()})

    def inverse(self):
        """Inverse of a single term; sums of several monomials are not invertible here."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible in the free graded ring")
        (mono, c), = self.terms.items()
        inv = 1 / c if not isinstance(c, int) else Fraction(1, c)
        return GradedElem({tuple((s, -e) for s, e in mono): inv})

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return GradedElem.constant(1)
        coeffs = list(self.terms.values())
        p = _characteristic(coeffs[0]) if coeffs else 0
        if p and _is_power_of(n, p):
            # (sum c m)^(p^k) = sum c^(p^k) m^(p^k) in characteristic p
            return GradedElem(
                {tuple((s, e * n) for s, e in m): c**n for m, c in self.terms.items()}
            )
        result = GradedElem.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((m, str(c)) for m, c in self.terms.items())))

    def is_zero(self):
        return not self.terms

    def monomials(self):
        return sorted(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            if mono == ():
                parts.append(f"({c})")
            elif c == 1:
                parts.append(_monomial_str(mono))
            else:
                parts.append(f"({c})*{_monomial_str(mono)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"GradedElem({self})"


@dataclass
class WeightReport:
    weight: int = None
    offending: list = None

    @property
    def homogeneous(self):
        return self.weight is not None


def graded_weight_check(elem):
    """The common weight of all monomials, or a report of every (monomial, weight) pair."""
    if isinstance(elem, GradedSymbol):
        return WeightReport(weight=elem.weight, offending=[])
    weights = {mono: _monomial_weight(mono) for mono in elem.terms}
    distinct = set(weights.values())
    if len(distinct) <= 1:
        return WeightReport(weight=distinct.pop() if distinct else 0, offending=[])
    return WeightReport(
        weight=None,
        offending=[(_monomial_str(m), w) for m, w in sorted(weights.items())],
    )
