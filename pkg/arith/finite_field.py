"""Finite fields F_q with a fixed conventional modulus.

The modulus of F_{p^e} is the lexicographically least monic irreducible
polynomial of degree e over F_p, so canonical forms (integer representations
of elements, printed polynomials) are reproducible across runs.
"""
import functools
import itertools

import galois
import numpy as np
import sympy

from utils.errors import ParameterError

MAX_FIELD_ORDER = 2**16


def prime_power(q):
    """Return (p, e) with q = p^e, or raise ParameterError."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise ParameterError(f"field order must be an integer >= 2, got {q!r}")
    factors = sympy.factorint(int(q))
    if len(factors) != 1:
        raise ParameterError(f"{q} is not a prime power")
    (p, e), = factors.items()
    return int(p), int(e)


def monic_polys(GF, degree):
    """All monic polynomials of the given degree over the field class GF, in integer order."""
    q = GF.order
    for tail in range(q**degree):
        yield galois.Poly.Int(q**degree + tail, field=GF)


def is_irreducible_by_trial(poly):
    """Trial division against every monic polynomial of degree 1..deg/2."""
    GF = poly.field
    d = poly.degree
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for h in monic_polys(GF, k):
            r = poly % h
            if r.degree == 0 and r.coeffs[0] == 0:
                return False
    return True


class FiniteField:
    """F_q, q = p^e, wrapping a galois field class.

    Elements are galois scalars; ``int(x)`` is the integer representation of
    the element in the polynomial basis of the modulus.
    """

    def __init__(self, q):
        p, e = prime_power(q)
        if q > MAX_FIELD_ORDER:
            raise ParameterError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        self.p = p
        self.e = e
        self.q = q
        prime = galois.GF(p)
        if e == 1:
            self.modulus = galois.Poly([1, 0], field=prime)
            self.GF = prime
        else:
            self.modulus = galois.irreducible_poly(p, e, method="min")
            if not is_irreducible_by_trial(self.modulus):
                raise ParameterError(f"modulus {self.modulus} of F_{q} is reducible")
            self.GF = galois.GF(p**e, irreducible_poly=self.modulus)
        self.prime_field = prime

    def __repr__(self):
        return f"FiniteField({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("FiniteField", self.q))

    def __call__(self, value):
        if isinstance(value, self.GF):
            return value
        value = int(value)
        if self.e == 1 or value < 0:
            # negative integers are read in the prime field
            return self.GF(value % self.p)
        if value >= self.q:
            raise ParameterError(f"{value} is not the integer form of an element of F_{self.q}")
        return self.GF(value)

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return self.GF(0)

    @property
    def one(self):
        return self.GF(1)

    def elements(self):
        return self.GF.elements

    def nonzero_elements(self):
        return self.GF.elements[1:]

    def frobenius(self, x, times=1):
        return x ** (self.q**times)

    def poly(self, coeffs_desc):
        return galois.Poly(coeffs_desc, field=self.GF)

    def poly_from_int(self, value):
        return galois.Poly.Int(int(value), field=self.GF)

    def extension(self, degree):
        """The field F_{q^degree}; only prime q is supported for extensions."""
        if self.e != 1:
            raise ParameterError("extensions are only built over prime fields")
        return finite_field(self.q**degree)

    def check_axioms(self, exhaustive_limit=16, samples=200, rng=None):
        """Field axioms by exhaustion for small q, sampling otherwise.

        Returns a list of violation descriptions (empty when all hold).
        """
        violations = []
        elems = self.GF.elements
        if self.q <= exhaustive_limit:
            triples = itertools.product(elems, repeat=3)
        else:
            rng = rng or np.random.default_rng(0)
            picks = rng.integers(0, self.q, size=(samples, 3))
            triples = ((self.GF(int(a)), self.GF(int(b)), self.GF(int(c))) for a, b, c in picks)
        for a, b, c in triples:
            if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                violations.append(f"associativity fails at {(int(a), int(b), int(c))}")
            if a * (b + c) != a * b + a * c:
                violations.append(f"distributivity fails at {(int(a), int(b), int(c))}")
            if a + b != b + a or a * b != b * a:
                violations.append(f"commutativity fails at {(int(a), int(b))}")
        if self.q <= 64:
            for x in elems[1:]:
                if x ** (self.q - 1) != 1:
                    violations.append(f"x^(q-1) != 1 for x = {int(x)}")
                if x * (x**-1) != 1:
                    violations.append(f"no inverse for x = {int(x)}")
        return violations


@functools.lru_cache(maxsize=None)
def finite_field(q):
    return FiniteField(q)
