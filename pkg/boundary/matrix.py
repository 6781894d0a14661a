"""The cuspidal divisor matrix of the twisted discriminants and its Frobenius-determinant check."""
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from arith.cyclotomic import CyclotomicNumber
from arith.rational import to_fraction
from utils.errors import ConsistencyError, ParameterError
from zeta.characters import characters, l_function
from zeta.partial import class_zeta

from .orders import ord_discriminant_twisted


@dataclass
class DivisorMatrix:
    """Rows: boundary divisors (a) in Pic(A) order. Columns: representatives n_i."""

    ring: str
    r: int
    b: str
    rows: list
    columns: list
    entries: list
    determinant: int = 0

    @property
    def index(self):
        """|det|, the index of the span of the divisors div(Delta_{n_i}^b)."""
        return abs(self.determinant)

    def format(self):
        width = max(len(str(x)) for row in self.entries for x in row)
        lines = ["      " + " ".join(c.rjust(width) for c in self.columns)]
        for label, row in zip(self.rows, self.entries):
            lines.append(f"{label:>5} " + " ".join(str(x).rjust(width) for x in row))
        return "\n".join(lines)


def _column_order(ring, reps):
    group = ring.picard_group()
    classes = [ring.ideal_class(n) for n in reps]
    if len({c.value for c in classes}) != group.order or len(reps) != group.order:
        raise ParameterError(f"{len(reps)} representatives do not cover the {group.order} classes once each")
    return [n for _, n in sorted(zip(classes, reps), key=lambda cn: group.index(cn[0]))]


def _representatives(ring, reps):
    if reps is None:
        reps = ring.choose_representatives_T("nontrivial")
    for n in reps:
        if not n.is_integral() or n.is_unit():
            raise ParameterError(f"representative {n} is not a proper integral ideal")
    return _column_order(ring, reps)


def exact_determinant(rows):
    """Determinant of a square matrix of integers or Fractions, exactly."""
    if not rows:
        return Fraction(1)
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, row)] for row in rows])
    return to_fraction(m.det())


def cuspidal_matrix(ring, r, reps=None, b=None):
    """M((a), n_i) = ord_(a)(Delta_{n_i}^b); a nonzero determinant is a ConsistencyError otherwise."""
    b = ring.unit_ideal() if b is None else b
    reps = _representatives(ring, reps)
    classes = ring.picard_group().classes()
    entries = [[int(ord_discriminant_twisted(ring, n, b, a, r)) for n in reps] for a in classes]
    det = exact_determinant(entries)
    out = DivisorMatrix(
        ring=str(ring),
        r=r,
        b=str(b),
        rows=[c.label for c in classes],
        columns=[str(n) for n in reps],
        entries=entries,
        determinant=int(det),
    )
    if det == 0:
        raise ConsistencyError(f"cuspidal matrix of {ring} (r = {r}) is singular:\n{out.format()}")
    return out


@dataclass
class FrobeniusCheck:
    det_N: Fraction
    l_values: list = field(default_factory=list)
    l_product: Fraction = None
    nonvanishing: bool = True
    match: bool = False
    sign: int = 1


def frobenius_det_crosscheck(ring, r, reps=None, b=None):
    """det N with N((a), n_i) = zeta_(a^-1 b^-1 n_i)(1-r) against prod_chi L_A(chi, 1-r).

    N is a group matrix of Pic(A) up to the column order, so the two agree up to sign.
    """
    b = ring.unit_ideal() if b is None else b
    reps = _representatives(ring, reps)
    q = ring.q
    b_inv = ring.ideal_class(b).inverse()
    rows = []
    for a in ring.picard_group().classes():
        base = a.inverse() * b_inv
        rows.append([class_zeta(ring, base * ring.ideal_class(n)).special_value(q, r) for n in reps])
    det_N = exact_determinant(rows)

    l_values = []
    product = None
    for chi in characters(ring.picard_group()):
        value = l_function(ring, chi).special_value(r)
        l_values.append((str(chi), value))
        if value.is_zero():
            raise ConsistencyError(f"L_A({chi}, 1 - {r}) = 0 on {ring}")
        product = value if product is None else product * value
    if not isinstance(product, CyclotomicNumber) or not product.is_rational():
        raise ConsistencyError(f"product of L-values {product} is not rational")
    l_product = product.to_fraction()
    match = abs(det_N) == abs(l_product)
    sign = 1 if det_N == l_product else -1
    return FrobeniusCheck(det_N, l_values, l_product, True, match, sign)
