"""Rings of functions on the projective line: F_q[T] and the shifted-infinity
rings A = {f in F_q(T) regular away from the zeros of g}.
"""
import re

import galois
import sympy

from arith.finite_field import finite_field
from arith.fq_poly import (
    NEG_INF,
    FqFraction,
    irreducible_polys,
    is_zero_poly,
    make_monic,
    poly_str,
)
from utils.errors import ParameterError

from .base import CoefficientRing, IdealSpace, PicGroup, Place
from .registry import RING_REGISTRY

T_SYMBOL = sympy.Symbol("T")
INF0_KEY = (1, 0)


def sympy_to_galois(expr, field, var=T_SYMBOL):
    """An integer-coefficient sympy polynomial as a galois polynomial over ``field``."""
    try:
        poly = sympy.Poly(expr, var)
    except sympy.PolynomialError as exc:
        raise ParameterError(f"{expr} is not a polynomial in {var}") from exc
    coeffs = []
    for c in poly.all_coeffs():
        if not c.is_integer:
            raise ParameterError(f"coefficient {c} of {expr} is not an integer")
        coeffs.append(field(int(c)))
    return galois.Poly(coeffs, field=field.GF)


def parse_fq_poly(text, field):
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"T": T_SYMBOL})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ParameterError(f"cannot parse polynomial {text!r}") from exc
    return sympy_to_galois(sympy.expand(expr), field)


def parse_fq_fraction(text, field):
    """A rational function in T with integer coefficients read into F_q."""
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"T": T_SYMBOL})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ParameterError(f"cannot parse element {text!r}") from exc
    extra = expr.free_symbols - {T_SYMBOL}
    if extra:
        raise ParameterError(f"unexpected symbols {sorted(map(str, extra))} in {text!r}")
    num, den = sympy.fraction(sympy.together(expr))
    den_poly = sympy_to_galois(sympy.expand(den), field)
    if is_zero_poly(den_poly):
        raise ParameterError(f"{text!r} has a denominator vanishing in characteristic {field.p}")
    return FqFraction(field, sympy_to_galois(sympy.expand(num), field), den_poly)


class GenusZeroRing(CoefficientRing):
    genus = 0

    def __init__(self, q):
        super().__init__(q)
        self.field = finite_field(q)
        self.T = FqFraction.T(self.field)

    # places

    def infinity_poly(self):
        return None

    def _poly_place(self, poly):
        return Place(key=(0, int(poly)), degree=poly.degree, label=f"[{poly_str(poly)}]", data=poly)

    def places_of_degree(self, d):
        g = self.infinity_poly()
        out = [self._poly_place(f) for f in irreducible_polys(self.q, d) if g is None or f != g]
        return sorted(out)

    def place_of_poly(self, poly):
        poly = make_monic(poly)
        if poly.degree < 1 or not poly.is_irreducible():
            raise ParameterError(f"{poly_str(poly)} is not irreducible over F_{self.q}")
        g = self.infinity_poly()
        if g is not None and poly == g:
            raise ParameterError(f"{poly_str(poly)} is the place at infinity of {self}")
        return self._poly_place(poly)

    def parse_place(self, token):
        token = token.strip()
        m = re.fullmatch(r"\[(.+)\]", token)
        if not m:
            raise ParameterError(f"unknown place {token!r} for {self}")
        return self.place_of_poly(parse_fq_poly(m.group(1), self.field))

    # elements

    def constant_value(self, c):
        return FqFraction(self.field, self.field(c))

    def parse_element_value(self, text):
        return parse_fq_fraction(text, self.field)

    def format_element(self, value):
        return str(value)

    def valuation(self, value, place):
        if place.key == INF0_KEY:
            return value.valuation_at_infinity()
        return value.valuation(place.data)

    def _finite_factors(self, value):
        factors = {}
        g = self.infinity_poly()
        for poly, sign in ((value.num, 1), (value.den, -1)):
            if poly.degree < 1:
                continue
            polys, mults = make_monic(poly).factors()
            for f, e in zip(polys, mults):
                if g is not None and f == g:
                    continue
                place = self._poly_place(f)
                factors[place] = factors.get(place, 0) + sign * int(e)
        return factors

    def principal_factors(self, value):
        if value.is_zero():
            raise ParameterError("the zero element generates no fractional ideal")
        return self._finite_factors(value)

    def curve_point_count(self, n):
        return self.q**n + 1

    # Riemann-Roch spaces

    def _space_from_conditions(self, a, conditions, inf_order):
        """Basis B*T^i/H of {x : v_Q(x) >= conditions[Q] for finite Q, v_inf0(x) >= inf_order}."""
        B = galois.Poly.One(self.field.GF)
        H = galois.Poly.One(self.field.GF)
        for poly, e in conditions.items():
            if e > 0:
                B = B * poly**e
            elif e < 0:
                H = H * poly ** (-e)
        top = H.degree - B.degree - inf_order
        dim = max(0, top + 1)

        def build(coords):
            if not coords:
                return FqFraction(self.field, 0)
            g = galois.Poly(coords[::-1], field=self.field.GF)
            return FqFraction(self.field, B * g, H)

        return dim, build

    def spec_key(self):
        g = self.infinity_poly()
        return (self.family, self.q, 0 if g is None else int(g))


@RING_REGISTRY.register()
class PolynomialRing(GenusZeroRing):
    """A = F_q[T]; infinity is the usual point of degree 1, Pic(A) is trivial."""

    family = "poly"

    @property
    def d_inf(self):
        return 1

    def element_degree(self, value):
        return value.degree

    def place_class_value(self, place):
        return 0

    def _build_pic_group(self):
        return PicGroup(self, [0], lambda a, b: 0, lambda a: 0, 0, lambda v: "1")

    def ideal_space(self, a, N):
        if not all(p.key[0] == 0 for p in a.support()):
            raise ParameterError(f"{a} is not an ideal of {self}")
        conditions = {p.data: e for p, e in a.factors}
        if N == NEG_INF:
            dim, build = 0, lambda coords: FqFraction(self.field, 0)
        else:
            dim, build = self._space_from_conditions(a, conditions, -int(N))
        return self._checked_space(IdealSpace(self, a, N, dim, build))

    def generator(self, ideal):
        """The monic generator of an ideal of F_q[T] as an element."""
        num = galois.Poly.One(self.field.GF)
        den = galois.Poly.One(self.field.GF)
        for place, e in ideal.factors:
            if e > 0:
                num = num * place.data**e
            else:
                den = den * place.data ** (-e)
        return self.element(FqFraction(self.field, num, den))

    def ideal_of_poly(self, poly):
        if isinstance(poly, str):
            poly = parse_fq_poly(poly, self.field)
        return self.principal_ideal(FqFraction(self.field, poly))

    def spec_text(self):
        return f"poly q={self.q}"

    @classmethod
    def from_params(cls, params):
        return cls(int(params.pop("q")))


@RING_REGISTRY.register()
class ShiftedInfinity(GenusZeroRing):
    """Functions regular away from the place g of degree d_inf.

    The place T = infinity of P^1 becomes the finite place inf0 of degree 1.
    Pic(A) = Z/d_inf, the class of an ideal being its degree mod d_inf.
    """

    family = "shifted"

    def __init__(self, q, g):
        super().__init__(q)
        if isinstance(g, str):
            g = parse_fq_poly(g, self.field)
        g = make_monic(g)
        if g.degree < 1 or not g.is_irreducible():
            raise ParameterError(f"g = {poly_str(g)} is not irreducible over F_{q}")
        if g.coeffs[-1] == 0:
            raise ParameterError("g(0) must be nonzero")
        self.g = g
        self.inf0 = Place(key=INF0_KEY, degree=1, label="inf0", data=None)

    def infinity_poly(self):
        return self.g

    @property
    def d_inf(self):
        return self.g.degree

    def places_of_degree(self, d):
        out = super().places_of_degree(d)
        if d == 1:
            out.append(self.inf0)
        return sorted(out)

    def parse_place(self, token):
        if token.strip() == "inf0":
            return self.inf0
        return super().parse_place(token)

    def element_degree(self, value):
        if value.is_zero():
            return NEG_INF
        return -self.d_inf * value.valuation(self.g)

    def principal_factors(self, value):
        factors = super().principal_factors(value)
        v0 = value.valuation_at_infinity()
        if v0:
            factors[self.inf0] = v0
        return factors

    def place_class_value(self, place):
        return place.degree % self.d_inf

    def _build_pic_group(self):
        n = self.d_inf
        return PicGroup(
            self,
            list(range(n)),
            lambda a, b: (a + b) % n,
            lambda a: (-a) % n,
            0,
            lambda v: f"deg={v} mod {n}",
        )

    def ideal_space(self, a, N):
        conditions = {p.data: e for p, e in a.factors if p.key != INF0_KEY}
        if N == NEG_INF:
            dim, build = 0, lambda coords: FqFraction(self.field, 0)
        else:
            conditions[self.g] = conditions.get(self.g, 0) - (int(N) // self.d_inf)
            dim, build = self._space_from_conditions(a, conditions, a.exponent(self.inf0))
        return self._checked_space(IdealSpace(self, a, N, dim, build))

    def spec_text(self):
        return f"shifted q={self.q} g={poly_str(self.g).replace(' ', '')}"

    @classmethod
    def from_params(cls, params):
        return cls(int(params.pop("q")), params.pop("g"))
