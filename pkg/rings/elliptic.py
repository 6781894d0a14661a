"""Coordinate rings A = F_q[x, y] of elliptic curves

    E : y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6

over a prime field, with infinity the origin O (so d_inf = 1 and
Pic(A) = E(F_q)). Elements of K are stored as (U(x) + V(x) y) / D(x).
"""
import math
import re

import galois
import numpy as np
import sympy

from arith.finite_field import finite_field
from arith.fq_poly import NEG_INF, is_zero_poly, make_monic, poly_degree, poly_str, scale_poly
from arith.series import FiniteFieldCoefficients, TruncatedSeries
from utils.errors import ConsistencyError, ParameterError

from .base import CoefficientRing, IdealSpace, PicGroup, Place
from .registry import RING_REGISTRY

X_SYMBOL = sympy.Symbol("x")
Y_SYMBOL = sympy.Symbol("y")
MAX_EXTENSION_ORDER = 2**16


def _ints(arr):
    return arr.view(np.ndarray).tolist()


def _poly_gcd(a, b):
    if is_zero_poly(a):
        return make_monic(b)
    if is_zero_poly(b):
        return make_monic(a)
    return galois.gcd(a, b)


class WeierstrassCurve:
    """The curve data over F_p and the geometry over its extensions."""

    def __init__(self, p, coeffs):
        if len(coeffs) != 5:
            raise ParameterError(f"expected [a1,a2,a3,a4,a6], got {coeffs}")
        self.p = p
        self.field = finite_field(p)
        self.a = tuple(int(c) % p for c in coeffs)
        a1, a2, a3, a4, a6 = self.a
        GF = self.field.GF
        self.f = galois.Poly([1, a2, a4, a6], field=GF)
        self.h = galois.Poly([a1, a3], field=GF)
        if self.discriminant() % p == 0:
            raise ParameterError(f"the curve {list(self.a)} is singular over F_{p}")
        self._points = {}

    def discriminant(self):
        a1, a2, a3, a4, a6 = self.a
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def constants(self, ext):
        return tuple(ext.GF(c) for c in self.a)

    def ext(self, d):
        if self.p**d > MAX_EXTENSION_ORDER:
            raise ParameterError(f"F_{self.p}^{d} is too large to enumerate")
        return finite_field(self.p**d)

    # points

    def points_over(self, d):
        """Affine points of E(F_{p^d}) as sorted (int x, int y) pairs."""
        if d not in self._points:
            self._points[d] = self._enumerate_points(d)
        return self._points[d]

    def _enumerate_points(self, d):
        ext = self.ext(d)
        GF = ext.GF
        a1, a2, a3, a4, a6 = self.constants(ext)
        xs = GF.elements
        ys = GF.elements
        b = a1 * xs + a3
        c = -(xs**3 + a2 * xs**2 + a4 * xs + a6)
        pts = []
        if self.p != 2:
            roots = {}
            for y, sq in zip(_ints(ys), _ints(ys * ys)):
                roots.setdefault(sq, []).append(y)
            disc = b * b - GF(4 % self.p) * c
            half = GF(2) ** -1
            for x, bi, di in zip(_ints(xs), b, _ints(disc)):
                for r in roots.get(di, []):
                    pts.append((x, int((-bi + GF(r)) * half)))
        else:
            sqrt = {sq: y for y, sq in zip(_ints(ys), _ints(ys * ys))}
            artin = {}
            for z, v in zip(_ints(ys), _ints(ys * ys + ys)):
                artin.setdefault(v, []).append(z)
            for x, bi, ci in zip(_ints(xs), b, c):
                if bi == 0:
                    pts.append((x, sqrt[int(-ci)]))
                else:
                    # y = b z turns the equation into z^2 + z = -c / b^2
                    for z in artin.get(int(-ci / (bi * bi)), []):
                        pts.append((x, int(bi * GF(z))))
        return sorted(set(pts))

    def solve_y(self, ext, x0):
        a1, a2, a3, a4, a6 = self.constants(ext)
        b = a1 * x0 + a3
        c = -(x0**3 + a2 * x0**2 + a4 * x0 + a6)
        return list(galois.Poly([ext.GF(1), b, c], field=ext.GF).roots())

    def is_on_curve(self, ext, x, y):
        a1, a2, a3, a4, a6 = self.constants(ext)
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6

    def orbit(self, ext, x, y):
        """The Frobenius orbit of (x, y) as a list of integer pairs."""
        out = []
        X, Y = ext.GF(x), ext.GF(y)
        while True:
            key = (int(X), int(Y))
            if out and key == out[0]:
                return out
            out.append(key)
            X, Y = X**self.p, Y**self.p

    # group law on E(F_{p^d}); None is the origin

    def add(self, ext, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        a1, a2, a3, a4, a6 = self.constants(ext)
        GF = ext.GF
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2 and y1 + y2 + a1 * x2 + a3 == 0:
            return None
        if x1 != x2:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        else:
            den = GF(2 % self.p) * y1 + a1 * x1 + a3
            lam = (GF(3 % self.p) * x1 * x1 + GF(2 % self.p) * a2 * x1 + a4 - a1 * y1) / den
            nu = (-(x1**3) + a4 * x1 + GF(2 % self.p) * a6 - a3 * y1) / den
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return (x3, y3)

    def negate(self, ext, P):
        if P is None:
            return None
        a1, _, a3, _, _ = self.constants(ext)
        x, y = P
        return (x, -y - a1 * x - a3)


class CurveFunction:
    """(U + V y) / D with D monic and gcd(U, V, D) = 1."""

    __slots__ = ("curve", "U", "V", "D")

    def __init__(self, curve, U, V=None, D=None, normalized=False):
        GF = curve.field.GF
        self.curve = curve
        U = U if isinstance(U, galois.Poly) else galois.Poly([GF(int(U) % curve.p)], field=GF)
        V = galois.Poly.Zero(GF) if V is None else V
        D = galois.Poly.One(GF) if D is None else D
        if not normalized:
            U, V, D = self._normalize(U, V, D)
        self.U, self.V, self.D = U, V, D

    @staticmethod
    def _normalize(U, V, D):
        if is_zero_poly(D):
            raise ZeroDivisionError("curve function with zero denominator")
        if is_zero_poly(U) and is_zero_poly(V):
            return U, V, galois.Poly.One(D.field)
        g = _poly_gcd(_poly_gcd(U, V), D)
        if g.degree > 0:
            U, V, D = U // g, V // g, D // g
        lead = D.coeffs[0]
        if lead != 1:
            inv = lead**-1
            U, V, D = scale_poly(U, inv), scale_poly(V, inv), scale_poly(D, inv)
        return U, V, D

    def _coerce(self, other):
        if isinstance(other, CurveFunction):
            return other
        return CurveFunction(self.curve, other)

    def is_zero(self):
        return is_zero_poly(self.U) and is_zero_poly(self.V)

    @property
    def characteristic(self):
        return self.curve.p

    @property
    def degree(self):
        """Pole order at O: x has a double pole, y a triple pole."""
        if self.is_zero():
            return NEG_INF
        return max(2 * poly_degree(self.U), 2 * poly_degree(self.V) + 3) - 2 * self.D.degree

    def norm_numerator(self):
        """N(U + V y) = U^2 - U V h - V^2 f, a polynomial in x."""
        h, f = self.curve.h, self.curve.f
        return self.U * self.U - self.U * self.V * h - self.V * self.V * f

    def __add__(self, other):
        other = self._coerce(other)
        return CurveFunction(
            self.curve,
            self.U * other.D + other.U * self.D,
            self.V * other.D + other.V * self.D,
            self.D * other.D,
        )

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.curve, -self.U, -self.V, self.D, normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        h, f = self.curve.h, self.curve.f
        vv = self.V * other.V
        # y^2 = f - h y
        return CurveFunction(
            self.curve,
            self.U * other.U + vv * f,
            self.U * other.V + other.U * self.V - vv * h,
            self.D * other.D,
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the function field")
        # conjugate y -> -y - h
        norm = self.norm_numerator()
        return CurveFunction(
            self.curve, self.D * (self.U - self.V * self.curve.h), -(self.D * self.V), norm
        )

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = CurveFunction(self.curve, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, CurveFunction):
            if isinstance(other, int):
                other = self._coerce(other)
            else:
                return NotImplemented
        return self.U == other.U and self.V == other.V and self.D == other.D

    def __hash__(self):
        return hash((int(self.U), int(self.V), int(self.D)))

    def __str__(self):
        parts = []
        if not is_zero_poly(self.U):
            parts.append(poly_str(self.U, "x"))
        if not is_zero_poly(self.V):
            v = poly_str(self.V, "x")
            parts.append("y" if v == "1" else f"({v})*y")
        body = " + ".join(parts) if parts else "0"
        if self.D.degree == 0:
            return body
        return f"({body})/({poly_str(self.D, 'x')})"

    def __repr__(self):
        return f"CurveFunction({self})"


@RING_REGISTRY.register()
class EllipticRing(CoefficientRing):
    """A = F_q[x, y] for an elliptic curve over a prime field F_q."""

    family = "elliptic"
    genus = 1

    def __init__(self, q, coeffs):
        super().__init__(q)
        self.field = finite_field(q)
        if self.field.e != 1:
            raise ParameterError("elliptic rings are supported over prime fields only")
        self.curve = WeierstrassCurve(q, coeffs)
        GF = self.field.GF
        self.x = self.element(CurveFunction(self.curve, galois.Poly([1, 0], field=GF)))
        self.y = self.element(
            CurveFunction(self.curve, galois.Poly.Zero(GF), galois.Poly.One(GF), normalized=True)
        )

    @property
    def d_inf(self):
        return 1

    @property
    def max_place_degree(self):
        return int(math.log(MAX_EXTENSION_ORDER, self.q) + 1e-9)

    @property
    def frobenius_trace(self):
        return self.q + 1 - self.curve_point_count(1)

    def curve_point_count(self, n):
        return len(self.curve.points_over(n)) + 1

    # places

    def _place(self, d, key):
        x, y = key
        label = f"P({x},{y})" if d == 1 else f"P[{d}]({x},{y})"
        return Place(key=(d, x, y), degree=d, label=label, data=(d, x, y))

    def places_of_degree(self, d):
        ext = self.curve.ext(d)
        seen = set()
        out = []
        for x, y in self.curve.points_over(d):
            if (x, y) in seen:
                continue
            orbit = self.curve.orbit(ext, x, y)
            seen.update(orbit)
            if len(orbit) == d:
                out.append(self._place(d, min(orbit)))
        return sorted(out)

    def place_of_point(self, ext_degree, x, y):
        ext = self.curve.ext(ext_degree)
        orbit = self.curve.orbit(ext, int(x), int(y))
        if len(orbit) != ext_degree:
            raise ParameterError(
                f"point ({int(x)},{int(y)}) has degree {len(orbit)}, not {ext_degree}"
            )
        return self._place(ext_degree, min(orbit))

    def place_point(self, place):
        d, x, y = place.data
        ext = self.curve.ext(d)
        return ext, ext.GF(x), ext.GF(y)

    def places_above(self, m):
        """Places whose x-coordinate is a root of the irreducible m(x)."""
        k = m.degree
        for ext_degree in (k, 2 * k):
            ext = self.curve.ext(ext_degree)
            m_ext = galois.Poly([ext.GF(int(c)) for c in m.coeffs], field=ext.GF)
            x0 = m_ext.roots()[0]
            ys = self.curve.solve_y(ext, x0)
            if ys:
                return sorted({self.place_of_point(ext_degree, x0, y) for y in ys})
        raise ConsistencyError(f"no point of E above the roots of {poly_str(m, 'x')}")

    def x_minimal_poly(self, place):
        ext, x0, _ = self.place_point(place)
        if ext.e == 1:
            return galois.Poly([1, -int(x0) % self.q], field=self.field.GF)
        return galois.Poly([int(c) for c in x0.minimal_poly().coeffs], field=self.field.GF)

    def parse_place(self, token):
        token = token.strip()
        m = re.fullmatch(r"P(?:\[(\d+)\])?\(\s*(\d+)\s*,\s*(\d+)\s*\)", token)
        if not m:
            raise ParameterError(f"unknown place {token!r}; use P(x,y) or P[d](x,y)")
        d = int(m.group(1) or 1)
        x, y = int(m.group(2)), int(m.group(3))
        ext = self.curve.ext(d)
        if x >= ext.q or y >= ext.q:
            raise ParameterError(f"({x},{y}) is not a point over F_{ext.q}")
        if not self.curve.is_on_curve(ext, ext.GF(x), ext.GF(y)):
            raise ParameterError(f"({x},{y}) does not lie on {self}")
        return self.place_of_point(d, x, y)

    # Picard group = E(F_q)

    def _pic_add(self, P, Q):
        GF = self.field.GF
        R = self.curve.add(
            self.field,
            None if P == () else (GF(P[0]), GF(P[1])),
            None if Q == () else (GF(Q[0]), GF(Q[1])),
        )
        return () if R is None else (int(R[0]), int(R[1]))

    def _pic_neg(self, P):
        if P == ():
            return ()
        GF = self.field.GF
        R = self.curve.negate(self.field, (GF(P[0]), GF(P[1])))
        return (int(R[0]), int(R[1]))

    def _build_pic_group(self):
        values = [()] + list(self.curve.points_over(1))
        return PicGroup(
            self,
            values,
            self._pic_add,
            self._pic_neg,
            (),
            lambda v: "O" if v == () else f"({v[0]},{v[1]})",
        )

    def place_class_value(self, place):
        """The class of a prime ideal is the sum of the points of its place."""
        d, x, y = place.data
        ext = self.curve.ext(d)
        total = None
        for px, py in self.curve.orbit(ext, x, y):
            total = self.curve.add(ext, total, (ext.GF(px), ext.GF(py)))
        if total is None:
            return ()
        tx, ty = int(total[0]), int(total[1])
        if tx >= self.q or ty >= self.q:
            raise ConsistencyError(f"trace of {place} is not rational")
        return (tx, ty)

    # elements

    def constant_value(self, c):
        return CurveFunction(self.curve, self.field(c))

    def element_degree(self, value):
        return value.degree

    def parse_element_value(self, text):
        try:
            expr = sympy.sympify(
                text.replace("^", "**"), locals={"x": X_SYMBOL, "y": Y_SYMBOL}
            )
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise ParameterError(f"cannot parse element {text!r}") from exc
        extra = expr.free_symbols - {X_SYMBOL, Y_SYMBOL}
        if extra:
            raise ParameterError(f"unexpected symbols {sorted(map(str, extra))} in {text!r}")
        num, den = sympy.fraction(sympy.together(expr))
        den_value = self._from_sympy(den)
        if den_value.is_zero():
            raise ParameterError(f"{text!r} has a vanishing denominator over F_{self.q}")
        return self._from_sympy(num) / den_value

    def _from_sympy(self, expr):
        poly = sympy.Poly(sympy.expand(expr), X_SYMBOL, Y_SYMBOL)
        x, y = self.x.value, self.y.value
        out = CurveFunction(self.curve, 0)
        for (i, j), c in poly.terms():
            if not c.is_integer:
                raise ParameterError(f"coefficient {c} is not an integer")
            out = out + (x**i) * (y**j) * int(c)
        return out

    def format_element(self, value):
        return str(value)

    # local analysis

    def local_coordinates(self, place, precision):
        """Series of x and y in a uniformizer s at the place, to O(s^precision)."""
        ext, x0, y0 = self.place_point(place)
        R = FiniteFieldCoefficients(ext)
        a1, a2, a3, a4, a6 = self.curve.constants(ext)
        GF = ext.GF
        fy = GF(2 % self.q) * y0 + a1 * x0 + a3
        if fy != 0:
            X = TruncatedSeries(R, "s", [x0, GF(1)], precision)
            Y = TruncatedSeries(R, "s", [y0], precision)
            inv = fy**-1
            for _ in range(precision):
                G = Y * Y + (X.scale(a1) + a3) * Y - self._eval_f(X, ext)
                Y = Y - G.scale(inv)
        else:
            fx = a1 * y0 - GF(3 % self.q) * x0 * x0 - GF(2 % self.q) * a2 * x0 - a4
            X = TruncatedSeries(R, "s", [x0], precision)
            Y = TruncatedSeries(R, "s", [y0, GF(1)], precision)
            inv = fx**-1
            for _ in range(precision):
                G = Y * Y + (X.scale(a1) + a3) * Y - self._eval_f(X, ext)
                X = X - G.scale(inv)
        return X, Y

    def _eval_f(self, X, ext):
        return self._eval_poly(self.curve.f, X, ext)

    @staticmethod
    def _eval_poly(poly, X, ext):
        acc = TruncatedSeries.zero(X.ring, X.variable, X.precision)
        for c in poly.coeffs:
            acc = acc * X + ext.GF(int(c))
        return acc

    def _order(self, U, V, place, bound):
        prec = max(bound, 0) + 1
        ext, _, _ = self.place_point(place)
        X, Y = self.local_coordinates(place, prec)
        series = self._eval_poly(U, X, ext)
        if not is_zero_poly(V):
            series = series + self._eval_poly(V, X, ext) * Y
        if series.is_zero():
            raise ConsistencyError(f"nonzero function vanishes to order {prec} at {place}")
        return series.valuation

    def valuation(self, value, place):
        if value.is_zero():
            raise ParameterError("valuation of zero")
        num_bound = max(2 * poly_degree(value.U), 2 * poly_degree(value.V) + 3)
        v = self._order(value.U, value.V, place, num_bound)
        if value.D.degree > 0:
            v -= self._order(value.D, galois.Poly.Zero(self.field.GF), place, 2 * value.D.degree)
        return v

    def principal_factors(self, value):
        if value.is_zero():
            raise ParameterError("the zero element generates no fractional ideal")
        candidates = {}
        for poly in (value.norm_numerator(), value.D):
            if poly.degree < 1:
                continue
            for m in make_monic(poly).factors()[0]:
                candidates[int(m)] = m
        factors = {}
        for key in sorted(candidates):
            for place in self.places_above(candidates[key]):
                v = self.valuation(value, place)
                if v:
                    factors[place] = v
        return factors

    # Riemann-Roch spaces

    def ideal_space(self, a, N):
        GF = self.field.GF
        if N == NEG_INF:
            return self._checked_space(
                IdealSpace(self, a, N, 0, lambda coords: CurveFunction(self.curve, 0))
            )
        N = int(N)
        # allowed poles: H(x) with v_P(H) >= -n_P wherever n_P < 0
        H_parts = {}
        for place, e in a.factors:
            if e < 0:
                m = self.x_minimal_poly(place)
                em = self._order(m, galois.Poly.Zero(GF), place, 2 * m.degree)
                need = math.ceil(-e / em)
                H_parts[int(m)] = (m, max(need, H_parts.get(int(m), (m, 0))[1]))
        H = galois.Poly.One(GF)
        for m, c in H_parts.values():
            H = H * m**c
        conditions = {}
        for place, e in a.factors:
            conditions[place] = e
        for m, _ in H_parts.values():
            for place in self.places_above(m):
                conditions.setdefault(place, 0)
        top = N + 2 * H.degree
        monomials = [(j, 0) for j in range(top // 2 + 1)]
        monomials += [(j, 1) for j in range((top - 3) // 2 + 1)] if top >= 3 else []
        monomials.sort(key=lambda m: 2 * m[0] + 3 * m[1])
        if top < 0 or not monomials:
            return self._checked_space(
                IdealSpace(self, a, N, 0, lambda coords: CurveFunction(self.curve, 0))
            )
        rows = []
        for place, e in sorted(conditions.items()):
            need = e + (self._order(H, galois.Poly.Zero(GF), place, 2 * H.degree) if H.degree else 0)
            if need > 0:
                rows.extend(self._condition_rows(place, need, monomials))
        if rows:
            basis = GF(rows).null_space()
            if basis.shape[0]:
                basis = basis.row_reduce()
        else:
            basis = GF(np.eye(len(monomials), dtype=int))
        dim = basis.shape[0]

        def build(coords):
            if not dim:
                return CurveFunction(self.curve, 0)
            vec = GF([int(c) for c in coords]) @ basis
            U = [0] * (top // 2 + 1)
            V = [0] * (top // 2 + 1)
            for (j, k), c in zip(monomials, _ints(vec)):
                (V if k else U)[j] = c
            return CurveFunction(
                self.curve,
                galois.Poly(U[::-1], field=GF),
                galois.Poly(V[::-1], field=GF),
                H,
            )

        return self._checked_space(IdealSpace(self, a, N, dim, build))

    def _condition_rows(self, place, need, monomials):
        """Linear conditions over F_p for ord_place(sum c_m m) >= need."""
        ext, _, _ = self.place_point(place)
        X, Y = self.local_coordinates(place, need)
        columns = []
        power = TruncatedSeries.one(X.ring, X.variable, need)
        powers = []
        for _ in range(max(j for j, _ in monomials) + 1):
            powers.append(power)
            power = power * X
        for j, k in monomials:
            series = powers[j] * Y if k else powers[j]
            column = []
            for n in range(need):
                column.extend(_ints(ext.GF(int(series.coefficient(n))).vector()))
            columns.append(column)
        return [list(row) for row in zip(*columns)]

    def spec_key(self):
        return (self.family, self.q, self.curve.a)

    def spec_text(self):
        return f"elliptic q={self.q} a=[{','.join(str(c) for c in self.curve.a)}]"

    @classmethod
    def from_params(cls, params):
        raw = params.pop("a", None)
        if raw is None:
            raise ParameterError("elliptic ring needs a=[a1,a2,a3,a4,a6]")
        coeffs = [int(c) for c in raw.strip("[]").split(",") if c.strip()]
        return cls(int(params.pop("q")), coeffs)
