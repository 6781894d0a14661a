"""Zeta functions of the complete curve X and of the ring A."""
from dataclasses import dataclass
from fractions import Fraction

from arith.rational import RationalFunctionS
from utils.errors import ConsistencyError

from .zeta_function import ZetaFunction


@dataclass(frozen=True)
class CurveZeta:
    """Z_X(S) = P(S) / ((1 - S)(1 - qS)); P has integer coefficients, ascending."""

    P: tuple
    q: int
    genus: int

    def numerator(self):
        return RationalFunctionS.from_coefficients(self.P)

    def as_rational(self):
        return self.numerator() / RationalFunctionS.from_coefficients([1, -(self.q + 1), self.q])

    def evaluate_P(self, x):
        return sum(Fraction(c) * Fraction(x) ** k for k, c in enumerate(self.P))

    @property
    def class_number(self):
        """h(X) = P(1)."""
        return int(self.evaluate_P(1))

    def point_count(self, n):
        """#X(F_{q^n}) from the reciprocal roots of P (genus <= 1)."""
        if self.genus == 0:
            return self.q**n + 1
        t = -self.P[1]
        # power sums of the reciprocal roots: s_1 = t, s_n = t s_{n-1} - q s_{n-2}
        s_prev, s = 2, t
        for _ in range(1, n):
            s_prev, s = s, t * s - self.q * s_prev
        return self.q**n + 1 - s

    def violations(self, h_X):
        """Every failed property of P, as text."""
        q, g, P = self.q, self.genus, self.P
        out = []
        if len(P) - 1 != 2 * g:
            out.append(f"deg P = {len(P) - 1}, expected 2g = {2 * g}")
        if P[0] != 1:
            out.append(f"P(0) = {P[0]}")
        if P[-1] != q**g:
            out.append(f"leading coefficient {P[-1]} != q^g = {q**g}")
        if self.class_number != h_X:
            out.append(f"P(1) = {self.class_number} != h(X) = {h_X}")
        # P(1/(qX)) = q^-g X^-2g P(X), i.e. P_k = q^(k-g) P_(2g-k)
        for k in range(len(P)):
            if Fraction(P[k]) != Fraction(q) ** (k - g) * P[2 * g - k]:
                out.append(f"functional equation fails at S^{k}")
                break
        if g == 1 and P[1] ** 2 > 4 * q:
            out.append(f"|t| = {abs(P[1])} violates t^2 <= 4q")
        return out

    def __str__(self):
        return str(self.numerator())


def curve_zeta(ring):
    """P from point counts; genus 0 gives P = 1, genus 1 gives P = 1 - tS + qS^2."""
    q = ring.q
    if ring.genus == 0:
        P = (1,)
    else:
        t = q + 1 - ring.curve_point_count(1)
        P = (1, -t, q)
    z = CurveZeta(P=P, q=q, genus=ring.genus)
    h_X = ring.class_number // ring.d_inf
    problems = z.violations(h_X)
    for n in (1, 2):
        if z.point_count(n) != ring.curve_point_count(n):
            problems.append(
                f"#X(F_{q}^{n}) = {ring.curve_point_count(n)}, P predicts {z.point_count(n)}"
            )
    if problems:
        raise ConsistencyError(f"curve zeta of {ring}: " + "; ".join(problems))
    return z


def ring_zeta(ring):
    """Z_A = Z_X * (1 - S^{d_inf})."""
    z = curve_zeta(ring)
    factor = RationalFunctionS.from_coefficients([1] + [0] * (ring.d_inf - 1) + [-1])
    return ZetaFunction(z.as_rational() * factor, label="Z_A")
