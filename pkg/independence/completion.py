"""Embeddings of the function field K into its completion K_inf at infinity.

Elements of K_inf are TruncatedSeries in the uniformizer ``pi`` over the
residue field F_{q_inf}. One context class per ring family:

* poly: pi = 1/T, residue field F_q;
* shifted: pi = g(T), residue field F_q[T]/g = F_{q^d}, T = theta + O(pi);
* elliptic: pi = x/y, residue field F_q, x = pi^-2 (1 + ...), y = pi^-3 (1 + ...).

``precision`` counts pi-digits relative to the valuation of the image.
"""
import galois
from dassl.utils import Registry

from arith.finite_field import finite_field, monic_polys
from arith.fq_poly import FqFraction, is_zero_poly, poly_str
from arith.series import FiniteFieldCoefficients, TruncatedSeries
from rings.base import FieldElement
from rings.registry import lookup_family
from utils.errors import ConsistencyError, ParameterError, PrecisionError

COMPLETION_REGISTRY = Registry("COMPLETION")
VARIABLE = "pi"


def _horner(poly, X, relative):
    """poly(X) for a galois polynomial; ``relative`` digits beyond the valuation of X^deg."""
    coeffs = list(poly.coeffs)
    acc = TruncatedSeries(X.ring, X.variable, [coeffs[0]], relative)
    for c in coeffs[1:]:
        acc = acc * X + c
    return acc


class CompletionContext:
    family = None
    uniformizer = ""

    def __init__(self, ring, precision=4):
        if precision < 1:
            raise ParameterError(f"completion precision must be >= 1, got {precision}")
        self.ring = ring
        self.precision = precision
        self.residue_field = self._residue_field()
        self.coefficients = FiniteFieldCoefficients(self.residue_field)

    def _residue_field(self):
        return self.ring.field

    def _embed_value(self, value, relative):
        raise NotImplementedError

    def embed(self, x, relative=None):
        """The image of x in K_inf, ``relative`` pi-digits past its valuation."""
        relative = self.precision if relative is None else relative
        if not isinstance(x, FieldElement):
            x = self.ring.element(x)
        if x.is_zero():
            return TruncatedSeries.zero(self.coefficients, VARIABLE, relative)
        out = self._embed_value(x.value, relative)
        if out.is_zero():
            raise PrecisionError(f"no nonzero digit of {x} below pi^{out.precision}")
        return out

    def expected_valuation(self, x):
        """v_pi(x) = -deg x / d_inf, i.e. |x| = q^deg x."""
        deg = x.degree
        if deg % self.ring.d_inf:
            raise ConsistencyError(f"deg {x} = {deg} is not a multiple of d_inf = {self.ring.d_inf}")
        return -deg // self.ring.d_inf

    def check_valuation(self, x):
        got = self.embed(x).order()
        want = self.expected_valuation(x)
        if got != want:
            raise ConsistencyError(f"v_pi({x}) = {got}, expected {want} from deg = {x.degree}")
        return got

    def check_homomorphism(self, x, y):
        """Violations of embed(x + y) = embed(x) + embed(y) and embed(x y) = embed(x) embed(y)."""
        ex, ey = self.embed(x), self.embed(y)
        out = []
        if not (x + y).is_zero() and not self.embed(x + y).agrees_with(ex + ey):
            out.append(f"sum of {x} and {y}")
        if not self.embed(x * y).agrees_with(ex * ey):
            out.append(f"product of {x} and {y}")
        return out

    def describe(self):
        return f"K_inf of {self.ring}: pi = {self.uniformizer}, residue field F_{self.residue_field.q}"


@COMPLETION_REGISTRY.register()
class PolynomialCompletion(CompletionContext):
    family = "poly"
    uniformizer = "1/T"

    def _inverse_uniformizer(self, relative):
        return TruncatedSeries.monomial(self.coefficients, VARIABLE, -1, relative - 1)

    def _embed_value(self, value, relative):
        T = self._inverse_uniformizer(relative)
        return _horner(value.num, T, relative) / _horner(value.den, T, relative)


@COMPLETION_REGISTRY.register()
class ShiftedCompletion(CompletionContext):
    """pi = g; T is the root of g(X) = pi lifting the root theta of g in F_{q^d}."""

    family = "shifted"

    def __init__(self, ring, precision=4):
        self._t_series = None
        super().__init__(ring, precision)
        self.uniformizer = poly_str(ring.g)
        g_ext = galois.Poly([int(c) for c in ring.g.coeffs], field=self.residue_field.GF)
        self.theta = min(g_ext.roots(), key=int)
        self.g_ext = g_ext

    def _residue_field(self):
        return self.ring.field.extension(self.ring.d_inf)

    def t_series(self, precision):
        """T as a pi-adic series: X <- X - (g(X) - pi) / g'(theta) from X = theta."""
        if self._t_series is not None and self._t_series.precision >= precision:
            return self._t_series.truncate(precision)
        R = self.coefficients
        pi = TruncatedSeries.monomial(R, VARIABLE, 1, precision)
        step = self.residue_field.one / self.g_ext.derivative()(self.theta)
        X = TruncatedSeries(R, VARIABLE, [self.theta], precision)
        # the iteration gains one digit per pass; the residual test below certifies the root
        for _ in range(precision + 1):
            X = X - (_horner(self.ring.g, X, precision) - pi).scale(step)
        if not (_horner(self.ring.g, X, precision) - pi).is_zero():
            raise ConsistencyError(f"no pi-adic root of g(X) = pi to O(pi^{precision})")
        self._t_series = X
        return X

    def _embed_value(self, value, relative):
        g = self.ring.g
        v_num = 0 if value.num.degree == 0 else FqFraction.from_poly(value.field, value.num).valuation(g)
        v_den = 0 if value.den.degree == 0 else FqFraction.from_poly(value.field, value.den).valuation(g)
        working = relative + max(v_num, v_den)
        T = self.t_series(working)
        return _horner(value.num, T, working) / _horner(value.den, T, working)

    def digit_value(self, poly):
        """A residue class of F_q[T] mod g as an element of F_{q^d}, T -> theta."""
        lifted = galois.Poly([int(c) for c in poly.coeffs], field=self.residue_field.GF)
        return lifted(self.theta)

    def from_g_adic(self, v, digits):
        """sum_i d_i(T) pi^(v + i) for a g-adic digit expansion, to O(pi^(v + len(digits)))."""
        P = len(digits)
        T = self.t_series(P)
        total = TruncatedSeries.zero(self.coefficients, VARIABLE, v + P)
        for i, d in enumerate(digits):
            if not is_zero_poly(d):
                total = total + _horner(d, T, P - i).shift(v + i)
        return total


@COMPLETION_REGISTRY.register()
class EllipticCompletion(CompletionContext):
    """pi = x/y = -z for the usual parameter z = -x/y, w = -1/y of the Weierstrass model."""

    family = "elliptic"
    uniformizer = "x/y"

    def __init__(self, ring, precision=4):
        self._xy = {}
        super().__init__(ring, precision)

    def _w_series(self, absolute):
        a1, a2, a3, a4, a6 = (self.coefficients.coerce(int(c)) for c in self.ring.curve.a)
        R = self.coefficients
        z = TruncatedSeries.monomial(R, VARIABLE, 1, absolute)
        z2, z3 = z * z, z * z * z
        # w = O(z^3); each pass of the contraction fixes one more digit
        w = TruncatedSeries.zero(R, VARIABLE, 3)
        while w.precision < absolute:
            w2 = w * w
            w = z3 + (z * w).scale(a1) + (z2 * w).scale(a2) + w2.scale(a3) + (z * w2).scale(a4) + (w2 * w).scale(a6)
        return z, w.truncate(absolute)

    @staticmethod
    def _negate_variable(s):
        coeffs = [c if (s.valuation + k) % 2 == 0 else -c for k, c in enumerate(s.coeffs)]
        return TruncatedSeries(s.ring, s.variable, coeffs, s.precision, s.valuation)

    def xy_series(self, relative):
        """(x, y) in pi with ``relative`` digits each."""
        if relative not in self._xy:
            z, w = self._w_series(relative + 3)
            w_inv = w.inverse()
            x = self._negate_variable(z * w_inv)
            y = self._negate_variable(-w_inv)
            self._xy[relative] = (x, y)
        return self._xy[relative]

    def _embed_value(self, value, relative):
        x, y = self.xy_series(relative)
        out = None
        if not is_zero_poly(value.U):
            out = _horner(value.U, x, relative)
        if not is_zero_poly(value.V):
            term = _horner(value.V, x, relative) * y
            out = term if out is None else out + term
        return out / _horner(value.D, x, relative)


def completion_context(ring, precision=4):
    ctx_cls = lookup_family(COMPLETION_REGISTRY, ring.family)
    if ctx_cls is None:
        raise ParameterError(f"no completion at infinity for ring family {ring.family!r}")
    return ctx_cls(ring, precision)


def embed_at_infinity(ctx, x):
    return ctx.embed(x)


def g_adic_digits(f, g, precision):
    """(v, [d_0, ..., d_{P-1}]) with f = g^v (d_0 + d_1 g + ...) mod g^(v+P), deg d_i < deg g.

    Computed by division with remainder only, independently of any series code.
    """
    if f.is_zero():
        raise ParameterError("the zero function has no g-adic expansion")
    v = f.valuation(g)
    num, den = f.num, f.den
    if v > 0:
        num = num // g**v
    elif v < 0:
        den = den // g ** (-v)
    modulus = g**precision
    gcd, s, _ = galois.egcd(den, modulus)
    if gcd.degree != 0:
        raise ConsistencyError(f"denominator {poly_str(den)} is not prime to {poly_str(g)}")
    rest = (num * s // gcd) % modulus
    digits = []
    for _ in range(precision):
        rest, d = divmod(rest, g)
        digits.append(d)
    return v, digits


def _fraction_series(fq, f, relative):
    ctx_ring = FiniteFieldCoefficients(fq)
    T = TruncatedSeries.monomial(ctx_ring, VARIABLE, -1, relative - 1)
    return _horner(f.num, T, relative) / _horner(f.den, T, relative)


def carlitz_period_power(q, precision):
    """-prod_{i>=1} (1 - [i]/[i+1])^(q-1) in F_q((1/T)) to O(pi^precision).

    Equals the lattice sum sum'_{b in A} b^(1-q), the constant term of E_{q-1}.
    """
    fq = finite_field(q)
    T = FqFraction.T(fq)
    R = FiniteFieldCoefficients(fq)
    product = TruncatedSeries.one(R, VARIABLE, precision)
    i = 1
    while q ** (i + 1) - q**i < precision:
        ratio = (T ** (q**i) - T) / (T ** (q ** (i + 1)) - T)
        product = product * (1 - _fraction_series(fq, ratio, precision))
        i += 1
    return -(product ** (q - 1)).truncate(precision)


def lattice_sum_at_infinity(q, k, degree_bound):
    """sum over nonzero b in F_q[T] with deg b <= D of b^-k, exact to O(pi^(k (D + 1)))."""
    if k < 1 or degree_bound < 0:
        raise ParameterError(f"need k >= 1 and D >= 0, got k = {k}, D = {degree_bound}")
    fq = finite_field(q)
    R = FiniteFieldCoefficients(fq)
    precision = k * (degree_bound + 1)
    total = TruncatedSeries.zero(R, VARIABLE, precision)
    # b = c m with m monic: the units contribute the scalar sum_c c^-k, zero unless (q - 1) | k
    units = fq.zero
    for c in fq.nonzero_elements():
        units = units + c ** (-k)
    if units == 0:
        return total
    for d in range(degree_bound + 1):
        for b in monic_polys(fq.GF, d):
            term = _fraction_series(fq, FqFraction.from_poly(fq, b), precision) ** (-k)
            total = total + term
    return total.scale(units).truncate(precision)
