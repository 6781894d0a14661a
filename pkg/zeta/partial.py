"""Partial zeta functions: one per ideal class, and one per coset x + a."""
from collections import Counter
from fractions import Fraction

from arith.fq_poly import NEG_INF
from arith.rational import RationalFunctionS
from rings.base import FieldElement
from utils.errors import ConsistencyError

from .zeta_function import ZetaFunction, geometric_tail


def _class_representative(ring, cls):
    for I in ring.choose_representatives_T("minimal_degree"):
        if ring.ideal_class(I) == cls:
            return I
    raise ConsistencyError(f"class {cls} has no representative")


def ideal_count_by_riemann_roch(ring, cls, n):
    """#integral ideals of degree n in ``cls``, as effective divisors of degree n
    linearly equivalent to a + m*inf minus those containing inf."""
    a = _class_representative(ring, cls)
    m, rest = divmod(n - a.degree, ring.d_inf)
    if rest:
        return 0
    q = ring.q

    def effective(k):
        return (q ** ring.riemann_roch_count(a, k) - 1) // (q - 1)

    return effective(m) - effective(m - 1)


def class_zeta(ring, cls):
    """Z_(c)(S) = sum over integral ideals n in c of S^deg n.

    The head up to degree 2g - 2 + d_inf comes from ideal enumeration; from
    there on the counts follow Riemann-Roch and sum to a geometric tail.
    """
    return ring.cached(("class_zeta", cls.value), lambda: _class_zeta(ring, cls))


def _class_zeta(ring, cls):
    q, g, d = ring.q, ring.genus, ring.d_inf
    stable = 2 * g - 1 + d
    head = {}
    for n in range(stable):
        count = ring.count_ideals_by_class(n)[cls.value]
        if count:
            head[n] = count
    a = _class_representative(ring, cls)
    start = stable + (a.degree - stable) % d
    # for large degree: q^(n+1-g) (1 - q^-d) / (q - 1) ideals when n = deg a mod d
    coeff = Fraction(q) ** (start + 1 - g) * (1 - Fraction(1, q**d)) / (q - 1)
    tail = geometric_tail(coeff, start, q**d, d)
    return ZetaFunction(tail, head, label=f"Z_({cls.label})")


def class_zetas(ring):
    return [class_zeta(ring, c) for c in ring.picard_group().classes()]


def zero_coset_zeta(ring, a):
    """Z_{0,a} = (q - 1) S^{deg a} Z_(a^{-1})."""
    z = class_zeta(ring, ring.ideal_class(a.inverse()))
    return z.scale(ring.q - 1).shift(a.degree)


def coset_zeta(ring, x, a, max_dim=20):
    """Z_{x,a}(S) = sum over nonzero y in x + a of S^deg y.

    For x outside a this is Q_r Z_{0,a} + q^w S^r with (r, w) the coset minimum.
    """
    if not isinstance(x, FieldElement):
        x = FieldElement(ring, x)
    z0 = zero_coset_zeta(ring, a)
    if ring.contains(a, x):
        return z0
    r, w = ring.coset_min_degree(x, a, max_dim=max_dim)
    return z0.Q(r) + ZetaFunction(RationalFunctionS(0), {r: ring.q**w}, label=f"Z_{{{x},{a}}}")


def coset_counts(ring, x, a, N, max_dim=20):
    """Brute force: number of nonzero y in x + a of each degree <= N."""
    elements = ring.coset_elements_up_to_degree(x, a, N, max_dim=max_dim)
    return Counter(y.degree for y in elements if y.degree != NEG_INF)


def check_coset_zeta(ring, x, a, N, max_dim=20):
    """Compare coset_zeta against the brute-force coset sum up to degree N."""
    z = coset_zeta(ring, x, a, max_dim=max_dim)
    counts = coset_counts(ring, x, a, N, max_dim=max_dim)
    lo = min([z.lowest_exponent()] + list(counts))
    expected = z.coefficients(lo, N)
    for n, c in zip(range(lo, N + 1), expected):
        if c != counts.get(n, 0):
            raise ConsistencyError(
                f"Z_{{{x},{a}}}: coefficient of S^{n} is {c}, the coset has {counts.get(n, 0)} elements"
            )
    return z
