"""Vanishing orders along the boundary divisors (a), a in Pic(A), from zeta special values.

Every order here is an exact rational computed from the partial zeta
functions at s = 1 - r. Orders of Delta-type forms are theorems about integers:
a fraction or a non-positive value raises ConsistencyError, never a rounded value.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from expansions.canonical import canonical_delta_exponents
from expansions.goss import gamma
from rings.base import FieldElement, IdealRep, PicClass
from utils.errors import ConsistencyError, ParameterError
from utils.tools import format_fraction
from zeta.partial import class_zeta, coset_zeta, zero_coset_zeta

UNITS = ("u", "t_n", "t")


@dataclass
class OrderReport:
    ring: str
    r: int
    target: str
    boundary_class: str
    order: Fraction
    unit: str = "u"
    zeta_values: list = field(default_factory=list)
    # index of u in t_n, (q - 1) q^((r-1) deg n); 0 when the level is not known
    ramification: int = 0

    @property
    def integral(self):
        return self.order.denominator == 1

    @property
    def order_t_n(self):
        """The order in t_n-units: ord_t_n = (q - 1) q^((r-1) deg n) ord_u."""
        if self.unit == "t_n":
            return self.order
        if self.unit != "u" or not self.ramification:
            raise ParameterError(f"{self.target} is given in {self.unit}-units with no t_n conversion")
        return self.order * self.ramification

    def __int__(self):
        if not self.integral:
            raise ConsistencyError(f"ord_({self.boundary_class}) {self.target} = {self.order} is not an integer")
        return self.order.numerator

    def describe(self):
        values = ", ".join(f"{label} = {format_fraction(v)}" for label, v in self.zeta_values)
        return (
            f"ord_({self.boundary_class}) {self.target} = {format_fraction(self.order)} "
            f"[{self.unit}]  ({values})"
        )


@dataclass
class CuspidalDivisor:
    """sum_(a) coefficients[(a)] * (a), keyed by PicClass."""

    coefficients: dict = field(default_factory=dict)

    def __getitem__(self, cls):
        return self.coefficients.get(cls, 0)

    def __add__(self, other):
        out = dict(self.coefficients)
        for cls, c in other.coefficients.items():
            out[cls] = out.get(cls, 0) + c
        return CuspidalDivisor({k: v for k, v in out.items() if v})

    def support(self):
        return [cls for cls, c in self.coefficients.items() if c]

    def total(self):
        return sum(self.coefficients.values())

    def items(self):
        """(class, coefficient) in the canonical order of Pic(A)."""
        if not self.coefficients:
            return []
        group = next(iter(self.coefficients)).group
        return sorted(self.coefficients.items(), key=lambda kv: group.index(kv[0]))

    def __str__(self):
        return " + ".join(f"{c}*({cls.label})" for cls, c in self.items()) or "0"


def _as_class(ring, a):
    if isinstance(a, PicClass):
        return a
    if isinstance(a, IdealRep):
        return ring.ideal_class(a)
    raise ParameterError(f"expected an ideal class or an ideal, got {a!r}")


def _check_rank(r):
    if r < 2:
        raise ParameterError(f"rank r must be >= 2, got {r}")


def _check_proper(n):
    if not n.is_integral() or n.is_unit():
        raise ParameterError(f"{n} is not a proper integral ideal")


def _special(ring, cls, r):
    z = class_zeta(ring, cls)
    return f"zeta_({cls.label})(1-{r})", z.special_value(ring.q, r)


def _require_positive_integer(report):
    if not report.integral:
        raise ConsistencyError(f"non-integral order: {report.describe()}")
    if report.order <= 0:
        raise ConsistencyError(f"non-positive order: {report.describe()}")
    return report


def ramification_index(ring, n, r):
    """(q - 1) q^((r-1) deg n), the index of u in t_n."""
    _check_proper(n)
    _check_rank(r)
    return (ring.q - 1) * ring.q ** ((r - 1) * n.degree)


def ord_discriminant_twisted(ring, n, b, a_class, r):
    """zeta_(a^-1 b^-1 n)(1-r) - q^(r deg n) zeta_(a^-1 b^-1)(1-r)."""
    _check_rank(r)
    _check_proper(n)
    a_class = _as_class(ring, a_class)
    base = a_class.inverse() * ring.ideal_class(b).inverse()
    label_n, z_n = _special(ring, base * ring.ideal_class(n), r)
    label_0, z_0 = _special(ring, base, r)
    order = z_n - Fraction(ring.q) ** (r * n.degree) * z_0
    target = f"Delta_{n}" if b.is_unit() else f"Delta_{n}^{b}"
    report = OrderReport(
        ring=str(ring),
        r=r,
        target=target,
        boundary_class=a_class.label,
        order=order,
        unit="u",
        zeta_values=[(label_n, z_n), (label_0, z_0)],
        ramification=ramification_index(ring, n, r),
    )
    return _require_positive_integer(report)


def ord_discriminant(ring, n, a_class, r):
    return ord_discriminant_twisted(ring, n, ring.unit_ideal(), a_class, r)


def divisor_of_discriminant(ring, n, b, r):
    coeffs = {}
    for cls in ring.picard_group().classes():
        coeffs[cls] = int(ord_discriminant_twisted(ring, n, b, cls, r))
    return CuspidalDivisor(coeffs)


def ord_division_form(ring, a, n, u1, r):
    """k = q^((r-1)(deg n - deg a)) (zeta_{u1,a} - zeta_{0,a})(1-r), in t_n-units.

    ord E_{1,u} = k and ord d_u = -k; k = 0 exactly when u1 lies in a.
    """
    _check_rank(r)
    _check_proper(n)
    if not isinstance(u1, FieldElement):
        u1 = FieldElement(ring, u1)
    if not ring.contains(n.inverse() * a, u1):
        raise ParameterError(f"{u1} does not lie in n^-1 a = {n.inverse() * a}")
    q = ring.q
    z_u = coset_zeta(ring, u1, a).special_value(q, r)
    z_0 = zero_coset_zeta(ring, a).special_value(q, r)
    k = Fraction(q) ** ((r - 1) * (n.degree - a.degree)) * (z_u - z_0)
    report = OrderReport(
        ring=str(ring),
        r=r,
        target=f"E_1,u (u1 = {u1}, a = {a}, n = {n})",
        boundary_class=ring.ideal_class(a).label,
        order=k,
        unit="t_n",
        zeta_values=[(f"zeta_{{{u1},{a}}}(1-{r})", z_u), (f"zeta_{{0,{a}}}(1-{r})", z_0)],
    )
    if not report.integral or k < 0:
        raise ConsistencyError(f"division form order is not a nonnegative integer: {report.describe()}")
    if (k == 0) != ring.contains(a, u1):
        raise ConsistencyError(f"order {k} contradicts u1 {'in' if k == 0 else 'outside'} a: {report.describe()}")
    return report


def ord_higher_eisenstein(ring, a, n, u1, k_weight, r):
    """ord E_{k,u} = gamma(k) ord E_{1,u}, gamma(k) the vanishing order of the k-th Goss polynomial."""
    if k_weight < 1:
        raise ParameterError(f"Eisenstein weight must be >= 1, got {k_weight}")
    base = ord_division_form(ring, a, n, u1, r)
    g = gamma(ring.q, k_weight)
    base.order = base.order * g
    base.target = f"E_{k_weight},u (u1 = {u1}, a = {a}, n = {n}; gamma = {g})"
    return base


@dataclass
class AggregationReport:
    ring: str
    r: int
    n: str
    a: str
    coset_orders: list
    sum_u1: Fraction
    sum_all_u: Fraction
    ramification: int
    ord_u: Fraction
    reports: list = field(default_factory=list)

    @property
    def holds(self):
        return self.sum_all_u == self.ramification * self.ord_u


def coset_representatives(ring, a, n):
    """One element of n^-1 a for every coset modulo a, zero first."""
    nia = n.inverse() * a
    target = ring.q**n.degree
    bound = 4 * (ring.genus + 1) * ring.d_inf + n.degree + abs(a.degree)
    for N in range(0, bound + 1):
        if ring.space_dimension(nia, N) - ring.space_dimension(a, N) == n.degree:
            break
    else:
        raise ConsistencyError(f"no degree window of {nia} surjects onto {nia}/{a}")
    reps = []
    for y in ring.ideal_space(nia, N).elements():
        if not any(ring.contains(a, y - z) for z in reps):
            reps.append(y)
            if len(reps) == target:
                break
    if len(reps) != target:
        raise ConsistencyError(f"found {len(reps)} cosets of {a} in {nia}, expected {target}")
    return reps


def aggregation_check(ring, n, r, a=None):
    """sum over the nonzero u of n^-1 Y / Y of ord_{t_n} E_{1,u} against ramification * ord_u Delta_n.

    The u with a fixed last coordinate u1 number q^((r-1) deg n), so the full
    sum is that power times the sum over u1 in n^-1 a / a.
    """
    a = ring.unit_ideal() if a is None else a
    cosets = coset_representatives(ring, a, n)[1:]
    reports = [ord_division_form(ring, a, n, y, r) for y in cosets]
    coset_orders = [(str(y), rep.order) for y, rep in zip(cosets, reports)]
    sum_u1 = sum((k for _, k in coset_orders), Fraction(0))
    ord_u = ord_discriminant(ring, n, ring.ideal_class(a), r).order
    return AggregationReport(
        ring=str(ring),
        r=r,
        n=str(n),
        a=str(a),
        coset_orders=coset_orders,
        sum_u1=sum_u1,
        sum_all_u=sum_u1 * ring.q ** ((r - 1) * n.degree),
        ramification=ramification_index(ring, n, r),
        ord_u=ord_u,
        reports=reports,
    )


@dataclass
class CanonicalDeltaReport:
    report: OrderReport
    certificate: object
    weight: int
    type_h: int


def _realized_degrees(ring, bound):
    unit = ring.unit_ideal()
    return [
        d for d in range(1, bound + 1)
        if ring.space_dimension(unit, d) > ring.space_dimension(unit, d - 1)
    ]


def ord_canonical_delta(ring, a_class, r):
    """k = (1 - q_inf^r) zeta_(a^-1)(1-r) in t-units, with the exponent pair building Delta."""
    _check_rank(r)
    a_class = _as_class(ring, a_class)
    q, d_inf = ring.q, ring.d_inf
    bound = 4 * (ring.genus + 1) * d_inf + 2 * d_inf
    realized = set(_realized_degrees(ring, bound))
    choices = [d for d in sorted(realized) if d + d_inf in realized]
    if not choices:
        raise ParameterError(f"no element degrees d, d + d_inf below {bound} for {ring}")
    d = choices[0]
    cert = canonical_delta_exponents(q, d_inf, r, d, d + d_inf)
    label, z = _special(ring, a_class.inverse(), r)
    k = (1 - Fraction(q) ** (r * d_inf)) * z
    report = OrderReport(
        ring=str(ring),
        r=r,
        target="canonical Delta",
        boundary_class=a_class.label,
        order=k,
        unit="t",
        zeta_values=[(label, z)],
    )
    _require_positive_integer(report)
    return CanonicalDeltaReport(report, cert, q ** (r * d_inf) - 1, d_inf % (q - 1))
