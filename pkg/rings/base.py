"""Places, fractional ideals, Picard classes and the algorithms shared by every
coefficient ring family.

A ring family subclass supplies the geometry: places of a given degree, the
Picard class of a place, element degrees, local valuations and a basis of the
Riemann-Roch space a_N = {x in a : deg x <= N}. Everything else (ideal
enumeration, representative systems, coset minima, Moebius function) is
written once here in terms of those primitives.
"""
import itertools
import math
from dataclasses import dataclass, field

from arith.fq_poly import NEG_INF
from utils.errors import ConsistencyError, ParameterError

MAX_REPRESENTATIVE_DEGREE = 12


@dataclass(frozen=True, order=True)
class Place:
    """A closed point of the curve other than the ring's infinity.

    ``key`` is the canonical descriptor; it orders places lexicographically.
    """

    key: tuple
    degree: int
    label: str = field(compare=False)
    data: object = field(compare=False, default=None, repr=False)

    def __str__(self):
        return self.label


class CosetIsIdeal(ParameterError):
    """x lies in a, so x + a is the ideal itself (use the Z_{0,a} path)."""


class IdealRep:
    """A fractional ideal as a finite map Place -> nonzero exponent."""

    __slots__ = ("ring", "factors")

    def __init__(self, ring, factors=()):
        if isinstance(factors, dict):
            factors = factors.items()
        merged = {}
        for place, e in factors:
            merged[place] = merged.get(place, 0) + int(e)
        self.ring = ring
        self.factors = tuple(sorted((p, e) for p, e in merged.items() if e != 0))

    @property
    def degree(self):
        return sum(p.degree * e for p, e in self.factors)

    def exponent(self, place):
        for p, e in self.factors:
            if p == place:
                return e
        return 0

    def support(self):
        return [p for p, _ in self.factors]

    def is_integral(self):
        return all(e >= 0 for _, e in self.factors)

    def is_unit(self):
        return not self.factors

    def __mul__(self, other):
        if not isinstance(other, IdealRep):
            # an element multiplies through its principal ideal
            other = self.ring.principal_ideal(other)
        return IdealRep(self.ring, list(self.factors) + list(other.factors))

    __rmul__ = __mul__

    def inverse(self):
        return IdealRep(self.ring, [(p, -e) for p, e in self.factors])

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        return IdealRep(self.ring, [(p, e * n) for p, e in self.factors])

    def divides(self, other):
        """self | other, i.e. other is contained in self."""
        return all(other.exponent(p) >= e for p, e in self.factors) and all(
            e >= self.exponent(p) for p, e in other.factors
        )

    def is_coprime_to(self, other):
        mine = {p for p, _ in self.factors}
        return not any(p in mine for p, _ in other.factors)

    def sort_key(self):
        return (self.degree, tuple((p.key, e) for p, e in self.factors))

    def __eq__(self, other):
        return isinstance(other, IdealRep) and self.ring == other.ring and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        if not self.factors:
            return "A"
        return "*".join(p.label if e == 1 else f"{p.label}^{e}" for p, e in self.factors)

    def __repr__(self):
        return f"IdealRep({self})"


class FieldElement:
    """An element of the function field K of a ring; arithmetic delegates to
    the family's value type (FqFraction or CurveFunction)."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _wrap(self, value):
        return FieldElement(self.ring, value)

    def _unwrap(self, other):
        if isinstance(other, FieldElement):
            return other.value
        return self.ring.constant_value(other)

    def __add__(self, other):
        return self._wrap(self.value + self._unwrap(other))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.value)

    def __sub__(self, other):
        return self._wrap(self.value - self._unwrap(other))

    def __rsub__(self, other):
        return self._wrap(self._unwrap(other) - self.value)

    def __mul__(self, other):
        if isinstance(other, IdealRep):
            return other * self
        return self._wrap(self.value * self._unwrap(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.value / self._unwrap(other))

    def __rtruediv__(self, other):
        return self._wrap(self._unwrap(other) / self.value)

    def __pow__(self, n):
        return self._wrap(self.value**n)

    def is_zero(self):
        return self.value.is_zero()

    @property
    def degree(self):
        """deg x = -d_inf * v_inf(x); -inf for zero."""
        return self.ring.element_degree(self.value)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            try:
                other = self._wrap(self.ring.constant_value(other))
            except (TypeError, ValueError, ParameterError):
                return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return self.ring.format_element(self.value)

    def __repr__(self):
        return f"FieldElement({self})"


class PicGroup:
    """A finite abelian group given by its elements (canonical order, identity
    first) and an addition law on element values."""

    def __init__(self, ring, values, add, neg, identity, label):
        self.ring = ring
        self.values = list(values)
        self._add = add
        self._neg = neg
        self.identity_value = identity
        self._label = label
        if self.values[0] != identity:
            raise ConsistencyError("Picard group listing must start with the identity")

    @property
    def order(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __call__(self, value):
        return PicClass(self, value)

    def identity(self):
        return PicClass(self, self.identity_value)

    def classes(self):
        return [PicClass(self, v) for v in self.values]

    def index(self, cls):
        return self.values.index(cls.value)

    def element_order(self, value):
        n, acc = 1, value
        while acc != self.identity_value:
            acc = self._add(acc, value)
            n += 1
        return n

    @property
    def exponent(self):
        return math.lcm(*(self.element_order(v) for v in self.values))

    def is_closed(self):
        """Closure and inverses inside the listed elements (brute force)."""
        elems = set(self.values)
        return all(self._add(a, b) in elems for a in self.values for b in self.values) and all(
            self._neg(a) in elems for a in self.values
        )


@dataclass(frozen=True)
class PicClass:
    group: PicGroup = field(compare=False, hash=False, repr=False)
    value: object

    def __mul__(self, other):
        return PicClass(self.group, self.group._add(self.value, other.value))

    def inverse(self):
        return PicClass(self.group, self.group._neg(self.value))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        out = self.group.identity()
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self):
        return self.value == self.group.identity_value

    @property
    def label(self):
        return self.group._label(self.value)

    def __str__(self):
        return self.label


class IdealSpace:
    """The F_q-space a_N = {x in a : deg x <= N} with a fixed ordered basis.

    ``build`` maps a coordinate vector (F_q scalars) to a value of the ring's
    element type; coordinates enumerate the space in a canonical order.
    """

    def __init__(self, ring, ideal, bound, dimension, build):
        self.ring = ring
        self.ideal = ideal
        self.bound = bound
        self.dimension = dimension
        self._build = build

    def __len__(self):
        return self.ring.q**self.dimension

    def element(self, coords):
        return FieldElement(self.ring, self._build([self.ring.field(c) for c in coords]))

    def basis(self):
        out = []
        for i in range(self.dimension):
            coords = [0] * self.dimension
            coords[i] = 1
            out.append(self.element(coords))
        return out

    def elements(self):
        for coords in itertools.product(range(self.ring.q), repeat=self.dimension):
            yield self.element(coords)

    def representatives(self):
        """One element per F_q^*-orbit of nonzero elements: first nonzero coordinate is 1."""
        q, n = self.ring.q, self.dimension
        for lead in range(n):
            for tail in itertools.product(range(q), repeat=n - lead - 1):
                yield self.element([0] * lead + [1] + list(tail))


class CoefficientRing:
    """Ring of functions on a curve over F_q regular away from one closed point."""

    family = None
    genus = None

    def __init__(self, q):
        self.q = q
        self._memo = {}

    # family primitives

    @property
    def d_inf(self):
        raise NotImplementedError

    def places_of_degree(self, d):
        raise NotImplementedError

    def place_class_value(self, place):
        raise NotImplementedError

    def _build_pic_group(self):
        raise NotImplementedError

    def element_degree(self, value):
        raise NotImplementedError

    def valuation(self, value, place):
        raise NotImplementedError

    def principal_factors(self, value):
        """Finite-place factorization {Place: v_P} of a nonzero element."""
        raise NotImplementedError

    def ideal_space(self, a, N):
        raise NotImplementedError

    def curve_point_count(self, n):
        raise NotImplementedError

    def constant_value(self, c):
        raise NotImplementedError

    def parse_place(self, token):
        raise NotImplementedError

    def parse_element_value(self, text):
        raise NotImplementedError

    def format_element(self, value):
        raise NotImplementedError

    max_place_degree = 12

    # derived data

    @property
    def q_inf(self):
        return self.q**self.d_inf

    @property
    def class_number(self):
        """h(A) = h(X) * d_inf."""
        return self.picard_group().order

    def cached(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    # places and ideals

    def places_up_to_degree(self, D):
        if D < 1 or D > self.max_place_degree:
            raise ParameterError(
                f"place degree bound {D} outside 1..{self.max_place_degree} for {self}"
            )
        out = []
        for d in range(1, D + 1):
            out.extend(self.cached(("places", d), lambda d=d: self.places_of_degree(d)))
        return out

    def unit_ideal(self):
        return IdealRep(self, ())

    def ideal(self, factors):
        return IdealRep(self, factors)

    def element(self, value):
        return FieldElement(self, value)

    def constant(self, c):
        return FieldElement(self, self.constant_value(c))

    def principal_ideal(self, f):
        if isinstance(f, FieldElement):
            f = f.value
        if f.is_zero():
            raise ParameterError("the zero element generates no fractional ideal")
        return IdealRep(self, self.principal_factors(f))

    def contains(self, a, x):
        """x in a, tested place by place through valuations."""
        if isinstance(x, FieldElement):
            x = x.value
        if x.is_zero():
            return True
        fx = dict(self.principal_factors(x))
        places = set(fx) | set(a.support())
        return all(fx.get(p, 0) >= a.exponent(p) for p in places)

    # Picard group

    def picard_group(self):
        return self.cached("pic", self._build_pic_group)

    def ideal_class(self, ideal):
        group = self.picard_group()
        out = group.identity()
        for place, e in ideal.factors:
            out = out * (group(self.place_class_value(place)) ** e)
        return out

    def is_principal(self, ideal):
        return self.ideal_class(ideal).is_identity()

    # enumeration

    def effective_ideals_of_degree(self, n):
        """All integral ideals of degree n, sorted by descriptor."""
        if n < 0:
            return []
        if n == 0:
            return [self.unit_ideal()]
        return self.cached(("effective", n), lambda: self._enumerate_effective(n))

    def _enumerate_effective(self, n):
        places = self.places_up_to_degree(n)
        found = []

        def rec(i, remaining, acc):
            if remaining == 0:
                found.append(IdealRep(self, acc))
                return
            for j in range(i, len(places)):
                P = places[j]
                e = 1
                while e * P.degree <= remaining:
                    rec(j + 1, remaining - e * P.degree, acc + [(P, e)])
                    e += 1

        rec(0, n, [])
        found.sort(key=IdealRep.sort_key)
        return found

    def ideals_of_degree(self, cls, n, bound=10):
        if n > bound:
            raise ParameterError(f"ideal degree {n} exceeds the enumeration bound {bound}")
        return [I for I in self.effective_ideals_of_degree(n) if self.ideal_class(I) == cls]

    def count_ideals_by_class(self, n):
        """{class value: number of integral ideals of degree n in the class}."""
        counts = {v: 0 for v in self.picard_group().values}
        for I in self.effective_ideals_of_degree(n):
            counts[self.ideal_class(I).value] += 1
        return counts

    def choose_representatives_T(self, mode="minimal_degree", n=None):
        """One integral ideal per class, by nondecreasing degree then descriptor.

        mode: ``minimal_degree`` (unit ideal first), ``coprime_to`` (needs n),
        or ``nontrivial`` (proper ideals only, as needed by the cuspidal matrix).
        """
        if mode == "coprime_to":
            if n is None or not n.is_integral() or n.is_unit():
                raise ParameterError("coprime_to mode needs a proper integral ideal n")
        elif mode not in ("minimal_degree", "nontrivial"):
            raise ParameterError(f"unknown representative mode {mode!r}")
        group = self.picard_group()
        chosen = {}
        start = 1 if mode == "nontrivial" else 0
        for deg in range(start, MAX_REPRESENTATIVE_DEGREE + 1):
            for I in self.effective_ideals_of_degree(deg):
                if mode == "coprime_to" and not I.is_coprime_to(n):
                    continue
                c = self.ideal_class(I).value
                if c not in chosen:
                    chosen[c] = I
            if len(chosen) == group.order:
                break
        else:
            raise ParameterError(f"no {mode} representative system below degree {MAX_REPRESENTATIVE_DEGREE}")
        return sorted(chosen.values(), key=IdealRep.sort_key)

    def mobius(self, ideal):
        if not ideal.is_integral():
            raise ParameterError(f"Moebius function of the fractional ideal {ideal}")
        if any(e >= 2 for _, e in ideal.factors):
            return 0
        return -1 if len(ideal.factors) % 2 else 1

    def divisors(self, ideal):
        """Integral ideals dividing the integral ideal ``ideal``."""
        if not ideal.is_integral():
            raise ParameterError(f"divisors of the fractional ideal {ideal}")
        ranges = [range(e + 1) for _, e in ideal.factors]
        places = [p for p, _ in ideal.factors]
        out = [IdealRep(self, zip(places, exps)) for exps in itertools.product(*ranges)]
        return sorted(out, key=IdealRep.sort_key)

    # Riemann-Roch

    def riemann_roch_count(self, a, m):
        """dim_F L(a * inf^m) = dim {f in a^{-1} : deg f <= m * d_inf}."""
        d = a.degree + m * self.d_inf
        if self.genus == 0:
            return max(0, d + 1)
        if d >= 1:
            return d
        if d == 0:
            return 1 if self.is_principal(a) else 0
        return 0

    def space_dimension(self, a, N):
        """dim a_N for a fractional ideal a."""
        if N == NEG_INF:
            return 0
        return self.riemann_roch_count(a.inverse(), math.floor(N / self.d_inf))

    def ideal_elements_up_to_degree(self, a, N, max_dim=20):
        space = self.ideal_space(a, N)
        if space.dimension > max_dim:
            raise ParameterError(
                f"{a}_{N} has dimension {space.dimension} > {max_dim}; lower the degree bound"
            )
        return list(space.elements())

    def _checked_space(self, space):
        expected = self.space_dimension(space.ideal, space.bound)
        if space.dimension != expected:
            raise ConsistencyError(
                f"basis of {space.ideal}_{space.bound} has {space.dimension} elements, "
                f"Riemann-Roch gives {expected}"
            )
        return space

    # cosets

    def coset_min_degree(self, x, a, max_dim=20):
        """(r, w): minimal degree in x + a and dim a_r."""
        if not isinstance(x, FieldElement):
            x = FieldElement(self, x)
        if self.contains(a, x):
            raise CosetIsIdeal(f"{x} lies in {a}")
        dx = x.degree
        space = self.ideal_space(a, dx)
        if space.dimension > max_dim:
            raise ParameterError(f"coset search space {a}_{dx} too large ({space.dimension})")
        r = dx
        for t in space.elements():
            d = (x + t).degree
            if d < r:
                r = d
        return r, self.space_dimension(a, r)

    def coset_elements_up_to_degree(self, x, a, N, max_dim=20):
        """Elements y of x + a with deg y <= N (brute force oracle)."""
        if not isinstance(x, FieldElement):
            x = FieldElement(self, x)
        bound = N if x.degree == NEG_INF else max(N, x.degree)
        space = self.ideal_space(a, bound)
        if space.dimension > max_dim:
            raise ParameterError(f"coset window {a}_{bound} too large ({space.dimension})")
        return [y for y in (x + t for t in space.elements()) if not y.is_zero() and y.degree <= N]

    # misc

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.spec_key() == other.spec_key()

    def __hash__(self):
        return hash(self.spec_key())

    def spec_key(self):
        raise NotImplementedError

    def __str__(self):
        return self.spec_text()

    def spec_text(self):
        raise NotImplementedError
