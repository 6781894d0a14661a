"""Characters of Pic(A) and the L-functions L_A(chi, S) = sum_c chi(c) Z_(c)(S)."""
import itertools
from dataclasses import dataclass, field

from arith.cyclotomic import CyclotomicNumber
from utils.errors import ConsistencyError

from .partial import class_zeta


@dataclass(frozen=True)
class Character:
    """chi(c) = zeta_m^{exponents[c]} with m the exponent of Pic(A)."""

    group: object = field(compare=False, repr=False)
    m: int
    exponents: tuple  # aligned with group.values

    def __call__(self, cls):
        return CyclotomicNumber.root_of_unity(self.m, self.exponents[self.group.index(cls)])

    def is_trivial(self):
        return not any(self.exponents)

    def is_real(self):
        return all((2 * k) % self.m == 0 for k in self.exponents)

    def order(self):
        n = 1
        while any((n * k) % self.m for k in self.exponents):
            n += 1
        return n

    def __str__(self):
        return "chi(" + ",".join(str(k) for k in self.exponents) + f"; m={self.m})"


def _generators(group):
    gens, span = [], {group.identity_value}
    for v in group.values:
        if v in span:
            continue
        gens.append(v)
        frontier = list(span)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = group._add(a, g)
                    if b not in span:
                        span.add(b)
                        new.append(b)
            frontier = new
    return gens


def characters(group):
    """All characters of a finite abelian group, the trivial one first."""
    m = group.exponent
    gens = _generators(group)
    choices = [
        [k for k in range(m) if (k * group.element_order(g)) % m == 0] for g in gens
    ]
    out = []
    for ks in itertools.product(*choices):
        table = {group.identity_value: 0}
        frontier = [group.identity_value]
        consistent = True
        while frontier and consistent:
            new = []
            for a in frontier:
                for g, k in zip(gens, ks):
                    b = group._add(a, g)
                    val = (table[a] + k) % m
                    if b in table:
                        if table[b] != val:
                            consistent = False
                            break
                    else:
                        table[b] = val
                        new.append(b)
                if not consistent:
                    break
            frontier = new
        if consistent and len(table) == group.order:
            out.append(Character(group, m, tuple(table[v] for v in group.values)))
    if len(out) != group.order:
        raise ConsistencyError(f"found {len(out)} characters for a group of order {group.order}")
    return out


class LFunction:
    """sum_c chi(c) Z_(c)(S) kept as a formal combination over Q(zeta_m)."""

    def __init__(self, ring, chi):
        self.ring = ring
        self.chi = chi
        self.terms = [(chi(c), class_zeta(ring, c)) for c in ring.picard_group().classes()]

    def special_value(self, r):
        total = CyclotomicNumber.rational(self.chi.m, 0)
        for coeff, z in self.terms:
            total = total + coeff * z.special_value(self.ring.q, r)
        return total

    def coefficients(self, n):
        out = []
        for k in range(n):
            total = CyclotomicNumber.rational(self.chi.m, 0)
            for coeff, z in self.terms:
                total = total + coeff * z.coefficients(k, k)[0]
            out.append(total)
        return out

    def to_zeta(self):
        """The L-function as a ZetaFunction when chi is real-valued."""
        if not self.chi.is_real():
            raise ConsistencyError(f"{self.chi} is not real-valued")
        out = None
        for coeff, z in self.terms:
            term = z.scale(coeff.to_fraction())
            out = term if out is None else out + term
        return out


def l_function(ring, chi):
    return LFunction(ring, chi)
