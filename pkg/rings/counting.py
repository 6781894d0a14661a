"""Counting primitive vectors and cyclic direct summands of (A/n)^r, A = F_q[T]."""
import itertools
from fractions import Fraction

import galois

from utils.errors import ConsistencyError, ParameterError

from .genus_zero import PolynomialRing


def _residues(ring, modulus):
    """All polynomials of degree < deg modulus, in integer order."""
    GF = ring.field.GF
    return [galois.Poly.Int(k, field=GF) for k in range(ring.q**modulus.degree)]


def _is_zero(p):
    return p.degree == 0 and p.coeffs[0] == 0


def _check(ring, n):
    if not isinstance(ring, PolynomialRing):
        raise ParameterError("primitive vector counts are implemented for F_q[T] only")
    if not n.is_integral() or n.is_unit():
        raise ParameterError(f"{n} must be a proper integral ideal")


def primitive_vectors(ring, n, r):
    """Vectors of (A/n)^r not killed into (A/p)^r-zero by any prime p | n."""
    _check(ring, n)
    modulus = ring.generator(n).value.num
    primes = [p.data for p in n.support()]
    out = []
    for vec in itertools.product(_residues(ring, modulus), repeat=r):
        if all(any(not _is_zero(c % p) for c in vec) for p in primes):
            out.append(vec)
    return out


def primitive_count_by_mobius(ring, n, r):
    """sum_{c | n} mu(c) q^{r (deg n - deg c)}."""
    _check(ring, n)
    return sum(ring.mobius(c) * ring.q ** (r * (n.degree - c.degree)) for c in ring.divisors(n))


def c_r1(ring, n, r):
    """(q-1)^{-1} prod_i (q_i^r - 1) q_i^{(s_i - 1) r} over n = prod p_i^{s_i}, q_i = q^{deg p_i}."""
    _check(ring, n)
    total = Fraction(1, ring.q - 1)
    for place, s in n.factors:
        qi = ring.q**place.degree
        total *= (qi**r - 1) * qi ** ((s - 1) * r)
    if total.denominator != 1:
        raise ConsistencyError(f"c_{{{r},1}}({n}) = {total} is not an integer")
    return int(total)


def primitive_summand_count(ring, n, r):
    """Brute-force #primitive vectors of (A/n)^r modulo F^*, checked against c_{r,1}(n)."""
    count = len(primitive_vectors(ring, n, r))
    if count % (ring.q - 1):
        raise ConsistencyError(f"{count} primitive vectors do not split into F^*-orbits")
    by_mobius = primitive_count_by_mobius(ring, n, r)
    if count != by_mobius:
        raise ConsistencyError(f"brute force finds {count} primitive vectors, inclusion-exclusion {by_mobius}")
    result = count // (ring.q - 1)
    expected = c_r1(ring, n, r)
    if result != expected:
        raise ConsistencyError(f"primitive summand count {result} != c_{{{r},1}}({n}) = {expected}")
    return result


def cyclic_summand_count(ring, n, r):
    """Number of direct summands of (A/n)^r isomorphic to A/n, by spanning every primitive vector."""
    modulus = ring.generator(n).value.num
    residues = _residues(ring, modulus)
    spans = set()
    for vec in primitive_vectors(ring, n, r):
        spans.add(frozenset(tuple(int((a * c) % modulus) for c in vec) for a in residues))
    return len(spans)


def unit_count(ring, n):
    """#(A/n)^* = prod_i (q_i - 1) q_i^{s_i - 1}; each cyclic summand has this many generators."""
    _check(ring, n)
    total = 1
    for place, s in n.factors:
        qi = ring.q**place.degree
        total *= (qi - 1) * qi ** (s - 1)
    return total
