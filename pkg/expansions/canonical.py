"""Exponents combining two discriminants into the canonical Delta of weight q_inf^r - 1."""
import math
from dataclasses import dataclass

import sympy

from utils.errors import ConsistencyError, ParameterError


@dataclass(frozen=True)
class ExponentCertificate:
    """x * i + x' * i' = j with i = q^(rd) - 1, i' = q^(rd') - 1 and j = q_inf^r - 1."""

    q: int
    d_inf: int
    r: int
    d: int
    d_prime: int
    x: int
    x_prime: int
    i: int
    i_prime: int
    j: int
    gcd: int
    gcd_identity: bool
    shifted_pair: tuple = None

    def holds(self):
        return self.x * self.i + self.x_prime * self.i_prime == self.j


def canonical_delta_exponents(q, d_inf, r, d, d_prime):
    """Bezout pair for the element degrees d, d' with gcd(d, d') = d_inf.

    The pair comes from the extended Euclidean algorithm. When d' = d + d_inf
    the pair (-q_inf^r, 1) is checked as well and reported in ``shifted_pair``.
    """
    if min(d, d_prime) < 1 or r < 1:
        raise ParameterError(f"degrees and rank must be positive, got d={d}, d'={d_prime}, r={r}")
    if math.gcd(d, d_prime) != d_inf:
        raise ParameterError(f"gcd({d}, {d_prime}) = {math.gcd(d, d_prime)} differs from d_inf = {d_inf}")
    i, i_prime = q ** (r * d) - 1, q ** (r * d_prime) - 1
    j = q ** (r * d_inf) - 1
    x, x_prime, g = sympy.igcdex(i, i_prime)
    x, x_prime, g = int(x), int(x_prime), int(g)
    identity = g == q ** (r * math.gcd(d, d_prime)) - 1
    if not identity:
        raise ConsistencyError(f"gcd({i}, {i_prime}) = {g}, expected q^(r gcd(d, d')) - 1")
    scale = j // g
    x, x_prime = x * scale, x_prime * scale
    shifted = None
    if d_prime == d + d_inf:
        shifted = (-(q ** (r * d_inf)), 1)
        if shifted[0] * i + shifted[1] * i_prime != j:
            raise ConsistencyError(f"(-q_inf^r, 1) fails x i + x' i' = j for d={d}, d'={d_prime}")
    cert = ExponentCertificate(q, d_inf, r, d, d_prime, x, x_prime, i, i_prime, j, g, identity, shifted)
    if not cert.holds():
        raise ConsistencyError(f"{x}*{i} + {x_prime}*{i_prime} != {j}")
    return cert


def gcd_identity_value(q, r, d, d_prime):
    """gcd(q^(rd) - 1, q^(rd') - 1), for comparison with q^(r gcd(d, d')) - 1."""
    return math.gcd(q ** (r * d) - 1, q ** (r * d_prime) - 1)
