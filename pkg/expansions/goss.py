"""Goss polynomials G_k of a lattice and their vanishing orders gamma(k) at X = 0."""
import functools

from .drinfeld import carlitz_exp_coeffs


def _is_zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


class GossPolyTable:
    """G_0 = 0, G_1 = X and G_k = X (G_{k-1} + sum_{i >= 1, q^i < k} alpha_i G_{k - q^i}).

    Every G_k is stored as {exponent: coefficient} with zero coefficients dropped.
    """

    def __init__(self, q, exp, K):
        self.q = q
        self.exp = exp
        self.K = K
        self.polys = [{}, {1: exp[0]}]
        for k in range(2, K + 1):
            acc = dict(self.polys[k - 1])
            i = 1
            while q**i < k:
                if i >= len(exp):
                    raise IndexError(f"G_{k} needs alpha_{i}; only {len(exp)} exp coefficients given")
                for e, c in self.polys[k - q**i].items():
                    term = exp[i] * c
                    acc[e] = acc[e] + term if e in acc else term
                i += 1
            self.polys.append({e + 1: c for e, c in acc.items() if not _is_zero(c)})

    def poly(self, k):
        return self.polys[k]

    def gamma(self, k):
        """ord_{X=0} G_k."""
        return min(self.polys[k])

    def degree(self, k):
        return max(self.polys[k])

    def evaluate(self, k, x):
        """G_k(x) by Horner's rule; x may be a scalar or a truncated series."""
        poly = self.polys[k]
        top = max(poly)
        acc = poly[top]
        for e in range(top - 1, 0, -1):
            acc = acc * x
            if e in poly:
                acc = acc + poly[e]
        return acc * x

    def format(self, k):
        return " + ".join(
            f"({c})*X^{e}" if e != 1 else f"({c})*X" for e, c in sorted(self.polys[k].items(), reverse=True)
        )


@functools.lru_cache(maxsize=None)
def _carlitz_table(q, K):
    n = 1
    while q ** (n + 1) < K:
        n += 1
    return GossPolyTable(q, carlitz_exp_coeffs(q, n), K)


def goss_polys(q, exp=None, K=None):
    """Goss polynomials G_1 .. G_K; Carlitz exp coefficients when ``exp`` is None."""
    K = q**2 if K is None else K
    if exp is None:
        return _carlitz_table(q, K)
    return GossPolyTable(q, exp, K)


def gamma(q, k, exp=None):
    return goss_polys(q, exp, k).gamma(k)
