"""Additive polynomials over F_q(T) and the coefficient recursions of a Drinfeld module.

Three coefficient families determine each other triangularly:

* the module coefficients l_0 = a, l_1, ..., l_{r deg a} of phi_a,
* the exponential coefficients alpha_k of e(z) = sum alpha_k z^(q^k),
* the special Eisenstein values E_{q^k - 1}.

The conversions only use +, *, / by elements of F_q(T) and q-th powers, so the
same code runs on FqFraction values, on GradedElem symbols and on truncated
series whose coefficients lie in F_q(T).
"""
from dataclasses import dataclass, field

from arith.finite_field import finite_field
from arith.fq_poly import FqFraction
from arith.graded import GradedElem, GradedSymbol
from utils.errors import ParameterError


def _is_zero(c):
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


def _as_fraction(fq, a):
    if isinstance(a, FqFraction):
        return a
    return FqFraction(fq, a)


def bracket(fq, k):
    """[k] = T^(q^k) - T."""
    T = FqFraction.T(fq)
    return T ** (fq.q**k) - T


def carlitz_denominators(fq, K):
    """D_0 = 1, D_k = [k] * D_{k-1}^q."""
    out = [FqFraction(fq, 1)]
    for k in range(1, K + 1):
        out.append(bracket(fq, k) * out[-1] ** fq.q)
    return out


class AdditivePolynomial:
    """sum_i c_i tau^i, acting as X -> sum_i c_i X^(q^i)."""

    def __init__(self, q, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.q = q
        self.coeffs = tuple(coeffs)

    @property
    def tau_degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return AdditivePolynomial(self.q, [x + y for x, y in zip(a, b)])

    def scale(self, c):
        return AdditivePolynomial(self.q, [c * x for x in self.coeffs])

    def compose(self, other):
        """(self o other): (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j)."""
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                term = a * b ** (self.q**i)
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        zero = self.coeffs[0] * 0
        return AdditivePolynomial(self.q, [zero if c is None else c for c in out])

    def evaluate(self, x):
        acc = None
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            term = x ** (self.q**i) * c
            acc = term if acc is None else acc + term
        return acc if acc is not None else x * 0

    def x_coefficients(self):
        """{exponent q^i: c_i} of the nonzero terms."""
        return {self.q**i: c for i, c in enumerate(self.coeffs) if not _is_zero(c)}

    def __eq__(self, other):
        return isinstance(other, AdditivePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def __str__(self):
        return " + ".join(f"({c})*tau^{i}" for i, c in enumerate(self.coeffs) if not _is_zero(c))


def carlitz(fq, a):
    """rho_a for the Carlitz module rho_T = T + tau; ``a`` is a galois polynomial."""
    T = FqFraction.T(fq)
    one = FqFraction(fq, 1)
    rho_T = AdditivePolynomial(fq.q, [T, one])
    out = AdditivePolynomial(fq.q, [FqFraction(fq, 0)])
    power = AdditivePolynomial(fq.q, [one])
    for c in a.coeffs[::-1]:
        if c != 0:
            out = out + power.scale(FqFraction(fq, int(c)))
        power = power.compose(rho_T)
    return out


@dataclass(frozen=True)
class DrinfeldModuleCoeffs:
    """phi_a = l_0 + l_1 tau + ... + l_{r deg a} tau^(r deg a), with l_0 = a."""

    q: int
    rank: int
    base: FqFraction
    coeffs: tuple

    def __post_init__(self):
        expected = self.rank * self.base.degree + 1
        if len(self.coeffs) != expected:
            raise ParameterError(
                f"rank {self.rank} module at a = {self.base} needs {expected} coefficients, "
                f"got {len(self.coeffs)}"
            )
        if _is_zero(self.coeffs[-1]):
            raise ParameterError(f"leading coefficient of phi_{self.base} vanishes")

    @property
    def top(self):
        return len(self.coeffs) - 1

    def as_additive(self):
        return AdditivePolynomial(self.q, self.coeffs)

    @classmethod
    def carlitz(cls, q, a=None):
        fq = finite_field(q)
        a = fq.poly([1, 0]) if a is None else a
        rho = carlitz(fq, a)
        return cls(q, 1, FqFraction.from_poly(fq, a), rho.coeffs)

    @classmethod
    def symbolic(cls, q, rank, a=None):
        """Opaque graded coefficients: l_i of weight q^i - 1, Delta_a on top."""
        fq = finite_field(q)
        a = fq.poly([1, 0]) if a is None else a
        base = FqFraction.from_poly(fq, a)
        one = FqFraction(fq, 1)
        top = rank * a.degree
        coeffs = [GradedElem.constant(base)]
        for i in range(1, top + 1):
            name = "Delta" if i == top else f"l{i}"
            coeffs.append(GradedElem.symbol(GradedSymbol(name, q**i - 1), one))
        return cls(q, rank, base, tuple(coeffs))


@dataclass(frozen=True)
class ExpCoeffs:
    """alpha_0 = 1, alpha_1, ... of the lattice exponential."""

    q: int
    alphas: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.alphas)

    def __getitem__(self, k):
        return self.alphas[k]


def exp_from_module(module, K):
    """alpha_k (a^(q^k) - a) = sum_{i >= 1} l_i alpha_{k-i}^(q^i), from e(az) = phi_a(e(z))."""
    q, a, ell = module.q, module.base, module.coeffs
    if (a**q - a).is_zero():
        raise ParameterError(f"base element {a} is constant; its recursion does not determine alpha")
    alphas = [FqFraction(a.field, 1)]
    for k in range(1, K + 1):
        acc = None
        for i in range(1, min(k, module.top) + 1):
            term = ell[i] * alphas[k - i] ** (q**i)
            acc = term if acc is None else acc + term
        alphas.append(acc / (a ** (q**k) - a))
    return ExpCoeffs(q, tuple(alphas))


def module_from_exp(exp, base, rank):
    """Solve the same commutation for l_1 .. l_{rank deg a}."""
    q = exp.q
    base = _as_fraction(finite_field(q), base)
    top = rank * base.degree
    if len(exp) <= top:
        raise ParameterError(f"need alpha_0 .. alpha_{top}, have {len(exp)} coefficients")
    ell = [base]
    for i in range(1, top + 1):
        acc = exp[i] * (base ** (q**i) - base)
        for j in range(1, i):
            acc = acc - ell[j] * exp[i - j] ** (q**j)
        ell.append(acc)
    return DrinfeldModuleCoeffs(q, rank, base, tuple(ell))


def commutation_residuals(module, exp):
    """alpha_k (a^(q^k) - a) - sum l_i alpha_{k-i}^(q^i) for every k the data reaches."""
    q, a, ell = module.q, module.base, module.coeffs
    out = []
    for k in range(1, len(exp)):
        acc = exp[k] * (a ** (q**k) - a)
        for i in range(1, min(k, module.top) + 1):
            acc = acc - ell[i] * exp[k - i] ** (q**i)
        out.append(acc)
    return out


def eisenstein_from_exp(exp):
    """{q^k - 1: E_{q^k - 1}} from e o log = id, log having coefficients -E_{q^k - 1}."""
    q = exp.q
    E = {}
    for k in range(1, len(exp)):
        acc = exp[k]
        for i in range(1, k):
            acc = acc - exp[i] * E[q ** (k - i) - 1] ** (q**i)
        E[q**k - 1] = acc
    return E


def exp_from_eisenstein(q, E, K):
    """alpha_k = sum_{i < k} alpha_i E_{q^(k-i) - 1}^(q^i)."""
    missing = [q**j - 1 for j in range(1, K + 1) if q**j - 1 not in E]
    if missing:
        raise ParameterError(f"Eisenstein values of weight {missing} are needed")
    one = FqFraction(finite_field(q), 1)
    alphas = [one]
    for k in range(1, K + 1):
        acc = None
        for i in range(k):
            term = alphas[i] * E[q ** (k - i) - 1] ** (q**i)
            acc = term if acc is None else acc + term
        alphas.append(acc)
    return ExpCoeffs(q, tuple(alphas))


def carlitz_exp_coeffs(q, K):
    fq = finite_field(q)
    return ExpCoeffs(q, tuple(d.inverse() for d in carlitz_denominators(fq, K)))


_KINDS = ("module", "exp", "eisenstein")


def relations_solver(known, target, values, q, K=4, rank=2, base=None):
    """Convert between module coefficients, exp coefficients and Eisenstein values.

    ``values`` is a DrinfeldModuleCoeffs, an ExpCoeffs or a {weight: E} dict
    according to ``known``; the result has the type of ``target``.
    """
    if known not in _KINDS or target not in _KINDS:
        raise ParameterError(f"relations_solver converts between {_KINDS}, got {known!r} -> {target!r}")
    if known == target:
        return values
    fq = finite_field(q)
    if base is None:
        base = values.base if known == "module" else FqFraction.T(fq)
    if known == "module":
        exp = exp_from_module(values, K)
    elif known == "eisenstein":
        exp = exp_from_eisenstein(q, values, K)
    else:
        exp = values
    if target == "exp":
        return exp
    if target == "eisenstein":
        return eisenstein_from_exp(exp)
    if known == "module":
        rank = values.rank
    return module_from_exp(exp, base, rank)
