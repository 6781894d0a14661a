"""Property suites run by ``selftest``.

A suite receives a SuiteRun, the ring under test and a seeded numpy
generator. Suites that only make sense for F_q[T] return without checks on
other rings.
"""
from fractions import Fraction

from dassl.utils import Registry

from arith import (
    CyclotomicNumber,
    FiniteFieldCoefficients,
    FqFraction,
    RationalFunctionS,
    TruncatedSeries,
    finite_field,
    poly_str,
    series_mul_inv_compose,
)
from arith.finite_field import monic_polys
from boundary import (
    aggregation_check,
    coset_representatives,
    cuspidal_matrix,
    frobenius_det_crosscheck,
    ord_discriminant,
    ord_discriminant_twisted,
)
from expansions import (
    DrinfeldModuleCoeffs,
    commutation_residuals,
    compare_routes,
    delta_product_series,
    delta_via_eisenstein_series,
    goss_polys,
    relations_solver,
    s_polynomial,
)
from expansions.drinfeld import exp_from_module
from independence import (
    carlitz_period_power,
    check_minimal_degree_claim,
    completion_context,
    independence_certificate,
    lattice_sum_at_infinity,
    m_matrix,
    precision_stability,
)
from rings import (
    c_r1,
    cyclic_summand_count,
    primitive_count_by_mobius,
    primitive_summand_count,
    primitive_vectors,
    unit_count,
)
from utils.errors import BoundaryError
from zeta import check_coset_zeta, class_zeta, class_zetas, coset_zeta, curve_zeta, ring_zeta, zero_coset_zeta

from .schemas import SuiteResult

SUITE_REGISTRY = Registry("SUITE")

HEAD_DEGREE = 7
COSET_CHECK_DEGREE = 6
CERTIFICATE_PRECISION = 4


class SuiteRun:
    """Pass and failure bookkeeping of one suite on one ring."""

    def __init__(self, suite, ring):
        self.suite = suite
        self.ring = ring
        self.passed = 0
        self.failures = []

    def expect(self, name, fn):
        """Run ``fn``; True or an empty list passes, False or a list of violations fails.

        A BoundaryError raised inside ``fn`` is a failure of this check, not of the run.
        """
        try:
            out = fn()
        except BoundaryError as exc:
            self.failures.append(f"{name}: {type(exc).__name__}: {exc}")
            return
        if out is True or (isinstance(out, list) and not out):
            self.passed += 1
        elif out is False:
            self.failures.append(name)
        else:
            self.failures.append(f"{name}: " + "; ".join(str(v) for v in out))

    def result(self):
        return SuiteResult(
            suite=self.suite,
            ring=str(self.ring),
            passed=self.passed,
            failed=len(self.failures),
            failures=self.failures,
        )


def first_proper_ideal(ring):
    d = 1
    while not ring.effective_ideals_of_degree(d):
        d += 1
    return ring.effective_ideals_of_degree(d)[0]


def integral_elements(ring, N):
    """Nonzero elements of A of degree <= N."""
    return [x for x in ring.ideal_space(ring.unit_ideal(), N).elements() if not x.is_zero()]


def sample(items, rng, count):
    if len(items) <= count:
        return list(items)
    picks = sorted(rng.choice(len(items), size=count, replace=False))
    return [items[int(i)] for i in picks]


def _random_series(fq, rng, valuation, length):
    coeffs = [fq(int(v)) for v in rng.integers(0, fq.q, size=length)]
    coeffs[0] = fq(int(rng.integers(1, fq.q)))
    return TruncatedSeries(FiniteFieldCoefficients(fq), "t", coeffs, valuation + length, valuation=valuation)


def _random_fraction(fq, rng, degree):
    num = fq.poly([fq(int(v)) for v in rng.integers(0, fq.q, size=degree + 1)])
    den = fq.poly([1] + [fq(int(v)) for v in rng.integers(0, fq.q, size=degree)])
    return FqFraction(fq, num, den)


@SUITE_REGISTRY.register()
def base_arith(run, ring, rng, samples):
    fq = finite_field(ring.q)
    run.expect(f"field axioms of F_{fq.q}", lambda: fq.check_axioms(rng=rng))

    for _ in range(min(samples, 10)):
        f = _random_series(fq, rng, int(rng.integers(0, 4)), 8)
        g = _random_series(fq, rng, int(rng.integers(0, 4)), 8)
        run.expect("val(fg) = val f + val g", lambda: (f * g).order() == f.order() + g.order())
        run.expect("inv(inv f) = f", lambda: f.inverse().inverse().agrees_with(f))
        run.expect(
            "f * inv f = 1",
            lambda: series_mul_inv_compose(f, f.inverse()).agrees_with(
                TruncatedSeries.one(f.ring, "t", f.relative_precision)
            ),
        )

    p = fq.p
    for _ in range(min(samples, 5)):
        f = _random_series(fq, rng, 0, 6)
        manual = f
        for _ in range(p - 1):
            manual = manual * f
        run.expect(f"frobenius f^{p} = f*...*f", lambda: f.frobenius(p).agrees_with(manual))

    for _ in range(min(samples, 10)):
        num = [int(v) for v in rng.integers(-3, 4, size=3)]
        den = [1] + [int(v) for v in rng.integers(-3, 4, size=2)]
        coeffs = RationalFunctionS.from_coefficients(num, den).series(30)

        def expansion_matches(coeffs=coeffs, num=num, den=den):
            # den * series = num as power series
            for n in range(30):
                acc = sum((Fraction(den[k]) * coeffs[n - k] for k in range(len(den)) if n >= k), Fraction(0))
                if acc != (num[n] if n < len(num) else 0):
                    return [f"S^{n} of {num}/{den}"]
            return []

        run.expect("rational function expansion", expansion_matches)

    z = ring_zeta(ring)
    for i in range(4):
        cut = z.Q(i)
        run.expect(f"Q_{i} + (Z - Q_{i}) = Z", lambda: cut + (z - cut) == z)
        run.expect(f"Q_{i} keeps exponents > {i} only", lambda: not any(cut.coefficients(0, i)))
        run.expect(f"Z - Q_{i} is a polynomial of degree <= {i}", lambda: not any((z - cut).coefficients(i + 1, i + 8)))

    for _ in range(min(samples, 10)):
        x = _random_fraction(fq, rng, 2)
        y = _random_fraction(fq, rng, 2)
        if x.is_zero() or y.is_zero():
            continue
        run.expect("(xy)/y = x", lambda: (x * y) / y == x)
        run.expect("deg xy = deg x + deg y", lambda: (x * y).degree == x.degree + y.degree)

    for m in (3, 4, 6):
        zeta_m = CyclotomicNumber.root_of_unity(m, 1)
        run.expect(f"zeta_{m}^{m} = 1", lambda: zeta_m**m == 1)
        total = sum((CyclotomicNumber.root_of_unity(m, k) for k in range(m)), CyclotomicNumber.rational(m, 0))
        run.expect(f"sum of the {m}-th roots of unity vanishes", lambda: total.is_zero())


@SUITE_REGISTRY.register()
def rings(run, ring, rng, samples):
    group = ring.picard_group()
    run.expect("Pic(A) is closed under the group law", lambda: group.is_closed())
    run.expect("h(A) = #Pic(A)", lambda: ring.class_number == group.order)

    ideals = [I for d in range(1, 4) for I in ring.effective_ideals_of_degree(d)]
    for _ in range(min(samples, 10 * len(ideals))):
        a, b = (ideals[int(i)] for i in rng.integers(0, len(ideals), size=2))
        run.expect(
            f"class of {a}*{b}",
            lambda: ring.ideal_class(a * b) == ring.ideal_class(a) * ring.ideal_class(b),
        )

    classes = group.classes()
    if len(classes) ** 3 <= 4096:
        triples = [(a, b, c) for a in classes for b in classes for c in classes]
    else:
        triples = [tuple(classes[int(i)] for i in rng.integers(0, len(classes), size=3)) for _ in range(samples)]
    run.expect(
        "associativity in Pic(A)",
        lambda: [f"({a},{b},{c})" for a, b, c in triples if (a * b) * c != a * (b * c)],
    )

    heads = ring_zeta(ring).coefficients(0, 4)
    for n in range(5):
        run.expect(
            f"#ideals of degree {n} = coefficient of S^{n} in Z_A",
            lambda: sum(ring.count_ideals_by_class(n).values()) == heads[n],
        )

    def representatives_minimal():
        out = []
        for rep in ring.choose_representatives_T("minimal_degree"):
            cls = ring.ideal_class(rep)
            for d in range(rep.degree):
                if ring.ideals_of_degree(cls, d):
                    out.append(f"{rep} has degree {rep.degree}, class {cls} holds an ideal of degree {d}")
        return out

    run.expect("representatives have minimal degree", representatives_minimal)

    a = first_proper_ideal(ring)
    xs = [x for x in integral_elements(ring, 2 * ring.d_inf + 1) if not ring.contains(a, x)]
    for x in sample(xs, rng, min(samples, 8)):

        def coset_minimum(x=x):
            r, w = ring.coset_min_degree(x, a)
            below = ring.coset_elements_up_to_degree(x, a, r - 1)
            at = ring.coset_elements_up_to_degree(x, a, r)
            out = []
            if below:
                out.append(f"{x} + {a} has {len(below)} elements below degree {r}")
            if len(at) != ring.q**w:
                out.append(f"{x} + {a} has {len(at)} elements of degree {r}, expected q^{w}")
            return out

        run.expect(f"coset minimum of {x} + {a}", coset_minimum)


@SUITE_REGISTRY.register()
def zeta(run, ring, rng, samples):
    q = ring.q
    run.expect("curve zeta", lambda: curve_zeta(ring).violations(ring.class_number // ring.d_inf))

    def class_sum():
        total = None
        for z in class_zetas(ring):
            total = z if total is None else total + z
        return total == ring_zeta(ring)

    run.expect("sum of the class zetas = Z_A", class_sum)

    counts = [ring.count_ideals_by_class(n) for n in range(HEAD_DEGREE + 1)]
    for cls in ring.picard_group().classes():
        head = class_zeta(ring, cls).coefficients(0, HEAD_DEGREE)
        run.expect(
            f"head of Z_({cls}) against enumeration",
            lambda cls=cls, head=head: [
                f"S^{n}: {head[n]} != {counts[n][cls.value]}"
                for n in range(HEAD_DEGREE + 1)
                if head[n] != counts[n][cls.value]
            ],
        )

    n = first_proper_ideal(ring)
    ideals = [I for d in (1, 2) for I in ring.effective_ideals_of_degree(d)]
    units = [ring.constant(c) for c in finite_field(q).nonzero_elements()]
    multipliers = [f for f in integral_elements(ring, 2 * ring.d_inf) if f.degree >= 1]
    for a in sample(ideals, rng, min(samples, 3)):
        xs = [x for x in integral_elements(ring, 2 * ring.d_inf + 1) if not ring.contains(a, x)]
        for x in sample(xs, rng, min(samples, 3)):
            z = coset_zeta(ring, x, a)
            run.expect(
                f"Z_{{cx,a}} = Z_{{x,a}} for x = {x}, a = {a}",
                lambda x=x, a=a, z=z: all(coset_zeta(ring, c * x, a) == z for c in units),
            )
            f = sample(multipliers, rng, 1)[0]
            run.expect(
                f"Z_{{fx,fa}} = S^deg f Z_{{x,a}} for f = {f}",
                lambda x=x, a=a, z=z, f=f: coset_zeta(ring, f * x, a * f) == z.shift(f.degree),
            )
            z0 = zero_coset_zeta(ring, a)
            run.expect(
                f"Z_{{x,a}}(q^(r-1)) > Z_{{0,a}}(q^(r-1)) for x = {x}, a = {a}",
                lambda z=z, z0=z0: [
                    f"r = {r}" for r in range(2, 5) if not z.special_value(q, r) > z0.special_value(q, r)
                ],
            )

            def refinement(x=x, a=a, z=z):
                total = None
                for t in coset_representatives(ring, n * a, n):
                    part = coset_zeta(ring, x + t, n * a)
                    total = part if total is None else total + part
                return total == z

            run.expect(f"sum over (x + {a}) / {n}({a}) of Z_{{y,na}} = Z_{{x,a}}", refinement)

    # closed-form coset zetas against the brute-force coset sums
    N = COSET_CHECK_DEGREE if q == 2 else COSET_CHECK_DEGREE - 2
    pairs = [
        (x, a)
        for a in ideals
        for x in integral_elements(ring, 2 * ring.d_inf + 1)
        if not ring.contains(a, x)
    ]
    for x, a in sample(pairs, rng, min(3 * samples, 60)):
        run.expect(
            f"Z_{{{x},{a}}} against the coset sum up to S^{N}",
            lambda x=x, a=a: check_coset_zeta(ring, x, a, N) is not None,
        )


def _orders_hold(ring, n, r):
    # ord_discriminant raises unless the order is a positive integer
    for cls in ring.picard_group().classes():
        ord_discriminant(ring, n, cls, r)
    return True


@SUITE_REGISTRY.register()
def boundary(run, ring, rng, samples):
    classes = ring.picard_group().classes()
    levels = [I for d in (1, 2, 3) for I in ring.effective_ideals_of_degree(d)]
    for n in sample(levels, rng, min(samples, 6)):
        for r in (2, 3, 4):
            run.expect(f"ord Delta_{n} integral and positive, r = {r}", lambda n=n, r=r: _orders_hold(ring, n, r))

    n = first_proper_ideal(ring)
    f = next(x for x in integral_elements(ring, 2 * ring.d_inf + 1) if x.degree >= 1)
    b = ring.principal_ideal(f)
    run.expect(
        f"twist by the principal ideal ({f}) keeps the orders",
        lambda: [
            str(cls)
            for cls in classes
            if ord_discriminant_twisted(ring, n, b, cls, 2).order != ord_discriminant(ring, n, cls, 2).order
        ],
    )
    run.expect("det of the cuspidal matrix is nonzero", lambda: cuspidal_matrix(ring, 2).determinant != 0)
    run.expect("det N = prod of the L-values", lambda: frobenius_det_crosscheck(ring, 2).match)
    if ring.family == "poly":
        run.expect(f"aggregation over u for n = {n}", lambda: aggregation_check(ring, n, 2).holds)


@SUITE_REGISTRY.register()
def independence(run, ring, rng, samples, weight_multiples=(1, 2)):
    ctx = completion_context(ring, 4)
    elements = sample(integral_elements(ring, 2 * ring.d_inf + 1), rng, samples)
    run.expect(
        "v_pi(x) = -deg x / d_inf",
        lambda: [f"{x}" for x in elements if ctx.embed(x).order() != ctx.expected_valuation(x)],
    )
    run.expect(
        "the embedding into K_inf is a ring homomorphism",
        lambda: [v for x, y in zip(elements, elements[1:]) for v in ctx.check_homomorphism(x, y)],
    )
    if ring.family == "poly":
        D = 2
        run.expect(
            "sum' b^(1-q) = -prod (1 - [i]/[i+1])^(q-1)",
            lambda: lattice_sum_at_infinity(ring.q, ring.q - 1, D).agrees_with(carlitz_period_power(ring.q, (ring.q - 1) * (D + 1))),
        )

    def certificate(k):
        cert = independence_certificate(m_matrix(ring, k, CERTIFICATE_PRECISION))
        return [f"({i},{j}) v = {v}: {why}" for i, j, v, why in cert.violations]

    for m in weight_multiples:
        k = m * (ring.q - 1)
        run.expect(f"M(a, b) triangular mod pi with unit diagonal, k = {k}", lambda k=k: certificate(k))
        # the doubled run reuses the degree bound of the certificate
        run.expect(
            f"doubling the precision from {CERTIFICATE_PRECISION // 2} changes nothing, k = {k}",
            lambda k=k: precision_stability(ring, k, CERTIFICATE_PRECISION // 2),
        )
    run.expect("|x| >= 1 on a^-1 for a in T", lambda: check_minimal_degree_claim(ring).violations)


@SUITE_REGISTRY.register()
def expansions(run, ring, rng, samples):
    if ring.family != "poly":
        return
    q = ring.q
    N = q**3
    product = delta_product_series(q, N)
    eisenstein = delta_via_eisenstein_series(q, N)
    run.expect(f"Delta_T: product route = Eisenstein route to O(t^{N + 1})", lambda: compare_routes(product, eisenstein).equal)

    n = first_proper_ideal(ring)
    run.expect(
        "ord_t Delta_T = (q - 1) ord_u Delta_T",
        lambda: product.valuation == (q - 1) * ord_discriminant(ring, n, ring.picard_group().identity(), 2).order,
    )

    fq = finite_field(q)
    T = FqFraction.T(fq)
    module = DrinfeldModuleCoeffs(q, 2, T, (T, FqFraction(fq, 1), FqFraction(fq, 1)))
    K = q**2
    generic = goss_polys(q, exp_from_module(module, 2), K)
    carlitz = goss_polys(q, None, K)
    run.expect(
        "gamma(k) is the same for two lattices",
        lambda: [f"k = {k}" for k in range(1, K + 1) if generic.gamma(k) != carlitz.gamma(k)],
    )

    for d in (1, 2):
        for m in sample(list(monic_polys(fq.GF, d)), rng, min(samples, 3)):
            run.expect(f"S_({poly_str(m)}) has coefficients in F_q[T]", lambda m=m: s_polynomial(q, m).violations())
            run.expect(
                f"graded weights of symbolic S_({poly_str(m)})",
                lambda m=m: s_polynomial(q, m, rank=2, symbolic=True).violations(),
            )

    carlitz_module = DrinfeldModuleCoeffs.carlitz(q)
    exp = relations_solver("module", "exp", carlitz_module, q, K=4)
    run.expect("e(Tz) = phi_T(e(z))", lambda: [r for r in commutation_residuals(carlitz_module, exp) if not r.is_zero()])
    run.expect(
        "module -> exp -> module",
        lambda: relations_solver("exp", "module", exp, q, K=4, rank=1, base=carlitz_module.base) == carlitz_module,
    )
    E = relations_solver("exp", "eisenstein", exp, q)
    run.expect(
        "exp -> eisenstein -> exp",
        lambda: relations_solver("eisenstein", "exp", E, q, K=len(exp) - 1).alphas == exp.alphas,
    )


@SUITE_REGISTRY.register()
def counting(run, ring, rng, samples):
    if ring.family != "poly":
        return
    levels = [n for d in (1, 2) for n in sample(ring.effective_ideals_of_degree(d), rng, min(samples, 4))]
    for n in levels:
        expected = c_r1(ring, n, 2)
        run.expect(f"primitive summands of (A/{n})^2", lambda n=n, e=expected: primitive_summand_count(ring, n, 2) == e)
        # a cyclic summand A/n has #(A/n)^* generators and F^* of them share a primitive class
        run.expect(
            f"cyclic summands of (A/{n})^2",
            lambda n=n, e=expected: cyclic_summand_count(ring, n, 2) * unit_count(ring, n) == (ring.q - 1) * e,
        )
        run.expect(
            f"Moebius count of primitive vectors of (A/{n})^2",
            lambda n=n: primitive_count_by_mobius(ring, n, 2) == len(primitive_vectors(ring, n, 2)),
        )
