"""The matrix M(a, b) = sum'_{t in a b^-1 mod F*} t^-k over O_inf, and its certificate.

Rows and columns run over the minimal-degree representatives T of Pic(A).
Triangularity modulo pi (entries below the diagonal in the maximal ideal,
diagonal entries = 1 mod pi) makes M invertible over O_inf.
"""
from dataclasses import dataclass, field

import numpy as np

from arith.series import TruncatedSeries
from utils.errors import ConsistencyError, ParameterError, PrecisionError

from .completion import VARIABLE, completion_context


@dataclass
class MMatrix:
    ring: str
    k: int
    precision: int
    degree_bound: int
    reps: list
    entries: list
    term_counts: list = field(default_factory=list)
    residue_field: object = None

    @property
    def size(self):
        return len(self.reps)

    def valuation(self, i, j):
        """v_pi of an entry; ``precision`` stands for "no nonzero digit below pi^precision"."""
        return min(self.entries[i][j].valuation, self.precision)

    def valuation_table(self):
        return [[self.valuation(i, j) for j in range(self.size)] for i in range(self.size)]

    def residue(self, i, j):
        e = self.entries[i][j]
        if e.valuation < 0:
            raise ConsistencyError(f"M[{i}][{j}] has valuation {e.valuation} and no residue in O_inf")
        return e.coefficient(0)

    def format(self):
        width = max(3, max(len(r) for r in self.reps))
        lines = [" " * (width + 1) + " ".join(r.rjust(width) for r in self.reps)]
        for label, row in zip(self.reps, self.valuation_table()):
            cells = [(f">={v}" if v >= self.precision else str(v)).rjust(width) for v in row]
            lines.append(label.rjust(width) + " " + " ".join(cells))
        return "\n".join(lines)


def default_degree_bound(k, precision, d_inf):
    """Least D such that every element of degree > D gives a term of valuation >= P."""
    return d_inf * -(-precision // k) - 1


def m_matrix(ring, k, precision=4, degree_bound=None, reps=None):
    q, d_inf = ring.q, ring.d_inf
    if k < 1 or k % (q - 1):
        raise ParameterError(f"weight k = {k} is not a positive multiple of q - 1 = {q - 1}")
    if degree_bound is None:
        degree_bound = default_degree_bound(k, precision, d_inf)
    # elements of K have degrees in d_inf Z, so the first dropped degree is d_inf (D // d_inf + 1)
    cut = k * (degree_bound // d_inf + 1)
    if cut < precision:
        raise PrecisionError(
            f"degree bound D = {degree_bound} drops terms of valuation {cut} below pi^{precision}"
        )
    if reps is None:
        reps = ring.choose_representatives_T("minimal_degree")
    ctx = completion_context(ring, precision)
    entries, counts = [], []
    for a in reps:
        row, count_row = [], []
        for b in reps:
            entry, n = _entry(ring, ctx, a * b.inverse(), k, precision, degree_bound)
            row.append(entry)
            count_row.append(n)
        entries.append(row)
        counts.append(count_row)
    return MMatrix(
        ring=str(ring),
        k=k,
        precision=precision,
        degree_bound=degree_bound,
        reps=[str(a) for a in reps],
        entries=entries,
        term_counts=counts,
        residue_field=ctx.residue_field,
    )


def _entry(ring, ctx, ideal, k, precision, degree_bound):
    total = TruncatedSeries.zero(ctx.coefficients, VARIABLE, precision)
    n = 0
    for t in ring.ideal_space(ideal, degree_bound).representatives():
        v = -k * ctx.expected_valuation(t)
        if v >= precision:
            continue
        term = ctx.embed(t, precision - v) ** (-k)
        if term.valuation != v:
            raise ConsistencyError(f"v_pi({t}^-{k}) = {term.valuation}, expected {v}")
        total = total + term
        n += 1
    return total.truncate(precision), n


@dataclass
class IndependenceCertificate:
    ring: str
    k: int
    precision: int
    valuations: list
    diagonal_residues: list
    upper_residues: dict
    violations: list = field(default_factory=list)
    det_residue: int = 0

    @property
    def ok(self):
        return not self.violations and self.det_residue != 0

    def verdict(self):
        return "PASS" if self.ok else "FAIL"


def independence_certificate(m):
    """Entries in O_inf, strictly positive valuation below the diagonal, diagonal = 1 mod pi."""
    n = m.size
    violations = []
    residues = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = m.valuation(i, j)
            if v < 0:
                violations.append((i, j, v, "entry outside O_inf"))
                continue
            residues[i][j] = m.residue(i, j)
            if i > j and v == 0:
                violations.append((i, j, v, "below-diagonal entry is a unit"))
            if i == j and residues[i][j] != 1:
                violations.append((i, j, v, f"diagonal residue {int(residues[i][j])} != 1"))
    det = 0
    if not any(r is None for row in residues for r in row):
        GF = m.residue_field.GF
        det = int(np.linalg.det(GF([[int(r) for r in row] for row in residues])))
    return IndependenceCertificate(
        ring=m.ring,
        k=m.k,
        precision=m.precision,
        valuations=m.valuation_table(),
        diagonal_residues=[int(residues[i][i]) if residues[i][i] is not None else None for i in range(n)],
        upper_residues={
            (i, j): int(residues[i][j]) for i in range(n) for j in range(i + 1, n) if residues[i][j] is not None
        },
        violations=violations,
        det_residue=det,
    )


def precision_stability(ring, k, precision):
    """Differences in valuations or residues between precision P and 2P (empty when stable)."""
    low = m_matrix(ring, k, precision)
    high = m_matrix(ring, k, 2 * precision)
    out = []
    for i in range(low.size):
        for j in range(low.size):
            v_low, v_high = low.valuation(i, j), high.valuation(i, j)
            if v_low < precision and v_low != v_high:
                out.append(f"v(M[{i}][{j}]) = {v_low} at P = {precision}, {v_high} at P = {2 * precision}")
            elif v_low >= precision and v_high < precision:
                out.append(f"M[{i}][{j}] gains a digit below pi^{precision} at P = {2 * precision}")
            if v_low >= 0 and low.residue(i, j) != high.residue(i, j):
                out.append(f"residue of M[{i}][{j}] changes with the precision")
    return out


@dataclass
class MinimalDegreeClaim:
    rows: list
    violations: list

    @property
    def holds(self):
        return not self.violations


def check_minimal_degree_claim(ring, reps=None):
    """Every nonzero x in a^-1, a in T, has deg x >= 0.

    A is contained in a^-1, so the constants always give degree-0 elements;
    a member of negative degree would make x a an integral ideal of the class
    of a with smaller degree.
    """
    if reps is None:
        reps = ring.choose_representatives_T("minimal_degree")
    rows, violations = [], []
    for a in reps:
        degrees = [x.degree for x in ring.ideal_space(a.inverse(), 0).representatives()]
        rows.append((str(a), sum(1 for d in degrees if d == 0), ring.is_principal(a)))
        if any(d < 0 for d in degrees):
            violations.append(f"{a}^-1 has an element of degree {min(degrees)} < 0")
        if not degrees:
            violations.append(f"{a}^-1 misses the constants")
    return MinimalDegreeClaim(rows, violations)
