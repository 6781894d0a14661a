"""Result records of the commands.

Exact rationals travel as "p/q" strings, polynomials and rational functions
in their canonical printed forms, so every record survives a JSON round trip.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class Record(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str
    ring: str


class ZetaEntry(BaseModel):
    label: str
    function: str
    lowest_exponent: int = 0
    coefficients: List[str] = Field(default_factory=list)
    # None when S = q^(r-1) is a pole
    special_value: Optional[str] = None


class ZetaRecord(Record):
    command: str = "zeta"
    rank: int
    curve_numerator: str
    class_number: int
    zetas: List[ZetaEntry] = Field(default_factory=list)
    cosets: List[ZetaEntry] = Field(default_factory=list)
    l_values: Dict[str, str] = Field(default_factory=dict)
    identities: List[str] = Field(default_factory=list)


class OrderEntry(BaseModel):
    target: str
    boundary_class: str
    order: str
    unit: str
    order_t_n: Optional[str] = None
    zeta_values: Dict[str, str] = Field(default_factory=dict)


class AggregationEntry(BaseModel):
    n: str
    a: str
    sum_u1: str
    sum_all_u: str
    ramification: int
    ord_u: str
    holds: bool


class OrderRecord(Record):
    command: str = "orders"
    rank: int
    mode: str
    entries: List[OrderEntry] = Field(default_factory=list)
    divisor: Optional[str] = None
    aggregation: Optional[AggregationEntry] = None
    exponents: Dict[str, int] = Field(default_factory=dict)


class CuspidalBlock(BaseModel):
    b: str
    rows: List[str]
    columns: List[str]
    entries: List[List[int]]
    determinant: int
    index: int


class FrobeniusBlock(BaseModel):
    det_N: str
    l_values: Dict[str, str] = Field(default_factory=dict)
    l_product: str
    nonvanishing: bool
    match: bool
    sign: int


class MMatrixRecord(BaseModel):
    k: int
    precision: int
    degree_bound: int
    reps: List[str]
    valuations: List[List[int]]
    diagonal_residues: List[Optional[int]]
    upper_residues: Dict[str, int] = Field(default_factory=dict)
    violations: List[str] = Field(default_factory=list)
    det_residue: int
    verdict: str


class MatrixRecord(Record):
    command: str = "matrix"
    rank: int
    mode: str
    cuspidal: Optional[CuspidalBlock] = None
    frobenius: Optional[FrobeniusBlock] = None
    mmatrices: List[MMatrixRecord] = Field(default_factory=list)
    minimal_degree_claim: List[str] = Field(default_factory=list)


class Term(BaseModel):
    exponent: int
    coefficient: str


class ExpansionRecord(Record):
    command: str = "expand"
    q: int
    precision: int
    weight: int
    pi_bar_exponent: int
    product_route: List[Term] = Field(default_factory=list)
    eisenstein_route: List[Term] = Field(default_factory=list)
    verdict: str
    first_difference: Optional[int] = None
    leading: str
    level: Optional[str] = None
    level_relation: List[Term] = Field(default_factory=list)


class SuiteResult(BaseModel):
    suite: str
    ring: str
    passed: int
    failed: int
    failures: List[str] = Field(default_factory=list)


class SelftestRecord(Record):
    command: str = "selftest"
    seed: int
    results: List[SuiteResult] = Field(default_factory=list)
    total_passed: int = 0
    total_failed: int = 0

    @property
    def ok(self):
        return self.total_failed == 0
