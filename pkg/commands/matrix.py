from boundary import cuspidal_matrix, frobenius_det_crosscheck
from independence import check_minimal_degree_claim, independence_certificate, m_matrix
from utils.errors import ParameterError
from utils.tools import format_fraction

from .base import CommandBase
from .registry import COMMAND_REGISTRY
from .schemas import CuspidalBlock, FrobeniusBlock, MatrixRecord, MMatrixRecord

MODES = ("cuspidal", "mmatrix", "both")


def mmatrix_record(m, cert):
    return MMatrixRecord(
        k=m.k,
        precision=m.precision,
        degree_bound=m.degree_bound,
        reps=m.reps,
        valuations=cert.valuations,
        diagonal_residues=cert.diagonal_residues,
        upper_residues={f"{i},{j}": v for (i, j), v in cert.upper_residues.items()},
        violations=[f"({i},{j}) v = {v}: {why}" for i, j, v, why in cert.violations],
        det_residue=cert.det_residue,
        verdict=cert.verdict(),
    )


@COMMAND_REGISTRY.register()
class Matrix(CommandBase):
    """The cuspidal divisor matrix with its Frobenius-determinant check, and the M(a, b) certificate."""

    def check_cfg(self, cfg):
        super().check_cfg(cfg)
        if cfg.MATRIX.MODE not in MODES:
            raise ParameterError(f"unknown matrix mode {cfg.MATRIX.MODE!r}; choose from {MODES}")

    def run(self):
        mode = self.cfg.MATRIX.MODE
        record = MatrixRecord(ring=str(self.ring), rank=self.r, mode=mode)
        if mode in ("cuspidal", "both"):
            self._run_cuspidal(record)
        if mode in ("mmatrix", "both"):
            self._run_mmatrix(record)
        return record

    def _run_cuspidal(self, record):
        ring, r = self.ring, self.r
        b = self.ideal(self.cfg.MATRIX.B or self.cfg.IDEAL.B)
        mat = cuspidal_matrix(ring, r, b=b)
        print(mat.format())
        print(f"|det| = {mat.index}")
        record.cuspidal = CuspidalBlock(
            b=mat.b,
            rows=mat.rows,
            columns=mat.columns,
            entries=mat.entries,
            determinant=mat.determinant,
            index=mat.index,
        )
        check = frobenius_det_crosscheck(ring, r, b=b)
        record.frobenius = FrobeniusBlock(
            det_N=format_fraction(check.det_N),
            l_values={label: str(v) for label, v in check.l_values},
            l_product=format_fraction(check.l_product),
            nonvanishing=check.nonvanishing,
            match=check.match,
            sign=check.sign,
        )
        if not check.match:
            self.problems.append(
                f"det N = {format_fraction(check.det_N)} against prod L = {format_fraction(check.l_product)}"
            )

    def _run_mmatrix(self, record):
        ring, cfg = self.ring, self.cfg
        claim = check_minimal_degree_claim(ring)
        record.minimal_degree_claim = claim.violations
        self.problems.extend(claim.violations)
        for multiple in cfg.MMATRIX.WEIGHT_MULTIPLES:
            k = multiple * (ring.q - 1)
            m = m_matrix(ring, k, cfg.MMATRIX.PRECISION)
            cert = independence_certificate(m)
            print(f"M(a, b) for k = {k}, valuations mod pi^{m.precision}:")
            print(m.format())
            print(f"strictly upper triangular mod pi_inf: {cert.verdict()}")
            record.mmatrices.append(mmatrix_record(m, cert))
            if not cert.ok:
                self.problems.append(f"M(a, b) certificate fails for k = {k}: {cert.violations}")
