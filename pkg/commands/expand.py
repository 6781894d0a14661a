from expansions import compare_routes, delta_product_series, delta_via_eisenstein_series, t_level_relation
from utils.errors import ParameterError

from .base import CommandBase
from .registry import COMMAND_REGISTRY
from .schemas import ExpansionRecord, Term


def terms_of(series):
    return [Term(exponent=n, coefficient=series.ring.format(c)) for n, c in series.terms()]


@COMMAND_REGISTRY.register()
class Expand(CommandBase):
    """t-expansion of Delta_T over F_q(T) by the product and the Eisenstein routes."""

    def check_cfg(self, cfg):
        super().check_cfg(cfg)
        if cfg.RANK != 2:
            raise ParameterError(f"expansions are computed for rank 2, got r = {cfg.RANK}")

    def run(self):
        cfg = self.cfg
        if self.ring.family != "poly":
            raise ParameterError(f"expansions need A = F_q[T], got {self.ring}")
        q = cfg.EXPAND.Q or self.ring.q
        N = q**3 if cfg.EXPAND.PRECISION < 0 else cfg.EXPAND.PRECISION

        product = delta_product_series(q, N)
        eisenstein = delta_via_eisenstein_series(q, N)
        cmp = compare_routes(product, eisenstein)
        verdict = "EQUAL" if cmp.equal else "UNEQUAL"
        print(f"Delta_T to O(t^{cmp.precision}): routes {verdict}")
        if not cmp.equal:
            self.problems.append(f"the two routes first differ at t^{cmp.first_difference}")

        leading = product.series.terms()[0]
        if leading[0] != q - 1 or leading[1] != -product.series.ring.one:
            self.problems.append(f"leading term of Delta_T is not -t^{q - 1}")

        record = ExpansionRecord(
            ring=str(self.ring),
            q=q,
            precision=N,
            weight=product.weight,
            pi_bar_exponent=product.pi_bar_exponent,
            product_route=terms_of(product.series),
            eisenstein_route=terms_of(eisenstein.series),
            verdict=verdict,
            first_difference=cmp.first_difference,
            leading=f"({product.series.ring.format(leading[1])})*t^{leading[0]}",
        )
        if cfg.EXPAND.LEVEL.strip():
            relation = t_level_relation(q, cfg.EXPAND.LEVEL, N + 1)
            record.level = cfg.EXPAND.LEVEL
            record.level_relation = terms_of(relation)
        return record
