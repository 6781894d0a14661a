from boundary import (
    aggregation_check,
    divisor_of_discriminant,
    ord_canonical_delta,
    ord_discriminant_twisted,
    ord_division_form,
    ord_higher_eisenstein,
)
from utils.errors import ParameterError
from utils.tools import format_fraction

from .base import CommandBase
from .registry import COMMAND_REGISTRY
from .schemas import AggregationEntry, OrderEntry, OrderRecord

MODES = ("discriminant", "division", "canonical")


def order_entry(report):
    return OrderEntry(
        target=report.target,
        boundary_class=report.boundary_class,
        order=format_fraction(report.order),
        unit=report.unit,
        order_t_n=format_fraction(report.order_t_n) if report.unit == "t_n" or report.ramification else None,
        zeta_values={label: format_fraction(v) for label, v in report.zeta_values},
    )


@COMMAND_REGISTRY.register()
class Orders(CommandBase):
    """Vanishing orders along the boundary divisors (a), a in Pic(A)."""

    def check_cfg(self, cfg):
        super().check_cfg(cfg)
        if cfg.ORDERS.MODE not in MODES:
            raise ParameterError(f"unknown orders mode {cfg.ORDERS.MODE!r}; choose from {MODES}")

    def run(self):
        mode = self.cfg.ORDERS.MODE
        record = OrderRecord(ring=str(self.ring), rank=self.r, mode=mode)
        getattr(self, f"_run_{mode}")(record)
        for e in record.entries:
            print(f"ord_({e.boundary_class}) {e.target} = {e.order} [{e.unit}]")
        return record

    def _run_discriminant(self, record):
        ring, r = self.ring, self.r
        n, b = self.level(), self.ideal(self.cfg.IDEAL.B)
        for cls in ring.picard_group().classes():
            record.entries.append(order_entry(ord_discriminant_twisted(ring, n, b, cls, r)))
        record.divisor = str(divisor_of_discriminant(ring, n, b, r))

    def _run_division(self, record):
        ring, r, cfg = self.ring, self.r, self.cfg
        n, a = self.level(), self.ideal(cfg.IDEAL.A)
        if cfg.IDEAL.U1.strip():
            u1 = self.element(cfg.IDEAL.U1)
            if cfg.ORDERS.WEIGHT == 1:
                report = ord_division_form(ring, a, n, u1, r)
            else:
                report = ord_higher_eisenstein(ring, a, n, u1, cfg.ORDERS.WEIGHT, r)
            record.entries.append(order_entry(report))
            return
        agg = aggregation_check(ring, n, r, a)
        for report in agg.reports:
            record.entries.append(order_entry(report))
        record.aggregation = AggregationEntry(
            n=agg.n,
            a=agg.a,
            sum_u1=format_fraction(agg.sum_u1),
            sum_all_u=format_fraction(agg.sum_all_u),
            ramification=agg.ramification,
            ord_u=format_fraction(agg.ord_u),
            holds=agg.holds,
        )
        if not agg.holds:
            self.problems.append(
                f"sum over u of ord E_1,u = {agg.sum_all_u} != {agg.ramification} * {agg.ord_u}"
            )

    def _run_canonical(self, record):
        ring, r = self.ring, self.r
        for cls in ring.picard_group().classes():
            out = ord_canonical_delta(ring, cls, r)
            record.entries.append(order_entry(out.report))
        cert = out.certificate
        record.exponents = {
            "d": cert.d,
            "d_prime": cert.d_prime,
            "x": cert.x,
            "x_prime": cert.x_prime,
            "weight": out.weight,
            "type": out.type_h,
        }
