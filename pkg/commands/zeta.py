from fractions import Fraction

from utils.errors import PoleError
from utils.tools import format_fraction
from zeta import characters, check_coset_zeta, class_zetas, curve_zeta, l_function, ring_zeta

from .base import CommandBase
from .registry import COMMAND_REGISTRY
from .schemas import ZetaEntry, ZetaRecord


def zeta_entry(z, q, r, label, num_coeffs):
    try:
        value = format_fraction(z.special_value(q, r))
    except PoleError:
        value = None
    lo = z.lowest_exponent()
    return ZetaEntry(
        label=label,
        function=str(z),
        lowest_exponent=lo,
        coefficients=[format_fraction(c) for c in z.coefficients(lo, lo + num_coeffs - 1)],
        special_value=value,
    )


@COMMAND_REGISTRY.register()
class Zeta(CommandBase):
    """Z_K, Z_A, the class zetas Z_(c), requested coset zetas and the L-values at s = 1 - r."""

    def run(self):
        cfg, ring, r = self.cfg, self.ring, self.r
        q = ring.q
        n = cfg.ZETA.NUM_COEFFS
        curve = curve_zeta(ring)
        z_A = ring_zeta(ring)
        group = ring.picard_group()
        print(f"Pic(A) has order {group.order}; P(S) = {curve}")

        zetas = [zeta_entry(z_A, q, r, "Z_A", n)]
        bound = min(cfg.ENUM.DEGREE_BOUND, n - 1)
        counts = [ring.count_ideals_by_class(d) for d in range(bound + 1)]
        total = None
        for cls, z in zip(group.classes(), class_zetas(ring)):
            zetas.append(zeta_entry(z, q, r, f"Z_({cls.label})", n))
            total = z if total is None else total + z
            for d, c in enumerate(z.coefficients(0, bound)):
                if c != counts[d][cls.value]:
                    self.problems.append(
                        f"Z_({cls.label}) predicts {c} ideals of degree {d}, enumeration finds {counts[d][cls.value]}"
                    )
        if total != z_A:
            self.problems.append(f"sum of the class zetas {total} differs from Z_A = {z_A}")

        identities = []
        try:
            value = (1 - Fraction(q) ** r) * z_A.special_value(q, r)
            identities.append(f"(1-q^r)*zeta_A(1-{r}) = {format_fraction(value)}")
        except PoleError:
            identities.append(f"zeta_A has a pole at s = 1-{r}")

        cosets = []
        requests = list(cfg.ZETA.COSETS)
        if cfg.IDEAL.X.strip():
            requests.append(f"{cfg.IDEAL.X} | {cfg.IDEAL.A}")
        for text in requests:
            x_text, _, a_text = text.partition("|")
            x, a = self.element(x_text.strip()), self.ideal(a_text.strip() or "A")
            z = check_coset_zeta(ring, x, a, cfg.ZETA.CHECK_DEGREE, max_dim=cfg.ENUM.MAX_DIM)
            cosets.append(zeta_entry(z, q, r, f"Z_{{{x},{a}}}", n))

        l_values = {}
        for chi in characters(group):
            l_values[str(chi)] = str(l_function(ring, chi).special_value(r))

        return ZetaRecord(
            ring=str(ring),
            rank=r,
            curve_numerator=str(curve),
            class_number=group.order,
            zetas=zetas,
            cosets=cosets,
            l_values=l_values,
            identities=identities,
        )
