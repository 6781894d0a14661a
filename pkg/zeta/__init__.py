from .zeta_function import ZetaFunction, geometric_tail
from .curve import CurveZeta, curve_zeta, ring_zeta
from .partial import (
    check_coset_zeta,
    class_zeta,
    class_zetas,
    coset_counts,
    coset_zeta,
    ideal_count_by_riemann_roch,
    zero_coset_zeta,
)
from .characters import Character, LFunction, characters, l_function
