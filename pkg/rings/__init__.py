from .registry import RING_REGISTRY, build_ring, lookup_family, parse_ring_spec
from .base import (
    CoefficientRing,
    CosetIsIdeal,
    FieldElement,
    IdealRep,
    IdealSpace,
    PicClass,
    PicGroup,
    Place,
)
from .genus_zero import PolynomialRing, ShiftedInfinity
from .elliptic import CurveFunction, EllipticRing, WeierstrassCurve
from .parsing import parse_element, parse_ideal
from .counting import (
    c_r1,
    cyclic_summand_count,
    primitive_count_by_mobius,
    primitive_summand_count,
    primitive_vectors,
    unit_count,
)
