import functools
import re

from dassl.utils import Registry

from utils.errors import ParameterError

RING_REGISTRY = Registry("RING")


def lookup_family(registry, family):
    """The class registered in ``registry`` whose ``family`` is ``family``, or None."""
    for name in registry.registered_names():
        obj = registry.get(name)
        if getattr(obj, "family", None) == family:
            return obj
    return None


def parse_ring_spec(text):
    """Split ``"family key=value ..."`` into (family, params)."""
    text = " ".join(text.split())
    if not text:
        raise ParameterError("empty ring specification")
    family, _, rest = text.partition(" ")
    params = {}
    for key, value in re.findall(r"(\w+)=(\[[^\]]*\]|\S+)", rest):
        params[key] = value
    leftover = re.sub(r"(\w+)=(\[[^\]]*\]|\S+)", "", rest).strip()
    if leftover:
        raise ParameterError(f"cannot read {leftover!r} in ring specification {text!r}")
    if "q" not in params:
        raise ParameterError(f"ring specification {text!r} has no q=")
    return family, params


@functools.lru_cache(maxsize=32)
def build_ring(spec):
    """Build (and memoize) a coefficient ring from its textual specification."""
    family, params = parse_ring_spec(spec)
    ring_cls = lookup_family(RING_REGISTRY, family)
    if ring_cls is None:
        families = sorted(RING_REGISTRY.get(name).family for name in RING_REGISTRY.registered_names())
        raise ParameterError(f"unknown ring family {family!r}; choose from {families}")
    params = dict(params)
    ring = ring_cls.from_params(params)
    if params:
        raise ParameterError(f"unused ring parameters {sorted(params)} for {family!r}")
    print(f"Building ring: {ring}")
    return ring
